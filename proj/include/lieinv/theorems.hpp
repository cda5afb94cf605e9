#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/characters.hpp"
#include "lieinv/root_system.hpp"

namespace lieinv::theorems {

/// +1 orthogonal, -1 symplectic, 0 not self-dual.
enum class FSIndicator : int { Symplectic = -1, NotSelfDual = 0, Orthogonal = 1 };

std::string to_string(FSIndicator fs);

/// Classification of root pairs with <gamma, alpha^vee> <= -2.
struct PairingClass {
  enum class Kind { None, EqualNegative, WeaklyOrthShift, G2ShortLong };
  Kind kind = Kind::None;
  std::int64_t product = 0;   // <gamma, alpha^vee>
  std::optional<Root> beta;   // gamma + alpha, for WeaklyOrthShift
};

std::string to_string(PairingClass::Kind kind);

PairingClass classify_pairing(const Root& gamma, const Root& alpha);

/// Orthogonal roots whose sum is again a root.
bool weakly_orthogonal(const Root& beta, const Root& alpha);

struct Table1Entry {
  std::size_t simple_index;  // 0-based j of the short simple root
  Root beta;
};

/// All (j, beta) with alpha_j short simple and beta weakly orthogonal to it,
/// found by exhaustive scan. Empty for simply-laced factors and G2.
std::vector<Table1Entry> enumerate_table1(const RootSystem& g);

/// Which branch of the closed form produced the value.
enum class ClosedFormRule {
  SelfPaired,        // opposition(nu) == mu
  GenericRoot,       // difference is a root, no exception: 1
  WeaklyOrthogonal,  // exception: short simple root with label 0, beta weakly orthogonal to it
  G2LabelZero,       // exception: G2, <mu, alpha1^vee> = 0, beta = -(a1+a2) or 2a1+a2
  G2LabelOne,        // exception: G2, <mu, alpha1^vee> = 1, beta = a1+a2 or -(2a1+a2)
  NotRoot,           // difference is neither zero nor a root: 0
};

std::string to_string(ClosedFormRule rule);

struct ClosedForm {
  std::int64_t value = 0;
  ClosedFormRule rule = ClosedFormRule::NotRoot;
  std::optional<Root> beta;
};

/// dim (adj (x) V_mu (x) V_nu)^g from the closed form, with the branch taken.
ClosedForm invariant_dim_closed_detailed(const Weight& mu, const Weight& nu);
std::int64_t invariant_dim_closed(const Weight& mu, const Weight& nu);

/// (-1)^<mu, 2 rho^vee> for self-dual mu, 0 otherwise.
FSIndicator frobenius_schur(const Weight& mu);

/// Trivial multiplicity in S^2 V_mu minus that in Lambda^2 V_mu.
FSIndicator fs_oracle(const Weight& mu, std::size_t cap = characters::kDefaultProductCap);

struct SplitResult {
  std::int64_t b = 0;
  std::int64_t b_S = 0;
  std::int64_t b_Lambda = 0;
  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// b, b_S, b_Lambda from the closed form.
SplitResult split_closed(const Weight& mu);

/// Adjoint multiplicities in S^2 V_mu and Lambda^2 V_mu from characters.
SplitResult split_oracle(const Weight& mu, std::size_t cap = characters::kDefaultProductCap);

/// True iff the adjoint occurs only in S^2 V_mu or only in Lambda^2 V_mu.
bool kw_question(const Weight& mu);

/// True iff every j with <mu, alpha_j^vee> > 0 has a self-dual w_j.
bool in_self_dual_span(const Weight& mu);

}  // namespace lieinv::theorems
