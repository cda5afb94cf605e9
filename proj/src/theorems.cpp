#include "lieinv/theorems.hpp"

#include <algorithm>

#include "lieinv/tensor.hpp"
#include "lieinv/weyl.hpp"

namespace lieinv::theorems {

std::string to_string(FSIndicator fs) {
  switch (fs) {
    case FSIndicator::Symplectic: return "symplectic";
    case FSIndicator::NotSelfDual: return "not-self-dual";
    case FSIndicator::Orthogonal: return "orthogonal";
  }
  return "?";
}

std::string to_string(PairingClass::Kind kind) {
  switch (kind) {
    case PairingClass::Kind::None: return "none";
    case PairingClass::Kind::EqualNegative: return "equal-negative";
    case PairingClass::Kind::WeaklyOrthShift: return "weakly-orthogonal-shift";
    case PairingClass::Kind::G2ShortLong: return "g2-short-long";
  }
  return "?";
}

std::string to_string(ClosedFormRule rule) {
  switch (rule) {
    case ClosedFormRule::SelfPaired: return "self-paired";
    case ClosedFormRule::GenericRoot: return "generic-root";
    case ClosedFormRule::WeaklyOrthogonal: return "weakly-orthogonal";
    case ClosedFormRule::G2LabelZero: return "g2-label-zero";
    case ClosedFormRule::G2LabelOne: return "g2-label-one";
    case ClosedFormRule::NotRoot: return "not-root";
  }
  return "?";
}

namespace {

void require_same(const Root& a, const Root& b) {
  if (a.algebra != b.algebra || a.algebra == nullptr) throw MismatchedAlgebra();
}

void require_dominant(const Weight& mu, const char* what) {
  if (!mu.is_dominant()) throw NotDominant(std::string(what) + " requires a dominant weight, got " + mu.str());
}

// <gamma, alpha^vee> for two roots.
std::int64_t root_pairing(const Root& gamma, const Root& alpha) {
  const RootSystem& g = *alpha.algebra;
  const std::int64_t num = 2 * g.inner_root_scaled(gamma.labels, alpha);
  return num / g.root_norm_scaled(alpha);
}

const Root* sum_root(const Root& a, const Root& b) {
  Labels s = a.coords;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] += b.coords[k];
  return a.algebra->find_root(s);
}

}  // namespace

PairingClass classify_pairing(const Root& gamma, const Root& alpha) {
  require_same(gamma, alpha);
  PairingClass out;
  out.product = root_pairing(gamma, alpha);
  if (out.product >= -1) return out;
  if (&negate(alpha) == gamma.algebra->find_root(gamma.coords)) {
    out.kind = PairingClass::Kind::EqualNegative;
    return out;
  }
  if (out.product == -3) {
    out.kind = PairingClass::Kind::G2ShortLong;
    return out;
  }
  if (const Root* beta = sum_root(gamma, alpha); beta && weakly_orthogonal(*beta, alpha)) {
    out.kind = PairingClass::Kind::WeaklyOrthShift;
    out.beta = *beta;
    return out;
  }
  throw std::logic_error("root pair with pairing <= -2 fits no known case");
}

bool weakly_orthogonal(const Root& beta, const Root& alpha) {
  require_same(beta, alpha);
  if (alpha.algebra->inner_root_scaled(beta.labels, alpha) != 0) return false;
  return sum_root(beta, alpha) != nullptr;
}

std::vector<Table1Entry> enumerate_table1(const RootSystem& g) {
  std::vector<Table1Entry> out;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const Root& alpha = g.simple_root(j);
    if (alpha.is_long) continue;
    for (const Root& beta : g.roots())
      if (weakly_orthogonal(beta, alpha)) out.push_back({j, beta});
  }
  return out;
}

ClosedForm invariant_dim_closed_detailed(const Weight& mu, const Weight& nu) {
  if (!mu.same_algebra(nu)) throw MismatchedAlgebra();
  require_dominant(mu, "invariant_dim_closed");
  require_dominant(nu, "invariant_dim_closed");
  const RootSystem& g = mu.algebra();
  const Weight diff = weyl::opposition(nu) - mu;

  ClosedForm out;
  if (diff.is_zero()) {
    out.rule = ClosedFormRule::SelfPaired;
    out.value = std::count_if(mu.labels().begin(), mu.labels().end(), [](std::int64_t x) { return x > 0; });
    return out;
  }
  Labels coords;
  const Root* beta = g.integral_coords(diff.labels(), coords) ? g.find_root(coords) : nullptr;
  if (!beta) {
    out.rule = ClosedFormRule::NotRoot;
    return out;
  }
  out.beta = *beta;

  // Short simple root of beta's factor with label 0 that beta is weakly orthogonal to.
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const Root& alpha = g.simple_root(j);
    if (alpha.is_long || mu[j] != 0 || alpha.factor != beta->factor) continue;
    if (weakly_orthogonal(*beta, alpha)) {
      out.rule = ClosedFormRule::WeaklyOrthogonal;
      return out;
    }
  }

  const SimpleType& type = g.spec().factors[beta->factor];
  if (type.family == Family::G) {
    const std::size_t a1 = g.factor_offset(beta->factor);
    const std::int64_t c1 = beta->coords[a1];
    const std::int64_t c2 = beta->coords[a1 + 1];
    auto is = [&](std::int64_t x, std::int64_t y) { return c1 == x && c2 == y; };
    if (mu[a1] == 0 && (is(-1, -1) || is(2, 1))) {
      out.rule = ClosedFormRule::G2LabelZero;
      return out;
    }
    if (mu[a1] == 1 && (is(1, 1) || is(-2, -1))) {
      out.rule = ClosedFormRule::G2LabelOne;
      return out;
    }
  }
  out.rule = ClosedFormRule::GenericRoot;
  out.value = 1;
  return out;
}

std::int64_t invariant_dim_closed(const Weight& mu, const Weight& nu) {
  return invariant_dim_closed_detailed(mu, nu).value;
}

FSIndicator frobenius_schur(const Weight& mu) {
  require_dominant(mu, "frobenius_schur");
  if (weyl::opposition(mu) != mu) return FSIndicator::NotSelfDual;
  const std::int64_t p = mu.algebra().pairing_two_rho_check(mu);
  return p % 2 == 0 ? FSIndicator::Orthogonal : FSIndicator::Symplectic;
}

FSIndicator fs_oracle(const Weight& mu, std::size_t cap) {
  require_dominant(mu, "fs_oracle");
  const Weight zero = mu.algebra().zero();
  const BigInt sym = characters::coefficient_of(characters::sym2_char(mu, cap), zero);
  const BigInt alt = characters::coefficient_of(characters::alt2_char(mu, cap), zero);
  const BigInt d = sym - alt;
  if (d == 1) return FSIndicator::Orthogonal;
  if (d == -1) return FSIndicator::Symplectic;
  if (d == 0) return FSIndicator::NotSelfDual;
  throw std::logic_error("Frobenius-Schur oracle out of range: " + d.str());
}

SplitResult split_closed(const Weight& mu) {
  require_dominant(mu, "split_closed");
  const Weight dual = weyl::opposition(mu);
  SplitResult out;
  if (dual != mu) {
    out.b = invariant_dim_closed(mu, mu);
    return out;
  }
  const auto sigma = weyl::opposition_permutation(mu.algebra());
  const FSIndicator fs = frobenius_schur(mu);
  std::int64_t paired = 0;
  std::int64_t self_dual = 0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] <= 0) continue;
    (sigma[j] == j ? self_dual : paired) += 1;
  }
  out.b_S = paired / 2 + (fs == FSIndicator::Symplectic ? self_dual : 0);
  out.b_Lambda = paired / 2 + (fs == FSIndicator::Orthogonal ? self_dual : 0);
  out.b = out.b_S + out.b_Lambda;
  return out;
}

SplitResult split_oracle(const Weight& mu, std::size_t cap) {
  require_dominant(mu, "split_oracle");
  const auto adj = characters::adjoint_highest_weights(mu.algebra());
  SplitResult out;
  out.b_S = characters::invariant_dim_in(characters::sym2_char(mu, cap), adj).convert_to<std::int64_t>();
  out.b_Lambda = characters::invariant_dim_in(characters::alt2_char(mu, cap), adj).convert_to<std::int64_t>();
  out.b = out.b_S + out.b_Lambda;
  return out;
}

bool kw_question(const Weight& mu) {
  require_dominant(mu, "kw_question");
  if (weyl::opposition(mu) != mu) throw NotSelfDual("kw_question requires a self-dual weight, got " + mu.str());
  const SplitResult s = split_closed(mu);
  return std::min(s.b_S, s.b_Lambda) == 0;
}

bool in_self_dual_span(const Weight& mu) {
  const auto sigma = weyl::opposition_permutation(mu.algebra());
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (mu[j] > 0 && sigma[j] != j) return false;
  return true;
}

}  // namespace lieinv::theorems
