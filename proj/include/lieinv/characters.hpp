#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lieinv/root_system.hpp"

namespace lieinv::characters {

/// Default cap on |supp(a)| * |supp(b)| for a character product.
inline constexpr std::size_t kDefaultProductCap = 10'000'000;

/// Weight multiplicities of an irreducible module. When dominant_only is set
/// the map holds one representative per Weyl orbit.
struct WeightMultiplicityMap {
  std::map<Labels, BigInt> entries;
  bool dominant_only = true;

  BigInt multiplicity(const Labels& w) const;
};

/// Weyl-invariant formal character stored on dominant weights; coefficients
/// may be negative.
class VirtualCharacter {
 public:
  explicit VirtualCharacter(const RootSystem& algebra) : algebra_(&algebra) {}

  const RootSystem& algebra() const noexcept { return *algebra_; }
  const std::map<Labels, BigInt>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  BigInt coefficient(const Labels& dominant) const;
  /// Adds c at a dominant key, dropping the entry when it reaches zero.
  void add(const Labels& dominant, const BigInt& c);

  /// Sum of orbit size times coefficient (the character at the identity).
  BigInt dimension() const;
  /// Number of weights in the full Weyl-orbit support.
  BigInt full_support_size() const;

  VirtualCharacter& operator+=(const VirtualCharacter& other);
  VirtualCharacter& operator-=(const VirtualCharacter& other);
  VirtualCharacter operator+(const VirtualCharacter& other) const;
  VirtualCharacter operator-(const VirtualCharacter& other) const;
  VirtualCharacter operator*(const BigInt& k) const;

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

 private:
  const RootSystem* algebra_;
  std::map<Labels, BigInt> entries_;
};

/// Coefficients c_lambda of a = sum c_lambda char(V_lambda).
using IrreducibleCoefficients = std::map<Labels, BigInt>;

/// Dominant weight multiplicities of V_mu by Freudenthal's recursion.
WeightMultiplicityMap freudenthal_weights(const Weight& mu);

/// All weights of V_mu (orbit-expanded).
WeightMultiplicityMap full_weights(const Weight& mu);
WeightMultiplicityMap expand(const RootSystem& g, const WeightMultiplicityMap& m);

/// Weyl dimension formula.
BigInt weyl_dim(const Weight& mu);

/// char(V_mu) as a virtual character.
VirtualCharacter character(const Weight& mu);

VirtualCharacter char_product(const VirtualCharacter& a, const VirtualCharacter& b,
                              std::size_t cap = kDefaultProductCap);

/// x -> a(2x).
VirtualCharacter char_double(const VirtualCharacter& a);

/// Characters of S^2 V_mu and Lambda^2 V_mu.
VirtualCharacter sym2_char(const Weight& mu, std::size_t cap = kDefaultProductCap);
VirtualCharacter alt2_char(const Weight& mu, std::size_t cap = kDefaultProductCap);

/// Highest-weight peeling: repeatedly removes char(V_lambda) for the
/// support weight of maximal height (ties: lexicographically largest labels).
IrreducibleCoefficients decompose_character(const VirtualCharacter& a);

/// Coefficient of char(V_lambda) in a, peeling only the weights above lambda.
BigInt coefficient_of(const VirtualCharacter& a, const Weight& lambda);

/// Highest roots of each simple factor as weights (the adjoint summands).
std::vector<Weight> adjoint_highest_weights(const RootSystem& g);

/// Sum over simple factors of the multiplicity of that factor's adjoint in a.
BigInt invariant_dim_in(const VirtualCharacter& a, std::span<const Weight> adj_factors);

}  // namespace lieinv::characters
