#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lieinv/characters.hpp"
#include "lieinv/root_system.hpp"

namespace lieinv::tensor {

/// Direct sum of irreducibles: dominant highest weight -> multiplicity >= 1.
class Decomposition {
 public:
  explicit Decomposition(const RootSystem& algebra) : algebra_(&algebra) {}

  const RootSystem& algebra() const noexcept { return *algebra_; }
  const std::map<Labels, BigInt>& terms() const noexcept { return terms_; }

  BigInt multiplicity(const Labels& lambda) const;
  BigInt multiplicity(const Weight& lambda) const { return multiplicity(lambda.labels()); }

  /// Terms ordered by (height, labels), the order used for printing.
  std::vector<std::pair<Weight, BigInt>> sorted_terms() const;

  /// Sum of multiplicity * dim(V_lambda).
  BigInt dimension() const;

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

  /// Builds from signed accumulators; throws InternalNegativeMultiplicity on
  /// a negative entry and drops zeros.
  static Decomposition from_signed(const RootSystem& algebra, const std::map<Labels, BigInt>& signed_terms);

 private:
  const RootSystem* algebra_;
  std::map<Labels, BigInt> terms_;
};

/// adj(g) (x) V_mu via rank(g) chi_mu + sum over roots of chi_{mu+alpha}.
Decomposition adjoint_tensor(const Weight& mu);

/// dim (adj (x) V_mu (x) V_nu)^g = multiplicity of V_{opposition(nu)} in adj (x) V_mu.
std::int64_t invariant_dim_adj(const Weight& mu, const Weight& nu);

/// Brauer-Klimyk: V_lambda (x) V_mu from the weight system of V_lambda.
Decomposition tensor_general(const Weight& lambda, const Weight& mu,
                             const characters::WeightMultiplicityMap& weights_of_lambda);

/// Sum over simple factors of the multiplicity of that factor's adjoint in
/// V_mu (x) V_nu; an independent route to invariant_dim_adj.
BigInt adjoint_multiplicity_in_product(const Weight& mu, const Weight& nu);
/// Same, reusing a precomputed weight system of V_mu.
BigInt adjoint_multiplicity_in_product(const Weight& mu, const Weight& nu,
                                       const characters::WeightMultiplicityMap& weights_of_mu);

}  // namespace lieinv::tensor
