#include "lieinv/tensor.hpp"

#include <algorithm>

#include "lieinv/weyl.hpp"

namespace lieinv::tensor {

BigInt Decomposition::multiplicity(const Labels& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Weight, BigInt>> Decomposition::sorted_terms() const {
  std::vector<std::pair<Weight, BigInt>> out;
  for (const auto& [w, m] : terms_) out.emplace_back(Weight(*algebra_, w), m);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ha = algebra_->height_scaled(a.first.labels());
    const auto hb = algebra_->height_scaled(b.first.labels());
    return ha != hb ? ha < hb : a.first.labels() < b.first.labels();
  });
  return out;
}

BigInt Decomposition::dimension() const {
  BigInt d = 0;
  for (const auto& [w, m] : terms_) d += m * characters::weyl_dim(Weight(*algebra_, w));
  return d;
}

Decomposition Decomposition::from_signed(const RootSystem& algebra, const std::map<Labels, BigInt>& signed_terms) {
  Decomposition out(algebra);
  for (const auto& [w, m] : signed_terms) {
    if (m < 0) {
      throw InternalNegativeMultiplicity("negative multiplicity " + m.str() + " at " + to_string(w));
    }
    if (m > 0) out.terms_.emplace(w, m);
  }
  return out;
}

Decomposition adjoint_tensor(const Weight& mu) {
  if (!mu.is_dominant()) throw NotDominant("adjoint_tensor requires a dominant weight, got " + mu.str());
  const RootSystem& g = mu.algebra();
  std::map<Labels, std::int64_t> acc;
  acc[mu.labels()] = static_cast<std::int64_t>(g.rank());
  Labels w(mu.size());
  for (const Root& alpha : g.roots()) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = checked::add(mu[j], alpha.labels[j]);
    const int sign = weyl::detail::to_dominant_shifted_in_place(g, w);
    if (sign != 0) acc[w] += sign;
  }
  std::map<Labels, BigInt> signed_terms;
  for (const auto& [k, m] : acc) signed_terms.emplace(k, m);
  return Decomposition::from_signed(g, signed_terms);
}

std::int64_t invariant_dim_adj(const Weight& mu, const Weight& nu) {
  if (!mu.same_algebra(nu)) throw MismatchedAlgebra();
  const Weight dual = weyl::opposition(nu);
  return adjoint_tensor(mu).multiplicity(dual).convert_to<std::int64_t>();
}

Decomposition tensor_general(const Weight& lambda, const Weight& mu,
                             const characters::WeightMultiplicityMap& weights_of_lambda) {
  if (!lambda.same_algebra(mu)) throw MismatchedAlgebra();
  if (!lambda.is_dominant()) throw NotDominant("tensor_general requires dominant lambda, got " + lambda.str());
  if (!mu.is_dominant()) throw NotDominant("tensor_general requires dominant mu, got " + mu.str());
  const RootSystem& g = mu.algebra();
  const auto full = characters::expand(g, weights_of_lambda);
  std::map<Labels, BigInt> acc;
  Labels w(mu.size());
  for (const auto& [weight, m] : full.entries) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = checked::add(mu[j], weight[j]);
    const int sign = weyl::detail::to_dominant_shifted_in_place(g, w);
    if (sign != 0) acc[w] += sign * m;
  }
  return Decomposition::from_signed(g, acc);
}

BigInt adjoint_multiplicity_in_product(const Weight& mu, const Weight& nu) {
  return adjoint_multiplicity_in_product(mu, nu, characters::freudenthal_weights(mu));
}

BigInt adjoint_multiplicity_in_product(const Weight& mu, const Weight& nu,
                                       const characters::WeightMultiplicityMap& weights_of_mu) {
  const Decomposition product = tensor_general(mu, nu, weights_of_mu);
  BigInt total = 0;
  for (const Weight& theta : characters::adjoint_highest_weights(mu.algebra())) total += product.multiplicity(theta);
  return total;
}

}  // namespace lieinv::tensor
