#include "lieinv/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lieinv::weyl {

namespace detail {

void reflect_in_place(const RootSystem& g, Labels& lambda, std::size_t j) {
  const std::int64_t p = lambda[j];
  if (p == 0) return;
  const Labels& row = g.cartan()[j];
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (row[k]) lambda[k] = checked::sub(lambda[k], checked::mul(p, row[k]));
}

int to_dominant_shifted_in_place(const RootSystem& g, Labels& lambda) {
  const std::size_t n = lambda.size();
  for (auto& x : lambda) x = checked::add(x, 1);
  int sign = 1;
  for (;;) {
    std::size_t j = 0;
    while (j < n && lambda[j] >= 0) ++j;
    if (j == n) break;
    reflect_in_place(g, lambda, j);
    sign = -sign;
  }
  for (auto& x : lambda) {
    if (x == 0) return 0;
    x -= 1;
  }
  return sign;
}

void to_dominant_in_place(const RootSystem& g, Labels& lambda) {
  const std::size_t n = lambda.size();
  for (;;) {
    std::size_t j = 0;
    while (j < n && lambda[j] >= 0) ++j;
    if (j == n) return;
    reflect_in_place(g, lambda, j);
  }
}

}  // namespace detail

Weight reflect(const Weight& lambda, std::size_t j) {
  if (j >= lambda.size()) throw IndexOutOfRange("simple reflection index " + std::to_string(j) + " out of range");
  Labels out = lambda.labels();
  detail::reflect_in_place(lambda.algebra(), out, j);
  return Weight(lambda.algebra(), std::move(out));
}

DominantResult to_dominant_shifted(const Weight& lambda) {
  Labels work = lambda.labels();
  const int sign = detail::to_dominant_shifted_in_place(lambda.algebra(), work);
  if (sign == 0) {
    // work holds the rho-shifted wall point; report it unshifted.
    for (auto& x : work) x -= 1;
    return {Weight(lambda.algebra(), std::move(work)), 1, true};
  }
  return {Weight(lambda.algebra(), std::move(work)), sign, false};
}

Weight to_dominant(const Weight& lambda) {
  Labels work = lambda.labels();
  detail::to_dominant_in_place(lambda.algebra(), work);
  return Weight(lambda.algebra(), std::move(work));
}

Weight opposition(const Weight& mu) {
  if (!mu.is_dominant()) throw NotDominant("opposition requires a dominant weight, got " + mu.str());
  return to_dominant(-mu);
}

std::vector<std::size_t> opposition_permutation(const RootSystem& g) {
  std::vector<std::size_t> sigma(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const Weight image = opposition(g.fundamental_weight(j));
    const auto it = std::find(image.labels().begin(), image.labels().end(), 1);
    sigma[j] = static_cast<std::size_t>(it - image.labels().begin());
  }
  return sigma;
}

Weight minus_w0(const Weight& lambda) {
  const auto sigma = opposition_permutation(lambda.algebra());
  Labels out(lambda.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) out[sigma[j]] = lambda[j];
  return Weight(lambda.algebra(), std::move(out));
}

std::vector<Labels> orbit(const Weight& lambda) {
  const RootSystem& g = lambda.algebra();
  std::unordered_set<Labels, LabelsHash> seen{lambda.labels()};
  std::deque<Labels> queue{lambda.labels()};
  while (!queue.empty()) {
    Labels cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (cur[j] == 0) continue;
      Labels next = cur;
      detail::reflect_in_place(g, next, j);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Product of (ht+1)/ht over positive roots, optionally skipping those
// supported inside the simple-index subset `inside`.
BigInt poincare_at_one(const RootSystem& g, const std::vector<bool>& inside) {
  Rational acc = 1;
  for (const Root& r : g.positive_roots()) {
    bool in_subsystem = true;
    for (std::size_t k = 0; k < r.coords.size(); ++k)
      if (r.coords[k] && !inside[k]) in_subsystem = false;
    if (in_subsystem) continue;
    acc *= Rational(r.height() + 1, r.height());
  }
  if (boost::multiprecision::denominator(acc) != 1) throw std::logic_error("non-integral Weyl group index");
  return boost::multiprecision::numerator(acc);
}

}  // namespace

BigInt group_order(const RootSystem& g) { return poincare_at_one(g, std::vector<bool>(g.rank(), false)); }

BigInt orbit_size(const Weight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant("orbit_size requires a dominant weight, got " + lambda.str());
  std::vector<bool> stabilizer(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) stabilizer[j] = lambda[j] == 0;
  return poincare_at_one(lambda.algebra(), stabilizer);
}

}  // namespace lieinv::weyl
