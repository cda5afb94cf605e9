#include "lieinv/characters.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "lieinv/weyl.hpp"

namespace lieinv::characters {

namespace {

bool dominant(const Labels& w) {
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 0; });
}

void require_dominant(const Weight& mu, const char* what) {
  if (!mu.is_dominant()) throw NotDominant(std::string(what) + " requires a dominant weight, got " + mu.str());
}

void require_same(const RootSystem& a, const RootSystem& b) {
  if (&a != &b) throw MismatchedAlgebra();
}

// Full support as a flat list.
std::vector<std::pair<Labels, BigInt>> expand_flat(const VirtualCharacter& a) {
  std::vector<std::pair<Labels, BigInt>> out;
  for (const auto& [key, c] : a.entries())
    for (Labels& w : weyl::orbit(Weight(a.algebra(), key))) out.emplace_back(std::move(w), c);
  return out;
}

// Peeling order: height, then labels.
struct PeelKey {
  std::int64_t height;
  Labels labels;
  friend bool operator<(const PeelKey& a, const PeelKey& b) {
    return a.height != b.height ? a.height < b.height : a.labels < b.labels;
  }
};

}  // namespace

BigInt WeightMultiplicityMap::multiplicity(const Labels& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------
// VirtualCharacter

BigInt VirtualCharacter::coefficient(const Labels& dominant) const {
  auto it = entries_.find(dominant);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void VirtualCharacter::add(const Labels& key, const BigInt& c) {
  if (c == 0) return;
  if (!dominant(key)) throw NotDominant("virtual character keys must be dominant, got " + to_string(key));
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

BigInt VirtualCharacter::dimension() const {
  BigInt d = 0;
  for (const auto& [key, c] : entries_) d += weyl::orbit_size(Weight(*algebra_, key)) * c;
  return d;
}

BigInt VirtualCharacter::full_support_size() const {
  BigInt n = 0;
  for (const auto& [key, c] : entries_) n += weyl::orbit_size(Weight(*algebra_, key));
  return n;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& other) {
  require_same(*algebra_, *other.algebra_);
  for (const auto& [key, c] : other.entries_) add(key, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& other) {
  require_same(*algebra_, *other.algebra_);
  for (const auto& [key, c] : other.entries_) add(key, -c);
  return *this;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& other) const {
  VirtualCharacter out = *this;
  return out += other;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& other) const {
  VirtualCharacter out = *this;
  return out -= other;
}

VirtualCharacter VirtualCharacter::operator*(const BigInt& k) const {
  VirtualCharacter out(*algebra_);
  if (k == 0) return out;
  for (const auto& [key, c] : entries_) out.entries_.emplace(key, c * k);
  return out;
}

// ---------------------------------------------------------------------------
// Weight systems

WeightMultiplicityMap freudenthal_weights(const Weight& mu) {
  require_dominant(mu, "freudenthal_weights");
  const RootSystem& g = mu.algebra();
  const auto positive = g.positive_roots();

  // Dominant weights below mu: every dominant lambda < mu is reached from mu
  // by subtracting positive roots without leaving the dominant chamber.
  std::unordered_set<Labels, LabelsHash> seen{mu.labels()};
  std::deque<Labels> queue{mu.labels()};
  while (!queue.empty()) {
    Labels cur = std::move(queue.front());
    queue.pop_front();
    for (const Root& a : positive) {
      Labels next = cur;
      bool ok = true;
      for (std::size_t j = 0; j < next.size() && ok; ++j) {
        next[j] -= a.labels[j];
        ok = next[j] >= 0;
      }
      if (ok && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<std::pair<std::int64_t, Labels>> order;
  order.reserve(seen.size());
  for (const Labels& w : seen) order.emplace_back(-g.height_scaled(w), w);
  std::sort(order.begin(), order.end());

  Labels top = mu.labels();
  for (auto& x : top) x += 1;
  const std::int64_t top_norm = g.inner_scaled(top, top);

  std::unordered_map<Labels, BigInt, LabelsHash> mult;
  mult.emplace(mu.labels(), 1);
  Labels probe(mu.size()), shifted(mu.size());
  for (const auto& [neg_height, lambda] : order) {
    if (lambda == mu.labels()) continue;
    BigInt sum = 0;
    for (const Root& a : positive) {
      probe = lambda;
      for (;;) {
        for (std::size_t j = 0; j < probe.size(); ++j) probe[j] += a.labels[j];
        Labels dom = probe;
        weyl::detail::to_dominant_in_place(g, dom);
        auto it = mult.find(dom);
        if (it == mult.end()) break;
        sum += it->second * g.inner_root_scaled(probe, a);
      }
    }
    for (std::size_t j = 0; j < lambda.size(); ++j) shifted[j] = lambda[j] + 1;
    const std::int64_t denom = top_norm - g.inner_scaled(shifted, shifted);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive");
    BigInt num = 2 * sum;
    if (num % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    BigInt m = num / denom;
    if (m <= 0) throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity at " + to_string(lambda));
    mult.emplace(lambda, std::move(m));
  }

  WeightMultiplicityMap out;
  out.dominant_only = true;
  for (auto& [w, m] : mult) out.entries.emplace(w, std::move(m));
  return out;
}

WeightMultiplicityMap expand(const RootSystem& g, const WeightMultiplicityMap& m) {
  if (!m.dominant_only) return m;
  WeightMultiplicityMap out;
  out.dominant_only = false;
  for (const auto& [key, c] : m.entries)
    for (Labels& w : weyl::orbit(Weight(g, key))) out.entries.emplace(std::move(w), c);
  return out;
}

WeightMultiplicityMap full_weights(const Weight& mu) { return expand(mu.algebra(), freudenthal_weights(mu)); }

BigInt weyl_dim(const Weight& mu) {
  require_dominant(mu, "weyl_dim");
  const RootSystem& g = mu.algebra();
  Labels shifted = mu.labels();
  for (auto& x : shifted) x += 1;
  const Labels& rho = g.rho().labels();
  Rational d = 1;
  for (const Root& a : g.positive_roots()) d *= Rational(g.inner_root_scaled(shifted, a), g.inner_root_scaled(rho, a));
  if (boost::multiprecision::denominator(d) != 1) throw std::logic_error("Weyl dimension formula gave a fraction");
  return boost::multiprecision::numerator(d);
}

VirtualCharacter character(const Weight& mu) {
  VirtualCharacter out(mu.algebra());
  for (const auto& [w, m] : freudenthal_weights(mu).entries) out.add(w, m);
  return out;
}

// ---------------------------------------------------------------------------
// Character ring operations

VirtualCharacter char_product(const VirtualCharacter& a, const VirtualCharacter& b, std::size_t cap) {
  require_same(a.algebra(), b.algebra());
  const BigInt estimate = a.full_support_size() * b.full_support_size();
  if (estimate > cap) {
    throw SizeCapExceeded("character product needs " + estimate.str() + " weight pairs, cap is " + std::to_string(cap));
  }
  const auto fa = expand_flat(a);
  const auto fb = expand_flat(b);
  const std::size_t n = a.algebra().rank();
  std::unordered_map<Labels, BigInt, LabelsHash> acc;
  Labels sum(n);
  for (const auto& [wa, ca] : fa) {
    for (const auto& [wb, cb] : fb) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        sum[j] = wa[j] + wb[j];
        ok = sum[j] >= 0;
      }
      if (!ok) continue;
      acc[sum] += ca * cb;
    }
  }
  VirtualCharacter out(a.algebra());
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

VirtualCharacter char_double(const VirtualCharacter& a) {
  VirtualCharacter out(a.algebra());
  for (auto& [w, c] : expand_flat(a)) {
    if (!dominant(w)) continue;
    Labels twice = w;
    for (auto& x : twice) x = checked::mul(x, 2);
    out.add(twice, c);
  }
  return out;
}

namespace {

VirtualCharacter half_of(const VirtualCharacter& v, const char* what) {
  VirtualCharacter out(v.algebra());
  for (const auto& [w, c] : v.entries()) {
    if (c % 2 != 0) throw NonIntegralCharacter(std::string(what) + ": odd coefficient at " + to_string(w));
    out.add(w, c / 2);
  }
  return out;
}

}  // namespace

VirtualCharacter sym2_char(const Weight& mu, std::size_t cap) {
  require_dominant(mu, "sym2_char");
  const VirtualCharacter chi = character(mu);
  return half_of(char_product(chi, chi, cap) + char_double(chi), "sym2_char");
}

VirtualCharacter alt2_char(const Weight& mu, std::size_t cap) {
  require_dominant(mu, "alt2_char");
  const VirtualCharacter chi = character(mu);
  return half_of(char_product(chi, chi, cap) - char_double(chi), "alt2_char");
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// Peels keys satisfying `keep` in decreasing (height, labels) order.
template <class Keep>
IrreducibleCoefficients peel(const VirtualCharacter& a, Keep keep) {
  const RootSystem& g = a.algebra();
  std::map<PeelKey, BigInt> work;
  for (const auto& [w, c] : a.entries())
    if (keep(w)) work.emplace(PeelKey{g.height_scaled(w), w}, c);

  IrreducibleCoefficients out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Labels lambda = top->first.labels;
    const BigInt c = top->second;
    work.erase(top);
    out.emplace(lambda, c);
    for (const auto& [w, m] : freudenthal_weights(Weight(g, lambda)).entries) {
      if (w == lambda || !keep(w)) continue;
      auto [it, inserted] = work.try_emplace(PeelKey{g.height_scaled(w), w}, 0);
      it->second -= c * m;
      if (it->second == 0) work.erase(it);
    }
  }
  return out;
}

}  // namespace

IrreducibleCoefficients decompose_character(const VirtualCharacter& a) {
  return peel(a, [](const Labels&) { return true; });
}

BigInt coefficient_of(const VirtualCharacter& a, const Weight& lambda) {
  require_same(a.algebra(), lambda.algebra());
  require_dominant(lambda, "coefficient_of");
  const RootSystem& g = a.algebra();
  Labels diff(lambda.size()), coords;
  auto above = [&](const Labels& w) {
    for (std::size_t j = 0; j < w.size(); ++j) diff[j] = w[j] - lambda[j];
    if (!g.integral_coords(diff, coords)) return false;
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x >= 0; });
  };
  const auto coeffs = peel(a, above);
  auto it = coeffs.find(lambda.labels());
  return it == coeffs.end() ? BigInt(0) : it->second;
}

std::vector<Weight> adjoint_highest_weights(const RootSystem& g) {
  std::vector<Weight> out;
  for (const Root& theta : g.highest_roots()) out.emplace_back(g, theta.labels);
  return out;
}

BigInt invariant_dim_in(const VirtualCharacter& a, std::span<const Weight> adj_factors) {
  BigInt total = 0;
  for (const Weight& theta : adj_factors) total += coefficient_of(a, theta);
  return total;
}

}  // namespace lieinv::characters
