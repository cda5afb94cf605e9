#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lieinv/root_system.hpp"

namespace testing_util {

using lieinv::Labels;
using lieinv::RootSystem;
using lieinv::Weight;

inline std::shared_ptr<const RootSystem> algebra(const std::string& spec) { return RootSystem::build(spec); }

/// Algebras small enough for character-level checks.
inline const std::vector<std::string>& small_algebras() {
  static const std::vector<std::string> v{"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xG2"};
  return v;
}

/// Random dominant weight with labels in [0, max_label].
inline Weight random_dominant(const RootSystem& g, std::mt19937_64& rng, std::int64_t max_label) {
  std::uniform_int_distribution<std::int64_t> d(0, max_label);
  Labels l(g.rank());
  for (auto& x : l) x = d(rng);
  return Weight(g, l);
}

/// Random integral weight with labels in [-bound, bound].
inline Weight random_integral(const RootSystem& g, std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  Labels l(g.rank());
  for (auto& x : l) x = d(rng);
  return Weight(g, l);
}

inline const lieinv::Root& random_root(const RootSystem& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, g.roots().size() - 1);
  return g.roots()[d(rng)];
}

}  // namespace testing_util
