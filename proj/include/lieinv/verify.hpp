#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/characters.hpp"
#include "lieinv/root_system.hpp"

namespace lieinv::verify {

struct SweepOptions {
  std::int64_t max_label = 2;
  std::int64_t max_sum = 3;
  std::size_t jobs = 1;
  std::size_t char_cap = characters::kDefaultProductCap;
  /// Run the character-based oracles (oracle B, S^2/Lambda^2 split, FS).
  bool characters = true;
};

/// Dominant weights with every label <= max_label and label sum <= max_sum,
/// ordered by label sum, then lexicographically.
std::vector<Weight> dominant_weights(const RootSystem& g, std::int64_t max_label, std::int64_t max_sum);

struct Failure {
  std::string check;
  Labels mu;
  Labels nu;
  std::string detail;
};

/// Counts of checks run and failed, keyed by check name.
struct SweepReport {
  std::string algebra;
  std::size_t weights = 0;
  std::size_t pairs = 0;
  std::map<std::string, std::uint64_t> checks;
  std::map<std::string, std::uint64_t> failures;
  /// Closed-form branch -> number of (mu, nu) pairs that took it.
  std::map<std::string, std::uint64_t> rule_hits;
  /// Character checks skipped because of the size cap.
  std::uint64_t skipped_cap = 0;
  std::optional<Failure> first_failure;

  bool ok() const { return failures.empty(); }
  std::uint64_t total_checks() const;
  std::uint64_t total_failures() const;
  void merge(const SweepReport& other);
};

/// Runs every closed-form-versus-oracle check over all pairs of weights
/// from dominant_weights(). Work is split over options.jobs threads by mu;
/// the result does not depend on the thread count.
SweepReport run_sweep(const RootSystem& g, const SweepOptions& options);

}  // namespace lieinv::verify
