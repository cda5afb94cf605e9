#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieinv/numeric.hpp"

namespace lieinv::cli {

using nlohmann::json;

/// Integers beyond 2^53 are emitted as decimal strings.
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j);

struct Term {
  Labels weight;
  BigInt multiplicity;
  BigInt dimension;
  friend bool operator==(const Term&, const Term&) = default;
};

struct RootEntry {
  std::string factor;
  Labels coords;
  Labels labels;
  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct InfoResult {
  std::size_t rank = 0;
  BigInt dimension;
  std::size_t positive_roots = 0;
  std::vector<std::size_t> opposition;  // 1-based images of fundamental weights
  std::vector<RootEntry> highest_roots;
  friend bool operator==(const InfoResult&, const InfoResult&) = default;
};

struct InvariantsResult {
  std::int64_t closed = 0;
  std::string rule;
  std::int64_t oracle_a = 0;
  std::optional<BigInt> oracle_b;
  bool agree = false;
  friend bool operator==(const InvariantsResult&, const InvariantsResult&) = default;
};

struct SplitReport {
  std::int64_t b = 0;
  std::int64_t b_S = 0;
  std::int64_t b_Lambda = 0;
  int fs = 0;
  bool self_dual = false;
  std::optional<std::int64_t> oracle_b_S;
  std::optional<std::int64_t> oracle_b_Lambda;
  std::optional<bool> agree;
  friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

struct FsReport {
  int fs = 0;
  std::optional<int> oracle;
  std::optional<bool> agree;
  friend bool operator==(const FsReport&, const FsReport&) = default;
};

struct Table1Row {
  std::string factor;
  std::size_t j = 0;  // 1-based within the factor
  std::string alpha_eps;
  std::string beta_eps;
  Labels beta_coords;
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

struct Table1Result {
  std::vector<Table1Row> rows;
  std::string note;
  friend bool operator==(const Table1Result&, const Table1Result&) = default;
};

struct DecomposeResult {
  std::string product;  // "adj x V_mu" or "V_mu x V_nu"
  std::vector<Term> terms;
  BigInt dimension;
  BigInt expected_dimension;
  friend bool operator==(const DecomposeResult&, const DecomposeResult&) = default;
};

struct VerifySummary {
  std::size_t weights = 0;
  std::size_t pairs = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped_cap = 0;
  std::vector<std::pair<std::string, std::uint64_t>> check_counts;
  std::vector<std::pair<std::string, std::uint64_t>> failure_counts;
  std::vector<std::pair<std::string, std::uint64_t>> rule_hits;
  std::optional<std::string> first_failure;
  friend bool operator==(const VerifySummary&, const VerifySummary&) = default;
};

void to_json(json& j, const Term& v);
void from_json(const json& j, Term& v);
void to_json(json& j, const RootEntry& v);
void from_json(const json& j, RootEntry& v);
void to_json(json& j, const InfoResult& v);
void from_json(const json& j, InfoResult& v);
void to_json(json& j, const InvariantsResult& v);
void from_json(const json& j, InvariantsResult& v);
void to_json(json& j, const SplitReport& v);
void from_json(const json& j, SplitReport& v);
void to_json(json& j, const FsReport& v);
void from_json(const json& j, FsReport& v);
void to_json(json& j, const Table1Row& v);
void from_json(const json& j, Table1Row& v);
void to_json(json& j, const Table1Result& v);
void from_json(const json& j, Table1Result& v);
void to_json(json& j, const DecomposeResult& v);
void from_json(const json& j, DecomposeResult& v);
void to_json(json& j, const VerifySummary& v);
void from_json(const json& j, VerifySummary& v);

}  // namespace lieinv::cli
