#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieinv/characters.hpp"
#include "lieinv/cli/json_io.hpp"
#include "lieinv/root_system.hpp"
#include "lieinv/verify.hpp"

namespace lieinv::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kResourceCap = 3 };

/// "1,0,2" -> {1, 0, 2}. Throws ParseError on malformed or negative entries.
Labels parse_labels(std::string_view text);

/// Dominant weight of g from a label string; throws ParseError on a rank mismatch.
Weight parse_weight(const RootSystem& g, std::string_view text);

/// Bourbaki epsilon-coordinate text for a root of a B, C or F4 factor,
/// e.g. "e1-e2", "2e3", "1/2(e1-e2-e3-e4)". Empty for other families.
std::string epsilon_string(const RootSystem& g, const Root& root);

InfoResult info(const RootSystem& g);
InvariantsResult invariants(const Weight& mu, const Weight& nu, std::size_t cap = characters::kDefaultProductCap);
SplitReport split(const Weight& mu, std::size_t cap = characters::kDefaultProductCap);
FsReport fs(const Weight& mu, std::size_t cap = characters::kDefaultProductCap);
Table1Result table1(const RootSystem& g);
/// adj (x) V_mu when nu is empty, V_mu (x) V_nu otherwise. Throws
/// SizeCapExceeded when the weight system of mu is larger than cap.
DecomposeResult decompose(const Weight& mu, const std::optional<Weight>& nu,
                          std::size_t cap = characters::kDefaultProductCap);
VerifySummary summarize(const verify::SweepReport& report);

/// Runs the command line (args excludes the program name). Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieinv::cli
