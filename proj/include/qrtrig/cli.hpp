#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrtrig/report.hpp"

namespace qrtrig::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Bad flags, unknown ids, inconsistent filters: exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Range = std::pair<std::int64_t, std::int64_t>;

struct RunConfig {
  std::string command;  // verify | scan | invariants | explore
  std::vector<std::string> identities;
  std::string conjecture;
  std::optional<Range> primes;
  std::optional<Range> n;
  long bits = 256;
  std::optional<long> tolerance_bits;
  std::size_t samples = 25;
  std::optional<std::uint64_t> seed;
  std::int64_t pell_bound = 20'000'000;
  /// Values of a for prime identities that take one.
  std::vector<std::int64_t> a{1};
  /// "m:r1,r2,..." keeps primes p with p mod m in {r1, r2, ...}.
  std::optional<std::pair<std::int64_t, std::vector<std::int64_t>>> residues;
  /// Root of unity e^{2 pi i j/m} for explore.
  std::pair<std::int64_t, std::int64_t> root{1, 4};
  std::string out;
  std::string format = "json";
  std::string timestamp;

  /// Throws UsageError.
  void validate() const;
  /// Echo written into the report header; the output path is left out so
  /// that the same run written to two places yields identical bytes.
  report::Json to_json() const;
};

/// Parses "A..B" (or a single "A").
Range parse_range(const std::string& text);
/// Parses "m:r1,r2".
std::pair<std::int64_t, std::vector<std::int64_t>> parse_residues(const std::string& text);

struct RunOutcome {
  int exit_code = kPass;
  report::ReportFile report;
  /// One line each, for stderr.
  std::vector<std::string> diagnostics;
};

RunOutcome run_verify(const RunConfig& config);
RunOutcome run_scan(const RunConfig& config);
RunOutcome run_invariants(const RunConfig& config);
RunOutcome run_explore(const RunConfig& config);
RunOutcome run(const RunConfig& config);

/// Full command line entry point; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qrtrig::cli
