#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psl4cd/degrees.hpp"
#include "psl4cd/report.hpp"

namespace psl4cd {

inline constexpr const char* kToolName = "psl4cd";
inline constexpr const char* kToolVersion = "1.0.0";
/// Largest q accepted on the command line.
inline constexpr std::uint64_t kMaxQ = 100000;

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct QResult {
  std::uint64_t q = 0;
  std::vector<CheckReport> checks;
};

struct Summary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
};

Summary tally(const std::vector<QResult>& results);

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> q;                                    // single-q run
  std::optional<std::pair<std::uint64_t, std::uint64_t>> q_range;  // range run
  std::vector<QResult> results;
  std::optional<double> duration_ms;  // set only when timing is requested
};

std::string to_json(const RunReport& report);
std::string to_markdown(const RunReport& report);

struct DegreesReport {
  std::uint64_t q = 0;
  std::string mode;  // "certain" or "possible"
  std::vector<DegreeEntry> entries;
  std::vector<std::string> audit;
  std::optional<double> duration_ms;
};

DegreesReport degrees_report(const DegreeSet& set, const std::string& mode);
std::string to_json(const DegreesReport& report);
std::string to_markdown(const DegreesReport& report);

/// "3.1", "3.2", "3.3", "3.4", "3.5", "s4", "s6", "7.1", "7.2", "7.3", "7.4".
const std::vector<std::string>& check_ids();

/// Throws DomainError for an unknown id.
CheckReport run_check(const std::string& id, const DegreeSet& set);

/// Runs `work` for every q on up to `jobs` threads; results keep the order of `qs`.
std::vector<QResult> sweep(const std::vector<std::uint64_t>& qs, const std::function<QResult(std::uint64_t)>& work,
                           unsigned jobs);

/// Parses "A..B"; throws DomainError when malformed.
std::pair<std::uint64_t, std::uint64_t> parse_q_range(const std::string& text);

/// Entry point behind the executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psl4cd
