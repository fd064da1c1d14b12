#pragma once

// Command-line front end: subcommands that run the library operators and
// print a RunReport as JSON (default) or CSV.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace boas::cli {

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  /// One flat record per evaluation.
  std::vector<Json> rows;
  /// A number, or an object keyed by method for `bench`.
  std::optional<Json> fitted_slope;
  double runtime_ms = 0.0;
};

Json to_json(const RunReport& report);
/// Metadata as leading `# key: value` lines, then a header and one line per row.
std::string to_csv(const RunReport& report);

/// Least-squares slope of log2(error) against log2(N). Points with zero error
/// are dropped; throws InsufficientDataError when fewer than 4 remain.
double fit_slope(const std::vector<std::pair<double, double>>& points);

/// N = nmin, 2 nmin, 4 nmin, ... up to nmax, parsed from "NMIN:NMAX".
std::vector<long long> parse_sweep(const std::string& text);

/// The subcommand grammar printed on usage errors.
const std::string& grammar();

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when an internal validation fails and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boas::cli
