#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weldlab::cli {

struct RunConfig {
  std::string command;  // e.g. "group info"
  int n = 0;
  int p = 0;
  std::string pairing = "I";
  bool factor = false;

  std::string input;
  std::optional<int> newton;
  std::string output;
  std::string svg;

  double theta = 0.0;
  std::vector<double> point;  // re, im
  int component = 1;
  int steps = 16;
  int depth = 12;
  int rank = 2;
  int length = 4;
  std::string polynomial = "all";
  std::optional<double> tolerance;

  std::string help;  // set when --help was requested
};

// Throws weldlab::Error(UsageError) on bad arguments.
RunConfig parse_config(const std::vector<std::string>& args);

// Runs a parsed configuration, writing the JSON report to `out` (or the output file).
void execute(const RunConfig& config, std::ostream& out);

// Full driver: returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weldlab::cli
