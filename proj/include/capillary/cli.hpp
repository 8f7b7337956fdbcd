#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "capillary/curves.hpp"

namespace capillary::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kDegenerate = 2,
  kNoContact = 3,
  kInvalidInput = 4,
};

enum class OutputFormat { Json, Csv, Table };

struct RunConfig {
  std::string command;
  std::string support{"parabola"};
  std::string branch{"concave"};
  std::string gamma{"auto"};
  std::optional<int> delta;
  std::optional<double> tau0;
  std::optional<double> height;
  std::optional<double> h;
  std::string tau;
  int n{0};
  std::string case_name;
  std::vector<int> grids;
  OutputFormat output{OutputFormat::Json};
  std::string emit_plot;
  bool alternate{false};
};

/// Builds a support curve from `kind[:key=value,...]`:
/// parabola[:a=], catenary[:a=], circle:r=,x0= (or zc=), line:c=,
/// graph:c0=,c1=,..., csv:path. Every built-in also takes domain= for the
/// half-width of its parameter interval.
SupportCurve parse_support(const std::string& spec);

/// `lo:hi`. Throws EmptyRange when hi < lo, or hi = lo unless allowed.
Interval parse_range(const std::string& text, bool allow_point = false);

/// Reads `key=value` lines; blank lines and lines starting with # are
/// skipped.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capillary::cli
