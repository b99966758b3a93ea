#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace fbelos::cli {

enum class Command { Validate, Analyze, Render, Characterize };

struct RunConfig {
  Command command = Command::Analyze;
  std::optional<std::string> preset;   // "name:k=v,..."
  std::optional<std::string> profile;  // expression text
  std::optional<double> p;
  double tol = 1e-9;
  double rel_tol = 1e-10;
  std::size_t grid = 101;
  std::optional<std::string> json_path;  // "-" for standard output
  std::optional<std::string> svg_path;
  std::string overlays;
  bool allow_non_nesting = false;
};

/// Exit codes: 0 every executed check passed, 2 a check failed, 1 usage or
/// runtime error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors go to err.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbelos::cli
