#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deltaritz/assembly.hpp"
#include "report.hpp"

namespace deltaritz::cli {

enum class Command { Spectrum, Table, Oracle, Critical, Sweep, Hellmann };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct WidthScan {
  double lo;
  double hi;
  std::size_t steps;
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::string preset = "harmonic";
  std::string potential;  // overrides the preset when non-empty
  double g = 0.0;
  std::optional<double> a;  // preset default when absent
  std::size_t n = 17;
  std::size_t n_min = 2;
  std::size_t k = 5;
  int digits = 50;
  int significant = 10;
  OutputFormat format = OutputFormat::Text;
  std::string out_path;  // stdout when empty
  Sector sector = Sector::EvenAdapted;
  double tol = 1e-12;
  double h = 1e-4;
  std::vector<double> grid;
  std::optional<double> energy;
  std::optional<WidthScan> width_scan;
};

// Parses argv (argv[0] is the program name). Throws deltaritz::ParseError on
// bad input; returns std::nullopt when help was printed to `out`.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

// Runs one command and writes its report to `out` (or config.out_path).
void execute(const RunConfig& config, std::ostream& out);

// parse + execute with error reporting. Errors go to `err` as
// "error[<category>]: <message>"; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deltaritz::cli
