#pragma once

// Text and CSV rendering shared by every subcommand. Numbers are formatted
// with a fixed count of significant digits, independent of locale.

#include <iosfwd>
#include <string>
#include <vector>

#include "deltaritz/real.hpp"

namespace deltaritz::cli {

enum class OutputFormat { Text, Csv };

std::string format_significant(const Real& value, int significant);
std::string format_significant(double value, int significant);

// A rectangular report: header plus rows of pre-formatted cells. Empty cells
// are allowed (blank in text, empty field in CSV).
struct Report {
  std::vector<std::string> comments;  // text mode only, prefixed with '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_report(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace deltaritz::cli
