#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace deltaritz::cli {

std::string format_significant(const Real& value, int significant) {
  return value.to_string(significant);
}

std::string format_significant(double value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%#.*g", std::max(significant, 1), value);
  std::string out(buffer);
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
      out << '\n';
    };
    line(report.header);
    for (const auto& row : report.rows) line(row);
    return;
  }

  for (const auto& comment : report.comments) out << "# " << comment << '\n';
  std::vector<std::size_t> width(report.header.size(), 0);
  auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], cells[c].size());
  };
  measure(report.header);
  for (const auto& row : report.rows) measure(row);

  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      if (c) text += "  ";
      text += std::string(width[c] - cell.size(), ' ') + cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(report.header);
  for (const auto& row : report.rows) line(row);
}

}  // namespace deltaritz::cli
