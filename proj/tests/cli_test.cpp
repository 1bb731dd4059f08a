#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace deltaritz::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "deltaritz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  for (auto& line : split(text, '\n'))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

TEST(Cli, HarmonicTableWithExactRow) {
  const Result r = invoke({"table", "--preset", "harmonic", "--g", "1", "--nmax", "11", "--k", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 1u + 10u + 1u);
  const std::vector<std::string> expected{"0.8927440453", "2.754641533", "4.700195826", "6.669909052",
                                          "8.650086942"};
  auto row11 = words(lines[10]);
  ASSERT_EQ(row11.front(), "11");
  EXPECT_EQ(std::vector<std::string>(row11.begin() + 1, row11.end()), expected);
  auto exact = words(lines[11]);
  ASSERT_EQ(exact.front(), "Exact");
  EXPECT_EQ(std::vector<std::string>(exact.begin() + 1, exact.end()), expected);
  // N = 2 has two roots and three blank cells
  EXPECT_EQ(words(lines[1]).size(), 3u);
}

TEST(Cli, CriticalCubic) {
  const Result r = invoke({"critical", "--preset", "cubic"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(words(lines[1]).back(), "-0.7651281365");
}

TEST(Cli, UnperturbedSpectrum) {
  const Result r = invoke({"spectrum", "--preset", "harmonic", "--g", "0", "--n", "11", "--k", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(words(lines[1]), (std::vector<std::string>{"11", "0.5000000000"}));
}

TEST(Cli, NegativeValuesParse) {
  const Result r = invoke({"spectrum", "--g", "-1", "--n", "11", "--k", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("-0.3424189467"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"table", "--preset", "quartic", "--g", "-1", "--nmax", "8"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvMatchesTextReport) {
  const std::vector<std::string> base{"table", "--preset", "cubic", "--g", "1", "--nmax", "9"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const Result text = invoke(base);
  const Result csv = invoke(csv_args);
  ASSERT_EQ(text.status, 0);
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.find('#'), std::string::npos);

  const auto text_lines = data_lines(text.out);
  const auto csv_lines = data_lines(csv.out);
  ASSERT_EQ(text_lines.size(), csv_lines.size());
  EXPECT_EQ(csv_lines[0], "N,W0,W1,W2,W3,W4");
  for (std::size_t i = 1; i < csv_lines.size(); ++i) {
    auto fields = split(csv_lines[i], ',');
    ASSERT_EQ(fields.size(), 6u);
    std::vector<std::string> nonempty;
    for (const auto& f : fields)
      if (!f.empty()) nonempty.push_back(f);
    const auto text_words = words(text_lines[i]);
    ASSERT_EQ(nonempty.size(), text_words.size());
    for (std::size_t c = 0; c < nonempty.size(); ++c)
      EXPECT_EQ(std::stod(nonempty[c]), std::stod(text_words[c]));
  }
}

TEST(Cli, PresetDefaultsAndCustomPotential) {
  // quartic preset implies a = 2; an explicit potential with --a 2 must match it.
  const Result preset_run = invoke({"spectrum", "--preset", "quartic", "--g", "1", "--n", "6", "--format", "csv"});
  const Result custom = invoke({"spectrum", "--potential", "1*|x|^4", "--a", "2", "--g", "1", "--n", "6", "--format", "csv"});
  ASSERT_EQ(preset_run.status, 0) << preset_run.err;
  ASSERT_EQ(custom.status, 0) << custom.err;
  EXPECT_EQ(preset_run.out, custom.out);
  EXPECT_NE(preset_run.out.find("1.202214950"), std::string::npos);
}

TEST(Cli, SweepCsvCarriesBothSeries) {
  const Result r = invoke({"sweep", "--grid", "-3,-2,-0.5,0", "--n", "11", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "g,W0,perturbative,in_regime");
  EXPECT_EQ(split(lines[1], ',')[2], "-4.388888889");
  EXPECT_EQ(split(lines[1], ',')[3], "1");
  EXPECT_EQ(split(lines[3], ',')[3], "0");
  EXPECT_EQ(split(lines[4], ',')[2], "");
}

TEST(Cli, OracleLevelsAndInversion) {
  const Result levels = invoke({"oracle", "--g", "-1", "--k", "2"});
  ASSERT_EQ(levels.status, 0) << levels.err;
  // correctly rounded closed-form value (-0.34241894678...)
  EXPECT_NE(levels.out.find("-0.3424189468"), std::string::npos);
  const Result inverse = invoke({"oracle", "--energy", "0"});
  ASSERT_EQ(inverse.status, 0) << inverse.err;
  EXPECT_NE(inverse.out.find("-0.6759782401"), std::string::npos);
}

TEST(Cli, HellmannReport) {
  const Result r = invoke({"hellmann", "--g", "1", "--n", "11", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "g,h,dW0_dg,psi0_density,residual");
  EXPECT_LE(std::stod(split(lines[1], ',')[4]), 1e-6);
}

TEST(Cli, WidthScan) {
  const Result r = invoke({"spectrum", "--preset", "quartic", "--n", "6", "--k", "2", "--scan-a", "1,3,5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(words(lines[0]), (std::vector<std::string>{"a", "W0", "W1"}));
  EXPECT_EQ(words(lines[3]).front(), "2");
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "deltaritz_cli_test.csv";
  const Result r = invoke({"critical", "--preset", "harmonic", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "N,g0\n17,-0.6759782401\n");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"table", "--preset", "sextic"},
           {"spectrum", "--potential", "x^2"},
           {"spectrum", "--digits", "8"},
           {"table", "--nmax", "3", "--k", "5"},
           {"spectrum", "--preset", "cubic", "--potential", "|x|^3"},
           {"spectrum", "--format", "json"}}) {
    const Result r = invoke(args);
    EXPECT_EQ(r.status, kExitUsage) << (args.empty() ? "<none>" : args[0]);
    EXPECT_EQ(r.err.rfind("error[parse]", 0), 0u) << r.err;
  }
}

TEST(Cli, NumericalErrorsExitWithThree) {
  const Result pole = invoke({"oracle", "--energy", "1.5"});
  EXPECT_EQ(pole.status, kExitNumerical);
  EXPECT_EQ(pole.err.rfind("error[pole]", 0), 0u) << pole.err;

  const Result cholesky = invoke({"spectrum", "--digits", "16", "--n", "40"});
  EXPECT_EQ(cholesky.status, kExitNumerical);
  EXPECT_EQ(cholesky.err.rfind("error[ill-conditioned-basis]", 0), 0u) << cholesky.err;
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("spectrum"), std::string::npos);
}

}  // namespace
}  // namespace deltaritz::cli
