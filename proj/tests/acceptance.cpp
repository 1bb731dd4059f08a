// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "deltaritz/analysis.hpp"
#include "deltaritz/harmonic_oracle.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"
#include "report.hpp"

namespace {

using namespace deltaritz;
using reference::ReferenceTable;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> check;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const ReferenceTable& table_named(const std::string& name) {
  static const std::vector<ReferenceTable> tables = reference::reference_tables();
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw std::runtime_error("no reference table " + name);
}

MonomialPotential potential_of(const ReferenceTable& t) {
  return MonomialPotential({{t.coefficient, t.exponent}});
}

ConvergenceTable compute(const ReferenceTable& t, const PrecisionContext& ctx) {
  const std::size_t n_max = static_cast<std::size_t>(t.rows.back().n);
  return convergence_table(potential_of(t), t.g, t.width, n_max, 5, ctx);
}

// Every printed cell within one unit of its last printed digit.
struct CellReport {
  int compared = 0;
  int mismatched = 0;
  std::string first_mismatch;
};

CellReport compare_cells(const ReferenceTable& ref, const ConvergenceTable& computed) {
  CellReport report;
  for (std::size_t r = 0; r < ref.rows.size(); ++r) {
    const auto& row = ref.rows[r];
    const auto& roots = computed.rows.at(r).roots;
    for (std::size_t j = 0; j < 5; ++j) {
      const std::string_view cell = row.cells[j];
      if (cell.empty()) continue;
      ++report.compared;
      const double printed = std::stod(std::string(cell));
      const double unit = std::pow(10.0, -testing::printed_decimals(cell));
      const double diff = std::abs(roots.at(j).to_double() - printed);
      if (diff > unit * (1.0 + 1e-6)) {
        if (report.mismatched++ == 0) {
          std::ostringstream m;
          m << "N=" << row.n << " W" << j << ": " << roots[j].to_string(12) << " vs " << cell;
          report.first_mismatch = m.str();
        }
      }
    }
  }
  return report;
}

Outcome tables_outcome(const std::vector<std::string>& names, int digits, double budget_seconds) {
  const PrecisionContext ctx(digits);
  const auto start = std::chrono::steady_clock::now();
  int compared = 0;
  int mismatched = 0;
  std::string first;
  for (const auto& name : names) {
    const auto& ref = table_named(name);
    const CellReport r = compare_cells(ref, compute(ref, ctx));
    compared += r.compared;
    mismatched += r.mismatched;
    if (first.empty() && !r.first_mismatch.empty()) first = name + " " + r.first_mismatch;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << compared - mismatched << "/" << compared << " cells within 1 unit of the last printed digit, "
         << elapsed << " s (budget " << budget_seconds << " s)";
  if (!first.empty()) detail << "; first mismatch " << first;
  return {mismatched == 0 && elapsed < budget_seconds, detail.str()};
}

Outcome exact_row_outcome(const std::string& name, int& compared, int& mismatched) {
  const auto& ref = table_named(name);
  const auto levels = ho_exact_levels(ref.g, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    ++compared;
    const std::string_view cell = (*ref.exact)[j];
    const double unit = std::pow(10.0, -testing::printed_decimals(cell));
    if (std::abs(levels[j] - std::stod(std::string(cell))) > unit * (1.0 + 1e-6)) ++mismatched;
  }
  return {mismatched == 0, ""};
}

Outcome criterion_2() {
  Outcome table = tables_outcome({"harmonic g=-1"}, 50, 10.0);
  int compared = 0;
  int mismatched = 0;
  exact_row_outcome("harmonic g=-1", compared, mismatched);
  table.pass = table.pass && mismatched == 0;
  table.detail += "; Exact row " + std::to_string(compared - mismatched) + "/" + std::to_string(compared);
  return table;
}

Outcome criterion_5() {
  const PrecisionContext ctx(50);
  struct Case {
    PresetKind kind;
    const char* expected;
  };
  bool pass = true;
  std::ostringstream detail;
  for (const Case& c : {Case{PresetKind::Harmonic, "-0.6759782401"}, Case{PresetKind::Quartic, "-0.7515940253"},
                        Case{PresetKind::Cubic, "-0.7651281365"}}) {
    const Preset p = preset(c.kind);
    const CriticalCoupling cc = critical_coupling(p.potential, p.width, 17, ctx);
    const std::string got = cli::format_significant(cc.g0, 10);
    pass = pass && got == c.expected;
    detail << p.name << " " << got << (got == c.expected ? " " : " (expected " + std::string(c.expected) + ") ");
  }
  return {pass, detail.str()};
}

Outcome criterion_6() {
  int compared = 0;
  int mismatched = 0;
  exact_row_outcome("harmonic g=1", compared, mismatched);
  exact_row_outcome("harmonic g=-1", compared, mismatched);
  const std::string g0 = cli::format_significant(ho_critical_coupling(), 10);
  const bool pass = mismatched == 0 && g0 == "-0.6759782401";
  return {pass, std::to_string(compared - mismatched) + "/" + std::to_string(compared) +
                    " Exact cells match; g(E=0) = " + g0};
}

Outcome criterion_7() {
  const PrecisionContext ctx(50);
  const Real slack = ctx.ten_to_minus(ctx.digits() - 10);
  int checked = 0;
  int violations = 0;
  for (const auto& ref : reference::reference_tables()) {
    const ConvergenceTable t = compute(ref, ctx);
    std::vector<double> exact;
    if (t.exact_row) exact = *t.exact_row;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      for (std::size_t j = 0; j < t.rows[r].roots.size(); ++j) {
        const Real& w = t.rows[r].roots[j];
        if (r + 1 < t.rows.size()) {
          ++checked;
          if (t.rows[r + 1].roots[j] > w + slack * std::max(abs(w), ctx.make(1))) ++violations;
        }
        if (!exact.empty()) {
          ++checked;
          if (w.to_double() < exact[j] - 1e-12 * std::max(1.0, std::abs(exact[j]))) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " orderings checked, " + std::to_string(violations) +
                               " violations"};
}

Outcome criterion_8() {
  const PrecisionContext ctx(50);
  const auto v = preset(PresetKind::Harmonic).potential;
  const double r1 = hellmann_feynman_residual(v, 1.0, 1.0, 11, 1e-4, ctx).to_double();
  const double r2 = hellmann_feynman_residual(v, 1.0, 1.0, 11, 5e-5, ctx).to_double();
  const double ratio = r1 / r2;
  std::ostringstream detail;
  detail << "residual(h=1e-4) = " << r1 << " (<= 1e-6 " << (r1 <= 1e-6 ? "ok" : "FAILED")
         << "), residual(h/2) = " << r2 << ", ratio = " << ratio << " (required in [3.5, 4.5])";
  return {r1 <= 1e-6 && ratio >= 3.5 && ratio <= 4.5, detail.str()};
}

Outcome criterion_9() {
  const PrecisionContext ctx(50);
  const auto v = preset(PresetKind::Harmonic).potential;
  bool pass = true;
  std::ostringstream detail;
  detail.precision(3);
  const auto rows = sweep_ground_state(v, 1.0, 17, {-2.0, -1.5}, ctx);
  for (const auto& row : rows) {
    const double diff = std::abs(row.ground_state.to_double() - ho_exact_levels(row.g, 1)[0]);
    pass = pass && diff <= 1e-6;
    detail << "|W0 - exact| at g=" << row.g << ": " << diff << "; ";
  }
  const double gap = std::abs(large_g_leading(v, -3.0) - ho_exact_levels(-3.0, 1)[0]);
  pass = pass && gap <= 0.05;
  detail << "|two-term expansion - exact| at g=-3: " << gap << " (limit 0.05); ";

  const char* argv[] = {"deltaritz", "sweep", "--preset", "harmonic", "--n", "17", "--grid", "-3,-2,-1.5,-1,0",
                        "--format", "csv"};
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(static_cast<int>(std::size(argv)), argv, out, err);
  const std::string csv = out.str();
  const bool series = status == 0 && csv.rfind("g,W0,perturbative,in_regime\n", 0) == 0 &&
                      csv.find("\n-3,") != std::string::npos;
  pass = pass && series;
  detail << "sweep CSV with both series " << (series ? "present" : "MISSING");
  return {pass, detail.str()};
}

Outcome criterion_10() {
  const PrecisionContext ctx(50);
  const auto v = preset(PresetKind::Harmonic).potential;
  std::vector<Spectrum> spectra;
  for (double g : {-1.0, 0.0, 1.0})
    spectra.push_back(solve_generalized(assemble(v, BasisSpec{1.0, 12, g, Sector::Odd}, ctx), ctx));
  bool identical_roots = true;
  for (std::size_t s = 1; s < spectra.size(); ++s)
    for (std::size_t j = 0; j < spectra[0].size(); ++j)
      identical_roots = identical_roots && identical(spectra[s].roots[j], spectra[0].roots[j]);
  const double e0 = std::abs(spectra[0].roots[0].to_double() - 1.5);
  const double e1 = std::abs(spectra[0].roots[1].to_double() - 3.5);
  std::ostringstream detail;
  detail << "bitwise identical across g: " << (identical_roots ? "yes" : "NO") << "; |W0-1.5| = " << e0
         << ", |W1-3.5| = " << e1;
  return {identical_roots && e0 <= 1e-8 && e1 <= 1e-8, detail.str()};
}

Outcome criterion_11() {
  const auto& ref = table_named("harmonic g=1");
  const ConvergenceTable lo = compute(ref, PrecisionContext(50));
  const ConvergenceTable hi = compute(ref, PrecisionContext(80));
  int compared = 0;
  int changed = 0;
  for (std::size_t r = 0; r < lo.rows.size(); ++r)
    for (std::size_t j = 0; j < lo.rows[r].roots.size(); ++j) {
      ++compared;
      if (lo.rows[r].roots[j].to_string(10) != hi.rows[r].roots[j].to_string(10)) ++changed;
    }
  Outcome at80 = tables_outcome({"harmonic g=1"}, 80, 10.0);
  return {changed == 0 && at80.pass, std::to_string(changed) + "/" + std::to_string(compared) +
                                         " printed cells changed at 80 digits; " + at80.detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "harmonic g=1 table", [] { return tables_outcome({"harmonic g=1"}, 50, 10.0); }},
      {2, "harmonic g=-1 table and exact row", criterion_2},
      {3, "quartic g=+-1 tables", [] { return tables_outcome({"quartic g=1", "quartic g=-1"}, 50, 60.0); }},
      {4, "cubic g=+-1 tables", [] { return tables_outcome({"cubic g=1", "cubic g=-1"}, 50, 60.0); }},
      {5, "critical couplings", criterion_5},
      {6, "closed-form oracle", criterion_6},
      {7, "variational ordering", criterion_7},
      {8, "Hellmann-Feynman slope", criterion_8},
      {9, "large-|g| sweep", criterion_9},
      {10, "odd-sector invariance", criterion_10},
      {11, "precision robustness", criterion_11},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << " (" << c.title
              << "): " << outcome.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
