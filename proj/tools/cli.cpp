#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "deltaritz/analysis.hpp"
#include "deltaritz/eigensolver.hpp"
#include "deltaritz/errors.hpp"
#include "deltaritz/harmonic_oracle.hpp"

namespace deltaritz::cli {

namespace {

struct ResolvedModel {
  std::string label;
  MonomialPotential potential;
  double a;
};

ResolvedModel resolve_model(const RunConfig& config) {
  if (!config.potential.empty()) {
    MonomialPotential potential = MonomialPotential::parse(config.potential);
    return {potential.to_string(), potential, config.a.value_or(1.0)};
  }
  Preset p = preset(config.preset);
  return {p.name + " (" + p.potential.to_string() + ")", p.potential, config.a.value_or(p.width)};
}

std::string fmt(double value, const RunConfig& config) {
  return format_significant(value, config.significant);
}

std::string fmt(const Real& value, const RunConfig& config) {
  return format_significant(value, config.significant);
}

// Plain shortest form for input echo (g, a) in comments and key columns.
std::string echo(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << value;
  return out.str();
}

std::vector<std::string> root_header(const std::string& first, std::size_t k) {
  std::vector<std::string> header{first};
  for (std::size_t j = 0; j < k; ++j) header.push_back("W" + std::to_string(j));
  return header;
}

std::string model_comment(const ResolvedModel& model, const RunConfig& config) {
  return "V = " + model.label + ", a = " + echo(model.a) + ", " + to_string(config.sector) +
         " sector, " + std::to_string(config.digits) + "-digit arithmetic";
}

Report spectrum_report(const RunConfig& config, const PrecisionContext& ctx) {
  const ResolvedModel model = resolve_model(config);
  const std::size_t k = std::min(config.k, config.n);
  Report report;
  report.comments.push_back(model_comment(model, config));
  report.comments.push_back("g = " + echo(config.g) + ", N = " + std::to_string(config.n));

  if (config.width_scan) {
    const WidthScan& scan = *config.width_scan;
    report.header = root_header("a", k);
    for (std::size_t i = 0; i < scan.steps; ++i) {
      const double a = scan.steps == 1 ? scan.lo
                                       : scan.lo + (scan.hi - scan.lo) * static_cast<double>(i) /
                                                       static_cast<double>(scan.steps - 1);
      const AssembledSystem system =
          assemble(model.potential, BasisSpec{a, config.n, config.g, config.sector}, ctx);
      const Spectrum spectrum = solve_generalized(system, ctx, {.estimate_condition = false});
      std::vector<std::string> row{echo(a)};
      for (std::size_t j = 0; j < k; ++j) row.push_back(fmt(spectrum.roots[j], config));
      report.rows.push_back(std::move(row));
    }
    return report;
  }

  const AssembledSystem system =
      assemble(model.potential, BasisSpec{model.a, config.n, config.g, config.sector}, ctx);
  const Spectrum spectrum = solve_generalized(system, ctx);
  const double condition = spectrum.gram_condition->to_double();
  report.comments.push_back("overlap condition number " + format_significant(condition, 3));
  if (std::log10(condition) > config.digits - 15)
    report.comments.push_back("warning: overlap matrix nearly singular at this precision; raise --digits");
  report.header = root_header("N", k);
  std::vector<std::string> row{std::to_string(config.n)};
  for (std::size_t j = 0; j < k; ++j) row.push_back(fmt(spectrum.roots[j], config));
  report.rows.push_back(std::move(row));
  return report;
}

Report table_report(const RunConfig& config, const PrecisionContext& ctx) {
  const ResolvedModel model = resolve_model(config);
  const ConvergenceTable table = convergence_table(model.potential, config.g, model.a, config.n,
                                                   config.k, ctx, config.sector, config.n_min);
  Report report;
  report.comments.push_back(model_comment(model, config));
  report.comments.push_back("g = " + echo(config.g));
  report.header = root_header("N", config.k);
  for (const auto& r : table.rows) {
    std::vector<std::string> row{std::to_string(r.n)};
    for (const Real& w : r.roots) row.push_back(fmt(w, config));
    row.resize(config.k + 1);
    report.rows.push_back(std::move(row));
  }
  if (table.exact_row) {
    std::vector<std::string> row{"Exact"};
    for (double e : *table.exact_row) row.push_back(fmt(e, config));
    report.rows.push_back(std::move(row));
  }
  return report;
}

Report oracle_report(const RunConfig& config) {
  Report report;
  report.comments.push_back("V = x^2/2 + g delta(x), closed-form even-sector levels");
  if (config.energy) {
    report.header = {"E", "g"};
    report.rows.push_back({echo(*config.energy), fmt(harmonic_coupling_for_energy(*config.energy), config)});
    return report;
  }
  std::vector<std::string> header{"g"};
  for (std::size_t j = 0; j < config.k; ++j) header.push_back("E" + std::to_string(j));
  report.header = std::move(header);
  std::vector<std::string> row{echo(config.g)};
  for (double e : ho_exact_levels(config.g, config.k)) row.push_back(fmt(e, config));
  report.rows.push_back(std::move(row));
  return report;
}

Report critical_report(const RunConfig& config, const PrecisionContext& ctx) {
  const ResolvedModel model = resolve_model(config);
  const CriticalCoupling result = critical_coupling(model.potential, model.a, config.n, ctx, config.tol);
  Report report;
  report.comments.push_back(model_comment(model, config));
  report.comments.push_back("W0(g0) = 0 at N = " + std::to_string(config.n));
  report.header = {"N", "g0"};
  report.rows.push_back({std::to_string(config.n), fmt(result.g0, config)});
  return report;
}

Report sweep_report(const RunConfig& config, const PrecisionContext& ctx) {
  const ResolvedModel model = resolve_model(config);
  const auto rows = sweep_ground_state(model.potential, model.a, config.n, config.grid, ctx);
  Report report;
  report.comments.push_back(model_comment(model, config));
  report.comments.push_back("variational W0 at N = " + std::to_string(config.n) +
                            " and two-term large-|g| expansion");
  report.header = {"g", "W0", "perturbative", "in_regime"};
  for (const auto& r : rows) {
    report.rows.push_back({echo(r.g), fmt(r.ground_state, config),
                           r.perturbative ? fmt(*r.perturbative, config) : std::string(),
                           r.in_regime ? "1" : "0"});
  }
  return report;
}

Report hellmann_report(const RunConfig& config, const PrecisionContext& ctx) {
  const ResolvedModel model = resolve_model(config);
  const HellmannFeynmanCheck check =
      hellmann_feynman_check(model.potential, config.g, model.a, config.n, config.h, ctx, config.sector);
  Report report;
  report.comments.push_back(model_comment(model, config));
  report.comments.push_back("centered difference of W0 against |psi0(0)|^2, N = " + std::to_string(config.n));
  report.header = {"g", "h", "dW0_dg", "psi0_density", "residual"};
  report.rows.push_back({echo(config.g), echo(config.h), fmt(check.finite_difference, config),
                         fmt(check.density, config), format_significant(check.residual, 3)});
  return report;
}

Sector parse_sector(const std::string& text) {
  if (text == "even") return Sector::EvenAdapted;
  if (text == "odd") return Sector::Odd;
  throw ParseError("sector must be 'even' or 'odd'");
}

}  // namespace

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out) {
  RunConfig config;
  std::string format = "text";
  std::string sector = "even";
  double a_value = 0.0;
  double g_min = -3.0;
  double g_max = 0.0;
  std::size_t g_steps = 13;
  std::vector<double> scan;
  double energy = 0.0;

  CLI::App app{"Rayleigh-Ritz eigenvalues of -1/2 d^2/dx^2 + V(|x|) + g delta(x)", "deltaritz"};
  app.require_subcommand(1);

  struct Sub {
    Command command;
    CLI::App* app;
  };
  std::vector<Sub> subs{
      {Command::Spectrum, app.add_subcommand("spectrum", "Variational roots for one basis size")},
      {Command::Table, app.add_subcommand("table", "Convergence table over N = nmin..nmax")},
      {Command::Oracle, app.add_subcommand("oracle", "Closed-form levels for x^2/2 + g delta(x)")},
      {Command::Critical, app.add_subcommand("critical", "Critical coupling g0 where W0 crosses zero")},
      {Command::Sweep, app.add_subcommand("sweep", "Ground state over a grid of g with the large-|g| curve")},
      {Command::Hellmann, app.add_subcommand("hellmann", "Finite-difference dW0/dg against |psi0(0)|^2")},
  };

  std::vector<CLI::Option*> a_options;
  std::vector<CLI::Option*> energy_options;
  std::vector<CLI::Option*> scan_options;
  for (auto& sub : subs) {
    CLI::App* s = sub.app;
    s->add_option("--digits", config.digits, "Working precision in decimal digits")
        ->check(CLI::Range(PrecisionContext::kMinDigits, PrecisionContext::kMaxDigits));
    s->add_option("--sig", config.significant, "Significant digits printed")->check(CLI::Range(1, 60));
    s->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    s->add_option("--out", config.out_path, "Write the report to PATH instead of stdout");
    if (sub.command == Command::Oracle) {
      s->add_option("--g", config.g, "Delta strength");
      s->add_option("--k", config.k, "Number of levels")->check(CLI::PositiveNumber);
      energy_options.push_back(s->add_option("--energy", energy, "Print g(E) instead of levels"));
      continue;
    }
    auto* preset_option = s->add_option("--preset", config.preset, "harmonic | quartic | cubic")
                              ->check(CLI::IsMember({"harmonic", "quartic", "cubic"}));
    s->add_option("--potential", config.potential, "Custom potential 'A*|x|^b [+ A*|x|^b ...]'")
        ->excludes(preset_option);
    a_options.push_back(s->add_option("--a", a_value, "Gaussian width a (default: 1 harmonic, 2 quartic/cubic)")
                            ->check(CLI::PositiveNumber));

    switch (sub.command) {
      case Command::Spectrum:
        s->add_option("--g", config.g, "Delta strength");
        s->add_option("--n", config.n, "Basis size N")->check(CLI::PositiveNumber);
        s->add_option("--k", config.k, "Roots printed")->check(CLI::PositiveNumber);
        s->add_option("--sector", sector, "even | odd")->check(CLI::IsMember({"even", "odd"}));
        scan_options.push_back(
            s->add_option("--scan-a", scan, "Coarse width scan LO,HI,STEPS")->delimiter(',')->expected(3));
        break;
      case Command::Table:
        s->add_option("--g", config.g, "Delta strength");
        s->add_option("--nmax", config.n, "Largest basis size")->check(CLI::PositiveNumber);
        s->add_option("--nmin", config.n_min, "Smallest basis size")->check(CLI::PositiveNumber);
        s->add_option("--k", config.k, "Roots per row")->check(CLI::PositiveNumber);
        s->add_option("--sector", sector, "even | odd")->check(CLI::IsMember({"even", "odd"}));
        break;
      case Command::Critical:
        s->add_option("--n", config.n, "Basis size N")->check(CLI::PositiveNumber);
        s->add_option("--tol", config.tol, "Bracket width at termination")->check(CLI::PositiveNumber);
        break;
      case Command::Sweep:
        s->add_option("--n", config.n, "Basis size N")->check(CLI::PositiveNumber);
        s->add_option("--grid", config.grid, "Explicit g values, comma separated")->delimiter(',');
        s->add_option("--gmin", g_min, "Grid start");
        s->add_option("--gmax", g_max, "Grid end");
        s->add_option("--steps", g_steps, "Grid points")->check(CLI::PositiveNumber);
        break;
      case Command::Hellmann:
        s->add_option("--g", config.g, "Delta strength");
        s->add_option("--n", config.n, "Basis size N")->check(CLI::PositiveNumber);
        s->add_option("--step", config.h, "Finite-difference step")->check(CLI::PositiveNumber);
        s->add_option("--sector", sector, "even | odd")->check(CLI::IsMember({"even", "odd"}));
        break;
      case Command::Oracle:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  for (auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    config.command = sub.command;
  }
  for (auto* option : a_options)
    if (option->count() > 0) config.a = a_value;
  for (auto* option : energy_options)
    if (option->count() > 0) config.energy = energy;
  for (auto* option : scan_options) {
    if (option->count() == 0) continue;
    if (!(scan[2] >= 1.0) || scan[2] != std::floor(scan[2]) || !(scan[0] > 0.0) || !(scan[1] > 0.0))
      throw ParseError("--scan-a expects LO,HI,STEPS with positive widths and an integer STEPS >= 1");
    config.width_scan = WidthScan{scan[0], scan[1], static_cast<std::size_t>(scan[2])};
  }
  config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
  config.sector = parse_sector(sector);

  if (config.command == Command::Sweep && config.grid.empty()) {
    for (std::size_t i = 0; i < g_steps; ++i)
      config.grid.push_back(g_steps == 1 ? g_min
                                         : g_min + (g_max - g_min) * static_cast<double>(i) /
                                                       static_cast<double>(g_steps - 1));
  }
  if (config.command == Command::Table && config.n_min > config.n)
    throw ParseError("--nmin must not exceed --nmax");
  if (config.command == Command::Table && config.k > config.n)
    throw ParseError("--k must not exceed --nmax");
  if (!config.potential.empty()) MonomialPotential::parse(config.potential);
  return config;
}

void execute(const RunConfig& config, std::ostream& out) {
  const PrecisionContext ctx(config.digits);
  Report report;
  switch (config.command) {
    case Command::Spectrum: report = spectrum_report(config, ctx); break;
    case Command::Table: report = table_report(config, ctx); break;
    case Command::Oracle: report = oracle_report(config); break;
    case Command::Critical: report = critical_report(config, ctx); break;
    case Command::Sweep: report = sweep_report(config, ctx); break;
    case Command::Hellmann: report = hellmann_report(config, ctx); break;
  }

  if (config.out_path.empty()) {
    write_report(report, config.format, out);
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + config.out_path + "'");
  write_report(report, config.format, file);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_arguments(argc, argv, out);
    if (!config) return kExitOk;
    execute(*config, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error[parse]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error[" << to_string(e.category()) << "]: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace deltaritz::cli
