// radunc: radial expectation values, uncertainties and their oracle check.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radunc/observables.hpp"
#include "radunc/tables.hpp"
#include "radunc/verify.hpp"

namespace {

using namespace radunc;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

struct OutputOptions {
  std::string format = "table";
  int precision = format::kDefaultPrecision;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision", o.precision, "Significant digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

void emit(const tables::Table& t, const OutputOptions& o) {
  std::cout << tables::render(t, tables::parse_format(o.format), o.precision);
}

struct StateArgs {
  int n = 0;
  int l = 0;
  int Z = 1;
  OutputOptions out;
};

CLI::App* add_state_command(CLI::App& app, System system, StateArgs& args) {
  const std::string name(to_string(system));
  CLI::App* cmd = app.add_subcommand(name, "Closed-form observables of one " + name + " state");
  cmd->add_option("--n", args.n, "Principal quantum number (zero index for isw)")->required();
  cmd->add_option("--l", args.l, "Azimuthal quantum number")->required();
  if (system == System::Hydrogen) {
    cmd->add_option("--Z", args.Z, "Atomic number")->check(CLI::Range(1, 4))->capture_default_str();
  }
  add_output_options(cmd, args.out);
  return cmd;
}

int run_state(System system, const StateArgs& a) {
  const tables::OutputRecord rec = tables::state_record(system, a.n, a.l, a.Z);
  emit(tables::records_table(std::span(&rec, 1)), a.out);
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> systems = {"hydrogen", "isw", "sho"};
  std::optional<int> max_n;
  std::vector<int> Z = {1};
  double tol = 1e-8;
  std::string report;
};

int run_verify(const VerifyArgs& a) {
  verify::SuiteConfig cfg;
  for (const auto& s : a.systems) cfg.systems.push_back(parse_system(s));
  if (a.max_n) {
    cfg.hydrogen_max_n = *a.max_n;
    cfg.isw_max_n = *a.max_n;
    cfg.sho_max_n = *a.max_n;
  }
  cfg.hydrogen_Z = a.Z;
  cfg.tol = a.tol;
  const auto reports = verify::run_suite(cfg);
  const auto summary = verify::summarize(reports);
  if (!a.report.empty()) {
    std::ofstream out(a.report, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report " << a.report << "\n";
      return kExitInvalid;
    }
    const bool json = a.report.size() >= 5 && a.report.substr(a.report.size() - 5) == ".json";
    out << (json ? verify::reports_to_json(reports) : verify::reports_to_csv(reports));
  }
  int shown = 0;
  for (const auto& r : reports) {
    if (r.pass || shown >= 20) continue;
    std::cerr << "FAIL " << verify::describe(r.state) << " " << r.field
              << " closed=" << format::number(r.closed_form, 12)
              << " oracle=" << format::number(r.oracle, 12)
              << " rel=" << format::number(r.rel_diff, 3) << "\n";
    ++shown;
  }
  std::cout << "states: " << summary.states << "  checks: " << summary.checks
            << "  failures: " << summary.failures << "\n";
  return summary.failures == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial expectation values and uncertainty products for hydrogenic atoms, "
               "the infinite spherical well and the spherical harmonic oscillator"};
  app.require_subcommand(1);

  StateArgs hydrogen_args, isw_args, sho_args;
  CLI::App* hydrogen_cmd = add_state_command(app, System::Hydrogen, hydrogen_args);
  CLI::App* isw_cmd = add_state_command(app, System::Isw, isw_args);
  CLI::App* sho_cmd = add_state_command(app, System::Sho, sho_args);

  std::string table_id;
  OutputOptions table_out;
  CLI::App* table_cmd = app.add_subcommand("table", "Regenerate a reference table");
  table_cmd->add_option("id", table_id, "III, IV, VI, VII, VIII, IX, X, XI, XII or XIII")->required();
  add_output_options(table_cmd, table_out);

  std::string family;
  tables::FigureOptions fig;
  OutputOptions fig_out;
  fig_out.format = "csv";
  CLI::App* figure_cmd = app.add_subcommand("figure", "Plot-ready series as <system>-<kind>");
  figure_cmd->add_option("family", family, "e.g. hydrogen-vs-n, isw-per-orbital, sho-ground-state-profile")
      ->required();
  figure_cmd->add_option("--l", fig.l, "Fixed l for vs-n");
  figure_cmd->add_option("--n", fig.n, "Fixed n for vs-ell");
  figure_cmd->add_option("--max-n", fig.max_n, "Largest n in the series");
  figure_cmd->add_option("--points", fig.points, "Grid points for profiles")->capture_default_str();
  add_output_options(figure_cmd, fig_out);

  VerifyArgs va;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every closed form against quadrature");
  verify_cmd->add_option("--systems", va.systems, "Systems to scan")
      ->delimiter(',')
      ->check(CLI::IsMember({"hydrogen", "isw", "sho"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-n", va.max_n, "Largest n for every system");
  verify_cmd->add_option("--Z", va.Z, "Hydrogenic atomic numbers")
      ->delimiter(',')
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  verify_cmd->add_option("--tol", va.tol, "Relative tolerance")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--report", va.report, "Write the report (.json for JSON, else CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*hydrogen_cmd) return run_state(System::Hydrogen, hydrogen_args);
    if (*isw_cmd) return run_state(System::Isw, isw_args);
    if (*sho_cmd) return run_state(System::Sho, sho_args);
    if (*table_cmd) {
      emit(tables::reference_table(table_id), table_out);
      return 0;
    }
    if (*figure_cmd) {
      emit(tables::figure(family, fig), fig_out);
      return 0;
    }
    if (*verify_cmd) return run_verify(va);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
