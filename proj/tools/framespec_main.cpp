// Command-line front end: parse a scenario document, run the symbolic
// criterion plus the numerical sweeps, and emit reports.
//
// Subcommands:
//   check     full pipeline: criterion, bound sweep, probes, cross-validation
//   probe     adjoint spectrum probe only
//   bounds    frame bound sweep and surjectivity evidence only
//   examples  list the shipped scenario documents
//
// Exit codes: 0 when a definite verdict (or probe outcome) was delivered,
// 2 when the result is inconclusive, 1 on any error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <framespec/report.hpp>
#include <framespec/scenario.hpp>

namespace {

using namespace framespec;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open scenario file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write output file \"" + path + "\"");
  out << content;
}

struct Overrides {
  std::string format;
  std::string csv;
  double tol = 0.0;
  std::size_t max_n = 0;
  bool format_given = false;
  bool csv_given = false;
  bool tol_given = false;
  bool max_n_given = false;
};

void apply_overrides(Scenario& s, const Overrides& ov) {
  std::vector<std::string> problems;
  if (ov.format_given) {
    if (ov.format != "text" && ov.format != "json") {
      problems.push_back("--format must be text or json");
    } else {
      s.format = ov.format;
    }
  }
  if (ov.csv_given) s.csv_path = ov.csv;
  if (ov.tol_given) {
    if (!(ov.tol > 0.0)) {
      problems.push_back("--tol must be positive");
    } else {
      s.tol = ov.tol;
    }
  }
  if (ov.max_n_given) {
    if (ov.max_n == 0) {
      problems.push_back("--max-n must be positive");
    } else {
      std::vector<std::size_t> kept;
      for (std::size_t n : s.sizes) {
        if (n <= ov.max_n) kept.push_back(n);
      }
      s.sizes = kept.empty() ? std::vector<std::size_t>{ov.max_n} : std::move(kept);
      s.max_probe_size = std::min(s.max_probe_size, ov.max_n);
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

// Emit the finished report to the configured destinations; returns what went
// to stdout so callers stay silent about plumbing.
void deliver(const Report& r, const Scenario& s) {
  const std::string doc = emit_report(r, s.format);
  if (s.report_path.empty()) {
    std::cout << doc;
  } else {
    write_file(s.report_path, doc);
    std::cout << "report written to " << s.report_path << "\n";
  }
  if (!s.csv_path.empty()) {
    if (r.bounds && r.surjectivity) {
      write_file(s.csv_path, emit_csv(r));
      std::cout << "csv written to " << s.csv_path << "\n";
    } else {
      std::cerr << "csv skipped: the run produced no bound sweep\n";
    }
  }
}

ProbeOptions probe_options_of(const Scenario& s) {
  ProbeOptions popts;
  popts.probe_tol = s.probe_tol;
  popts.max_size = s.max_probe_size;
  popts.boundary_points = s.probe_boundary_points;
  popts.interior_points = s.probe_interior_points;
  return popts;
}

int run_check(const std::string& path, const Overrides& ov) {
  Scenario s = parse_scenario(read_file(path));
  apply_overrides(s, ov);
  const Report r = run_scenario(s);
  deliver(r, s);
  if (!r.error.empty()) std::cerr << "error during " << r.failed_stage << ": " << r.error << "\n";
  return exit_code_for(r);
}

int run_probe(const std::string& path, const Overrides& ov) {
  Scenario s = parse_scenario(read_file(path));
  apply_overrides(s, ov);
  Report r;
  r.tool_version = kVersion;
  r.scenario = s;
  r.scenario.verbose = true;  // the per-point table is the point here
  const OperatorModel op = make_operator(s);
  r.operator_description = op.describe();
  r.spectrum_probe = probe_ap_equals_spectrum(op, probe_options_of(s));
  Scenario out = s;
  out.csv_path.clear();  // the probe has no sweep table to export
  deliver(r, out);
  return r.spectrum_probe->overall == ProbeOutcome::Inconclusive ? 2 : 0;
}

int run_bounds(const std::string& path, const Overrides& ov) {
  Scenario s = parse_scenario(read_file(path));
  apply_overrides(s, ov);
  Report r;
  r.tool_version = kVersion;
  r.scenario = s;
  const OperatorModel op = make_operator(s);
  const HoloFunction fn = make_function(s);
  const CalculusResult calc = apply_function(fn, op, s.series_eps);
  r.operator_description = op.describe();
  r.function_description = fn.describe();
  r.applied =
      AppliedFunction{calc.coefficients, calc.truncated, calc.tail_bound, calc.truncation_radius};
  r.bounds = estimate_frame_bounds(calc, s.sizes);
  r.surjectivity = surjectivity_probe(calc.op, s.sizes);
  deliver(r, s);
  return 0;
}

int run_examples(const std::string& write_dir) {
  for (const auto& sc : shipped_scenarios()) {
    std::cout << sc.name << "\n    " << sc.summary << "\n";
  }
  if (!write_dir.empty()) {
    std::filesystem::create_directories(write_dir);
    for (const auto& sc : shipped_scenarios()) {
      const std::string path = (std::filesystem::path(write_dir) / (sc.name + ".ini")).string();
      write_file(path, sc.text);
      std::cout << "wrote " << path << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides whether the images of the standard basis under a function of a bounded "
               "operator form a frame or a Riesz basis, and cross-checks the verdict numerically"};
  app.set_version_flag("--version", framespec::kVersion);
  app.require_subcommand(1);

  std::string scenario_path;
  std::string write_dir;
  Overrides ov;

  auto add_common = [&](CLI::App* cmd, bool with_csv) {
    cmd->add_option("--scenario", scenario_path, "scenario document to run")
        ->required()
        ->type_name("PATH");
    auto* f = cmd->add_option("--format", ov.format, "report format: text or json");
    auto* t = cmd->add_option("--tol", ov.tol, "override the criterion tolerance");
    auto* m = cmd->add_option("--max-n", ov.max_n,
                              "cap every truncation sweep at this section size");
    CLI::Option* c = nullptr;
    if (with_csv) c = cmd->add_option("--csv", ov.csv, "write the sweep table to this file");
    cmd->callback([&, f, t, m, c] {
      ov.format_given = f->count() > 0;
      ov.tol_given = t->count() > 0;
      ov.max_n_given = m->count() > 0;
      ov.csv_given = c != nullptr && c->count() > 0;
    });
  };

  CLI::App* check = app.add_subcommand(
      "check", "run the full pipeline: criterion, bound sweep, probes, cross-validation");
  add_common(check, true);
  CLI::App* probe =
      app.add_subcommand("probe", "run only the adjoint spectrum probe for the operator");
  add_common(probe, false);
  CLI::App* bounds = app.add_subcommand(
      "bounds", "run only the frame bound sweep and the surjectivity evidence");
  add_common(bounds, true);
  CLI::App* examples = app.add_subcommand("examples", "list the shipped scenario documents");
  examples->add_option("--write", write_dir, "also write the documents into this directory")
      ->type_name("DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return run_check(scenario_path, ov);
    if (probe->parsed()) return run_probe(scenario_path, ov);
    if (bounds->parsed()) return run_bounds(scenario_path, ov);
    return run_examples(write_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
