// twolevel: sweeps, EP search and self-validation for the two-level
// non-Hermitian Hamiltonian.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twolevel/io/config.hpp"
#include "twolevel/io/csv.hpp"
#include "twolevel/io/json.hpp"
#include "twolevel/io/svg.hpp"
#include "twolevel/twolevel.hpp"

namespace fs = std::filesystem;
using namespace twolevel;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3 };

struct ScenarioArgs {
  std::string preset;
  std::string config;
  std::optional<double> a_min, a_max;
  std::optional<int> steps;

  void attach(CLI::App* app) {
    auto* p = app->add_option("--preset", preset, "Figure preset (see `presets`)");
    auto* c = app->add_option("--config", config, "Scenario file")->check(CLI::ExistingFile);
    p->excludes(c);
    c->excludes(p);
    app->add_option("--a-min", a_min, "Override sweep start");
    app->add_option("--a-max", a_max, "Override sweep end");
    app->add_option("--steps", steps, "Override number of grid points");
  }

  SweepScenario load() const {
    if (preset.empty() == config.empty()) {
      throw CLI::ValidationError("exactly one of --preset or --config is required");
    }
    SweepScenario s;
    if (!preset.empty()) {
      s = twolevel::preset(preset);
    } else {
      std::ifstream in(config);
      std::stringstream buf;
      buf << in.rdbuf();
      s = io::parse_config(buf.str());
    }
    if (a_min) s.a_min = *a_min;
    if (a_max) s.a_max = *a_max;
    if (steps) s.n_steps = *steps;
    s.validate();
    return s;
  }
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<std::string> split_formats(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

std::string ep_table(const std::vector<EpReport>& reports) {
  std::string out = "method          a_star                   |Z|          true_ep  left               right\n";
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%-15s %-24.17g %-12.4e %-8s %-18s %s\n", to_string(r.method),
                  r.a_star, r.z_mag, r.is_true_ep ? "yes" : "no", to_string(r.regime_left),
                  to_string(r.regime_right));
    out += buf;
  }
  if (reports.empty()) out += "(no coalescence candidates)\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigen-analysis and exceptional points of the two-level non-Hermitian Hamiltonian"};
  app.require_subcommand(1);

  auto* presets_cmd = app.add_subcommand("presets", "List the figure presets and their parameters");

  ScenarioArgs sweep_args;
  std::string out_dir = ".";
  std::string formats = "csv";
  std::string quantity;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a scenario on its grid and write CSV/JSON/SVG");
  sweep_args.attach(sweep_cmd);
  sweep_cmd->add_option("--out", out_dir, "Output directory");
  sweep_cmd->add_option("--format", formats, "Comma-separated subset of csv,json,svg");
  sweep_cmd->add_option("--quantity", quantity, "SVG quantity (default: all)");

  ScenarioArgs ep_args;
  std::string ep_out;
  auto* ep_cmd = app.add_subcommand("ep-find", "Locate exceptional points of a scenario");
  ep_args.attach(ep_cmd);
  ep_cmd->add_option("--out", ep_out, "Directory for <name>_ep.json");

  ScenarioArgs point_args;
  double point_a = 0.0;
  auto* point_cmd = app.add_subcommand("point", "Print all observables at one parameter value as JSON");
  point_args.attach(point_cmd);
  point_cmd->add_option("--a", point_a, "Parameter value")->required();

  ValidateOptions vopt;
  auto* validate_cmd = app.add_subcommand("validate", "Run the built-in invariant suite");
  validate_cmd->add_option("--seed", vopt.seed, "Random seed for the property checks");
  validate_cmd->add_option("--samples", vopt.samples, "Number of random Hamiltonians")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (presets_cmd->parsed()) {
      for (const auto& p : kPresets) std::cout << p.name << "  " << p.description << "\n";
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      const SweepScenario s = sweep_args.load();
      const auto fmts = split_formats(formats);
      if (fmts.empty()) throw CLI::ValidationError("--format needs at least one of csv,json,svg");
      std::vector<io::Quantity> quantities;
      if (!quantity.empty()) {
        const auto q = io::parse_quantity(quantity);
        if (!q) throw CLI::ValidationError("unknown --quantity '" + quantity + "'");
        quantities.push_back(*q);
      } else {
        for (std::size_t i = 0; i < io::kQuantityNames.size(); ++i) {
          quantities.push_back(static_cast<io::Quantity>(i));
        }
      }
      const auto records = run_sweep(s);
      const fs::path dir(out_dir);
      const std::string stem = s.name.empty() ? "scenario" : s.name;
      for (const auto& f : fmts) {
        if (f == "csv") {
          write_file(dir / (stem + ".csv"), io::emit_csv(records));
        } else if (f == "json") {
          write_file(dir / (stem + ".json"), io::emit_json(s, records));
        } else if (f == "svg") {
          for (const auto q : quantities) {
            write_file(dir / (stem + "_" + std::string(io::to_string(q)) + ".svg"),
                       io::emit_svg(records, q, &s));
          }
        } else {
          throw CLI::ValidationError("unknown format '" + f + "'");
        }
      }
      std::cout << "wrote " << records.size() << " records for " << stem << " to " << dir.string() << "\n";
      return kOk;
    }

    if (ep_cmd->parsed()) {
      const SweepScenario s = ep_args.load();
      const auto reports = locate_eps(s);
      std::cout << ep_table(reports);
      if (!ep_out.empty()) {
        write_file(fs::path(ep_out) / ((s.name.empty() ? "scenario" : s.name) + "_ep.json"),
                   io::emit_ep_json(s, reports));
      }
      return kOk;
    }

    if (point_cmd->parsed()) {
      const SweepScenario s = point_args.load();
      std::cout << io::record_json(evaluate_point(s, point_a)).dump(1) << "\n";
      return kOk;
    }

    if (validate_cmd->parsed()) {
      const ValidationReport rep = run_validate(vopt);
      std::cout << format_report(rep);
      return rep.passed() ? kOk : kValidation;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kParse : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
