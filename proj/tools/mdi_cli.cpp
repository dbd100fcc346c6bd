// mdi: command-line front end for the dipolar entanglement library.
//
//   mdi eval    --state ent:w=0.5 --t 0.3
//   mdi sweep   --preset fig1 --out fig1.csv
//   mdi verify  --suite oracles
//   mdi thermal --beta 1 --axis 1,0,0

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdi/mdi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct AxisFlags {
  std::string axis = "0,0,1";
  double coupling_d = 1.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--axis", axis, "dipole axis as x,y,z (normalized automatically)");
    cmd->add_option("--coupling-d", coupling_d, "coupling strength D; time is in units of 1/D");
  }

  mdi::DipoleAxis resolve() const { return {mdi::normalized(mdi::parse_vec3(axis)), coupling_d}; }
};

void print_suite(const mdi::CheckSuite& suite) {
  for (const auto& c : suite) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  max_err=" << mdi::format_double(c.max_error)
              << " tol=" << mdi::format_double(c.tolerance) << " n=" << c.samples << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dipole entanglement dynamics under the magnetic dipolar interaction"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evolve one initial state and print its measures");
  std::string state_text;
  double eval_t = 0.0;
  std::string eval_format = "csv";
  AxisFlags eval_axis;
  eval->add_option("--state", state_text, "state spec, e.g. pure:theta_a=0,theta_b=3.14159")->required();
  eval->add_option("--t", eval_t, "evolution time");
  eval->add_option("--format", eval_format, "csv or jsonl");
  eval_axis.add_to(eval);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a named preset or an explicit grid sweep");
  std::string preset_name, config_path, family, quantities, out_path = "-", sweep_format = "csv";
  std::vector<std::string> fixes, grids;
  std::optional<double> sweep_t;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  AxisFlags sweep_axis;
  auto* preset_opt = sweep->add_option("--preset", preset_name, "fig1, fig2-rho3, fig2-rho1, fig3, fig3-depol, fig4-coherence");
  auto* config_opt = sweep->add_option("--config", config_path, "key=value sweep config file");
  auto* family_opt = sweep->add_option("--family", family, "pure, mixed-x, mixed-z, ent, depol");
  preset_opt->excludes(config_opt)->excludes(family_opt);
  config_opt->excludes(family_opt);
  sweep->add_option("--fix", fixes, "fixed parameter name=value (repeatable)");
  sweep->add_option("--grid", grids, "swept axis name=start:stop:count (repeatable, outermost first)");
  sweep->add_option("--quantities", quantities, "comma list of concurrence, coherence_a, coherence_b, purity");
  sweep->add_option("--t", sweep_t, "pin the evolution time");
  sweep->add_option("--out", out_path, "output path, '-' for stdout");
  sweep->add_option("--format", sweep_format, "csv or jsonl");
  sweep->add_option("--threads", threads, "worker threads (output order is unaffected)");
  auto* sweep_axis_opt = sweep->add_option("--axis", sweep_axis.axis, "dipole axis as x,y,z");
  auto* sweep_d_opt = sweep->add_option("--coupling-d", sweep_axis.coupling_d, "coupling strength D");

  // verify
  auto* verify = app.add_subcommand("verify", "run built-in property checks");
  std::string suite_name = "all";
  std::size_t draws = 1000;
  verify->add_option("--suite", suite_name, "symmetries, oracles, thermal or all")
      ->check(CLI::IsMember({"symmetries", "oracles", "thermal", "all"}));
  verify->add_option("--draws", draws, "random draws per oracle check");

  // thermal
  auto* thermal = app.add_subcommand("thermal", "measures of the Gibbs state exp(-beta H)/Z");
  double beta = 1.0;
  std::string thermal_format = "csv";
  AxisFlags thermal_axis;
  thermal->add_option("--beta", beta, "inverse temperature (>= 0)")->required();
  thermal->add_option("--format", thermal_format, "csv or jsonl");
  thermal_axis.add_to(thermal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      const mdi::StateSpec spec = mdi::parse_state_spec(state_text);
      const mdi::EvolvedResult r = mdi::evolve(spec, eval_axis.resolve(), eval_t);
      const mdi::MeasureReport m = r.is_pure() ? mdi::measure(r.pure()) : mdi::measure(r.density());
      std::vector<std::string> cols{"t"};
      for (auto& c : mdi::report_columns()) cols.push_back(c);
      std::vector<double> vals{eval_t};
      for (double v : mdi::report_values(m)) vals.push_back(v);
      mdi::RecordWriter w(std::cout, cols, mdi::parse_output_format(eval_format));
      w.write(vals);
      return kExitOk;
    }

    if (*sweep) {
      mdi::SweepConfig cfg;
      if (!preset_name.empty()) {
        cfg = mdi::preset(preset_name);
      } else if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw mdi::ConfigError("cannot read config file '" + config_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = mdi::parse_sweep_config(ss.str());
      } else if (!family.empty()) {
        cfg.family = mdi::parse_family(family);
      } else {
        throw mdi::ConfigError("sweep needs --preset, --config or --family");
      }
      for (const auto& f : fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw mdi::ConfigError("--fix expects name=value, got '" + f + "'");
        const auto v = mdi::parse_double(std::string_view(f).substr(eq + 1));
        if (!v) throw mdi::ConfigError("--fix " + f + ": invalid number");
        mdi::set_fixed(cfg, f.substr(0, eq), *v);
      }
      for (const auto& g : grids) {
        const auto eq = g.find('=');
        if (eq == std::string::npos) throw mdi::ConfigError("--grid expects name=start:stop:count, got '" + g + "'");
        const std::string name = g.substr(0, eq);
        cfg.fixed.erase(name);
        std::erase_if(cfg.axes, [&](const mdi::GridAxis& ax) { return ax.name == name; });
        cfg.axes.push_back(mdi::parse_grid_axis(name, std::string_view(g).substr(eq + 1)));
      }
      if (!quantities.empty()) cfg.quantities = mdi::parse_quantities(quantities);
      if (sweep_t) mdi::set_fixed(cfg, "t", *sweep_t);
      if (sweep_axis_opt->count() || sweep_d_opt->count()) cfg.hamiltonian_axis = sweep_axis.resolve();
      cfg.threads = threads;
      mdi::validate(cfg);

      const auto format = mdi::parse_output_format(sweep_format);
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (out_path != "-") {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
          std::cerr << "error: cannot open '" << out_path << "' for writing\n";
          return kExitUsage;
        }
        out = &file;
      }
      mdi::RecordWriter w(*out, mdi::columns(cfg), format);
      mdi::run_sweep(cfg, [&](const mdi::SweepRecord& r) { w.write(r); });
      out->flush();
      if (!*out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kExitUsage;
      }
      return kExitOk;
    }

    if (*verify) {
      mdi::CheckSuite all;
      auto run = [&](const std::string& name, const mdi::CheckSuite& s) {
        std::cout << "== " << name << '\n';
        print_suite(s);
        all.insert(all.end(), s.begin(), s.end());
      };
      if (suite_name == "oracles" || suite_name == "all") run("oracles", mdi::run_oracle_suite(draws));
      if (suite_name == "symmetries" || suite_name == "all")
        run("symmetries", mdi::run_symmetry_suite(101, std::max(1u, std::thread::hardware_concurrency())));
      if (suite_name == "thermal" || suite_name == "all") run("thermal", mdi::run_thermal_suite());
      const bool ok = mdi::all_passed(all);
      std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*thermal) {
      const mdi::ComplexMatrix rho = mdi::gibbs_state(mdi::build_hamiltonian(thermal_axis.resolve()), beta);
      const mdi::MeasureReport m = mdi::measure(rho);
      std::vector<std::string> cols{"beta"};
      for (auto& c : mdi::report_columns()) cols.push_back(c);
      std::vector<double> vals{beta};
      for (double v : mdi::report_values(m)) vals.push_back(v);
      mdi::RecordWriter w(std::cout, cols, mdi::parse_output_format(thermal_format));
      w.write(vals);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
