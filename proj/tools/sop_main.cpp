#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavsec/config.hpp"
#include "uavsec/montecarlo.hpp"
#include "uavsec/sop.hpp"
#include "uavsec/sweep.hpp"
#include "uavsec/validate.hpp"

namespace {

using namespace uavsec;

void print_estimate(const char* method, Bound bound, double value, double error_bound,
                    std::int64_t samples) {
  std::printf("sop=%.12g method=%s bound=%s error_bound=%.6g", value, method,
              bound == Bound::lower ? "lower" : "exact", error_bound);
  if (samples > 0) std::printf(" samples=%lld", static_cast<long long>(samples));
  std::printf("\n");
}

int run_point(Link link, const std::string& config_path, const std::string& method,
              Bound bound, DecompositionMode mode) {
  RunConfig cfg;
  if (!config_path.empty()) cfg = parse_config(config_path);
  cfg.link = link;
  const QuadratureConfig q = cfg.quadrature();

  const bool want_quad = method == "quad" || method == "both";
  const bool want_mc = method == "mc" || method == "both";

  if (want_quad) {
    SopEstimate est;
    if (link == Link::uplink) {
      const UplinkScenario sc = cfg.uplink_scenario();
      est = (bound == Bound::lower) ? sop_uplink_lower(sc, q) : sop_uplink_exact(sc, q);
    } else {
      const DownlinkScenario sc = cfg.downlink_scenario();
      est = (bound == Bound::lower) ? sop_downlink_lower(sc, q, mode)
                                    : sop_downlink_exact(sc, q, mode);
    }
    print_estimate("quadrature", bound, est.value, est.error_bound, 0);
  }
  if (want_mc) {
    RandomStream stream(cfg.seed, 0);
    McResult mc;
    if (link == Link::uplink) {
      mc = mc_sop_uplink(cfg.uplink_scenario(), cfg.mc_samples, bound, stream);
    } else {
      mc = mc_sop_downlink(cfg.downlink_scenario(), cfg.mc_samples, bound, stream);
    }
    print_estimate("monte_carlo", bound, mc.estimate, mc.half_width_95, mc.samples);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secrecy-outage evaluator for a line-trajectory air-to-ground link"};
  app.require_subcommand(1);

  std::string config_path;
  std::string method = "quad";
  std::string bound_str = "lower";
  std::string decomposition = "exact";

  const auto add_point_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--method", method, "quad|mc|both")
        ->check(CLI::IsMember({"quad", "mc", "both"}));
    cmd->add_option("--bound", bound_str, "lower|exact")
        ->check(CLI::IsMember({"lower", "exact"}));
    cmd->add_option("--decomposition", decomposition,
                    "exact|paper recombination weights (downlink)")
        ->check(CLI::IsMember({"exact", "paper"}));
  };

  CLI::App* up_cmd = app.add_subcommand("uplink", "outage of the ground-to-air link");
  add_point_options(up_cmd);
  CLI::App* dn_cmd = app.add_subcommand("downlink", "outage of the air-to-ground link");
  add_point_options(dn_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate one variable over a grid, emit CSV");
  std::string sweep_var;
  std::string sweep_grid;
  std::string out_path = "sweep.csv";
  std::string methods_str = "quad,mc";
  int jobs = 1;
  bool gnuplot = false;
  sweep_cmd->add_option("--config", config_path, "key=value configuration file");
  sweep_cmd->add_option("--var", sweep_var, "scenario field to sweep")->required();
  sweep_cmd->add_option("--grid", sweep_grid, "comma-separated increasing values")->required();
  sweep_cmd->add_option("--out", out_path, "output CSV path");
  sweep_cmd->add_option("--methods", methods_str, "comma subset of quad,mc,closed");
  sweep_cmd->add_option("--bound", bound_str, "lower|exact")
      ->check(CLI::IsMember({"lower", "exact"}));
  sweep_cmd->add_option("--decomposition", decomposition, "exact|paper (downlink)")
      ->check(CLI::IsMember({"exact", "paper"}));
  sweep_cmd->add_option("--jobs", jobs, "parallel cell evaluations")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--gnuplot", gnuplot, "also write a gnuplot-friendly .dat next to the CSV");

  CLI::App* val_cmd = app.add_subcommand("validate", "run the self-check and adjudication suite");
  std::string suite = "all";
  std::uint64_t val_seed = 1;
  val_cmd->add_option("--suite", suite, "all|specfun|distributions|sop")
      ->check(CLI::IsMember({"all", "specfun", "distributions", "sop"}));
  val_cmd->add_option("--seed", val_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Bound bound = bound_str == "exact" ? Bound::exact : Bound::lower;
    const DecompositionMode mode =
        decomposition == "paper" ? DecompositionMode::paper : DecompositionMode::exact;

    if (up_cmd->parsed()) return run_point(Link::uplink, config_path, method, bound, mode);
    if (dn_cmd->parsed()) return run_point(Link::downlink, config_path, method, bound, mode);

    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      if (!config_path.empty()) spec.base = parse_config(config_path);
      spec.variable = sweep_var;
      spec.bound = bound;
      spec.decomposition = mode;
      spec.jobs = jobs;
      for (const auto& tok : CLI::detail::split(sweep_grid, ',')) {
        spec.grid.push_back(std::stod(tok));
      }
      spec.methods.clear();
      for (const auto& tok : CLI::detail::split(methods_str, ',')) {
        if (tok == "quad") {
          spec.methods.push_back(Method::quadrature);
        } else if (tok == "mc") {
          spec.methods.push_back(Method::monte_carlo);
        } else if (tok == "closed") {
          spec.methods.push_back(Method::closed_form);
        } else {
          std::cerr << "unknown method '" << tok << "'\n";
          return 2;
        }
      }
      const std::vector<SweepRow> rows = run_sweep(spec);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return 2;
      }
      write_sweep_csv(out, rows);
      if (gnuplot) {
        std::ofstream dat(out_path + ".dat", std::ios::binary);
        write_sweep_gnuplot(dat, rows);
      }
      for (const SweepRow& r : rows) {
        if (!r.error.empty()) {
          std::cerr << "cell " << r.variable << "=" << r.value << " ("
                    << (r.method == Method::quadrature
                            ? "quadrature"
                            : r.method == Method::monte_carlo ? "monte_carlo" : "closed_form")
                    << ") failed: " << r.error << "\n";
        }
      }
      return 0;
    }

    if (val_cmd->parsed()) {
      ValidateSuite s = ValidateSuite::all;
      if (suite == "specfun") s = ValidateSuite::specfun;
      if (suite == "distributions") s = ValidateSuite::distributions;
      if (suite == "sop") s = ValidateSuite::sop;
      return run_validate(s, val_seed, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
