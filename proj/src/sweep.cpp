#include "uavsec/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace uavsec {

namespace {

const char* method_name(Method m) {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "?";
}

const char* bound_name(Bound b) { return b == Bound::lower ? "lower" : "exact"; }

const char* link_name(Link l) { return l == Link::uplink ? "up" : "dn"; }

void apply_variable(RunConfig& cfg, const std::string& name, double value) {
  if (name == "n") {
    cfg.path_loss_exp = value;
  } else if (name == "rs_bits") {
    cfg.rate_bits = value;
  } else if (name == "lambda_db") {
    cfg.lambda_db = value;
  } else if (name == "g_main") {
    cfg.gain_main = value;
  } else if (name == "g_eve") {
    cfg.gain_eve = value;
  } else if (name == "r_g") {
    cfg.radius_g = value;
  } else if (name == "chord_l") {
    cfg.chord_l = value;
  } else if (name == "chord_b") {
    cfg.chord_b = value;
  } else if (name == "r_s") {
    cfg.radius_s = value;
  } else if (name == "height_h") {
    cfg.height_h = value;
  } else {
    throw std::invalid_argument("sweep: unknown variable '" + name + "'");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SweepRow evaluate_cell(const SweepSpec& spec, std::size_t grid_index, Method method) {
  RunConfig cfg = spec.base;
  apply_variable(cfg, spec.variable, spec.grid[grid_index]);

  SweepRow row;
  row.variable = spec.variable;
  row.value = spec.grid[grid_index];
  row.link = cfg.link;
  row.bound = spec.bound;
  row.method = method;
  row.seed = cfg.seed;
  row.n = cfg.path_loss_exp;
  row.rs_bits = cfg.rate_bits;
  row.lambda_db = cfg.effective_lambda_db();
  row.g_main = cfg.gain_main;
  row.g_eve = cfg.gain_eve;
  row.r_g = cfg.radius_g;
  row.chord_b = cfg.chord_b;
  row.chord_l = cfg.chord_l;
  row.r_s = cfg.radius_s;
  row.height_h = cfg.height_h;

  try {
    cfg.check();
    const QuadratureConfig q = cfg.quadrature();
    if (method == Method::monte_carlo) {
      RandomStream stream(cfg.seed, static_cast<std::uint64_t>(grid_index));
      McResult mc;
      if (cfg.link == Link::uplink) {
        mc = mc_sop_uplink(cfg.uplink_scenario(), cfg.mc_samples, spec.bound, stream);
      } else {
        mc = mc_sop_downlink(cfg.downlink_scenario(), cfg.mc_samples, spec.bound, stream);
      }
      row.sop = mc.estimate;
      row.error_bound = mc.half_width_95;
      row.samples = mc.samples;
    } else if (method == Method::quadrature) {
      SopEstimate est;
      if (cfg.link == Link::uplink) {
        const UplinkScenario sc = cfg.uplink_scenario();
        est = (spec.bound == Bound::lower) ? sop_uplink_lower(sc, q) : sop_uplink_exact(sc, q);
      } else {
        const DownlinkScenario sc = cfg.downlink_scenario();
        est = (spec.bound == Bound::lower) ? sop_downlink_lower(sc, q, spec.decomposition)
                                           : sop_downlink_exact(sc, q, spec.decomposition);
      }
      row.sop = est.value;
      row.error_bound = est.error_bound;
    } else {
      if (cfg.link == Link::uplink || spec.bound == Bound::exact) {
        throw std::invalid_argument(
            "closed_form is only available for the downlink lower bound");
      }
      const DownlinkScenario sc = cfg.downlink_scenario();
      const double i_sp = integral_i_sp_closed_form(sc);
      double value = 0.0;
      if (sc.cap.altitude >= sc.cap.sphere_radius) {
        value = i_sp;
      } else {
        const double i_s2 = integral_i_s2_closed_form(sc);
        const RegionVolumes v = region_volumes(sc.cap);
        if (spec.decomposition == DecompositionMode::exact) {
          value = (v.sphere * i_sp - v.lower * i_s2) / v.upper;
        } else {
          const double r = sc.cap.sphere_radius;
          const double h = sc.cap.altitude;
          value = i_sp - h * h * (3.0 * r - h) / (4.0 * r * r * r) * i_s2;
        }
      }
      row.sop = value;
      row.error_bound = 1e-6;  // closed-form target accuracy
    }
  } catch (const std::exception& e) {
    row.sop.reset();
    row.error_bound.reset();
    row.error = e.what();
  }
  return row;
}

}  // namespace

void SweepSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("sweep: grid must be non-empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("sweep: grid must be strictly increasing");
    }
  }
  if (methods.empty()) throw std::invalid_argument("sweep: no methods requested");
  RunConfig probe = base;
  apply_variable(probe, variable, grid[0]);  // rejects unknown variable names
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  struct Cell {
    std::size_t grid_index;
    Method method;
  };
  std::vector<Cell> cells;
  for (std::size_t gi = 0; gi < spec.grid.size(); ++gi) {
    for (Method m : spec.methods) cells.push_back({gi, m});
  }
  std::vector<SweepRow> rows(cells.size());
  const int workers = std::max(1, std::min<int>(spec.jobs, 64));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      rows[i] = evaluate_cell(spec, cells[i].grid_index, cells[i].method);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          rows[i] = evaluate_cell(spec, cells[i].grid_index, cells[i].method);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "variable,value,link,bound,method,sop,error_bound,samples,seed,"
         "n,rs_bits,lambda_db,g_main,g_eve,r_g,chord_b,chord_l,r_s,height_h\n";
  for (const SweepRow& r : rows) {
    out << r.variable << ',' << format_double(r.value) << ',' << link_name(r.link) << ','
        << bound_name(r.bound) << ',' << method_name(r.method) << ','
        << (r.sop ? format_double(*r.sop) : "") << ','
        << (r.error_bound ? format_double(*r.error_bound) : "") << ',' << r.samples << ','
        << r.seed << ',' << format_double(r.n) << ',' << format_double(r.rs_bits) << ','
        << format_double(r.lambda_db) << ',' << format_double(r.g_main) << ','
        << format_double(r.g_eve) << ',' << format_double(r.r_g) << ','
        << format_double(r.chord_b) << ',' << format_double(r.chord_l) << ','
        << format_double(r.r_s) << ',' << format_double(r.height_h) << '\n';
  }
}

void write_sweep_gnuplot(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "# variable value link bound method sop error_bound samples seed\n";
  for (const SweepRow& r : rows) {
    out << r.variable << ' ' << format_double(r.value) << ' ' << link_name(r.link) << ' '
        << bound_name(r.bound) << ' ' << method_name(r.method) << ' '
        << (r.sop ? format_double(*r.sop) : "nan") << ' '
        << (r.error_bound ? format_double(*r.error_bound) : "nan") << ' ' << r.samples << ' '
        << r.seed << '\n';
  }
}

std::string sweep_csv_string(const std::vector<SweepRow>& rows) {
  std::ostringstream ss;
  write_sweep_csv(ss, rows);
  return ss.str();
}

}  // namespace uavsec
