#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "uavsec/config.hpp"
#include "uavsec/montecarlo.hpp"
#include "uavsec/sop.hpp"

namespace uavsec {

/// One swept scenario field evaluated over a grid. Monte Carlo cells draw
/// from stream_id = grid index, so the output is independent of `jobs`.
struct SweepSpec {
  RunConfig base;
  std::string variable;                      // one of the real-valued config keys
  std::vector<double> grid;                  // non-empty, strictly increasing
  std::vector<Method> methods = {Method::quadrature, Method::monte_carlo};
  Bound bound = Bound::lower;
  DecompositionMode decomposition = DecompositionMode::exact;
  int jobs = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
  std::string variable;
  double value = 0.0;
  Link link = Link::uplink;
  Bound bound = Bound::lower;
  Method method = Method::quadrature;
  std::optional<double> sop;          // empty when the cell failed
  std::optional<double> error_bound;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  // Scenario snapshot, in CSV column order.
  double n = 0.0, rs_bits = 0.0, lambda_db = 0.0, g_main = 0.0, g_eve = 0.0;
  double r_g = 0.0, chord_b = 0.0, chord_l = 0.0, r_s = 0.0, height_h = 0.0;
  std::string error;  // diagnostic only; not part of the CSV schema
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with the fixed header
/// variable,value,link,bound,method,sop,error_bound,samples,seed,
/// n,rs_bits,lambda_db,g_main,g_eve,r_g,chord_b,chord_l,r_s,height_h.
/// UTF-8, LF line endings, 17 significant digits for floating-point cells.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Space-separated variant with a commented header, for gnuplot.
void write_sweep_gnuplot(std::ostream& out, const std::vector<SweepRow>& rows);

std::string sweep_csv_string(const std::vector<SweepRow>& rows);

}  // namespace uavsec
