#pragma once

#include <functional>

namespace uavsec {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_refinements = 4000;
};

/// Globally adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi].
/// Refines the segment with the largest error estimate until the total
/// estimate meets max(abs_tol, rel_tol·|I|). Throws std::runtime_error when
/// max_refinements is exhausted or the integrand returns non-finite values.
/// err_out, when given, receives the final error estimate.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg = {}, double* err_out = nullptr);

/// ∫_lo^∞ f, with the half-line compactified through x = lo + scale·u/(1-u).
/// scale should be of the order of the integrand's characteristic width.
double integrate_to_inf(const std::function<double(double)>& f, double lo, double scale,
                        const QuadratureConfig& cfg = {}, double* err_out = nullptr);

}  // namespace uavsec
