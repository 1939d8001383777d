#pragma once

#include <complex>
#include <vector>

namespace uavsec::specfun {

/// Error function, relative error below 1e-12 over the real line.
double erf(double x);

/// Complementary error function.
double erfc(double x);

/// Lower incomplete gamma Υ(a, x) = ∫₀ˣ e^{-t} t^{a-1} dt, a > 0, x >= 0.
/// Throws std::domain_error outside that domain.
double lower_inc_gamma(double a, double x);

/// Upper incomplete gamma Γ(a, x) = Γ(a) - Υ(a, x), computed without the
/// subtraction when x is large so that small tails keep relative accuracy.
double upper_inc_gamma(double a, double x);

/// Real log-gamma for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

/// Complex log-gamma. exp(ln_gamma(z)) equals Γ(z); in the reflected
/// half-plane (Re z < 0.5) the imaginary part may differ from the principal
/// branch by a multiple of 2π, which exponentiation does not see.
/// Throws std::domain_error at the poles (non-positive real integers).
std::complex<double> ln_gamma(std::complex<double> z);

/// Parameters of G^{m,n}_{p,q}[x | a; b].
///
/// Only the pole-separable real-parameter classes with p, q <= 4 are
/// supported: the two pole families of the Mellin-Barnes integrand must be
/// split by a vertical contour, i.e. max(a_1..a_n) - 1 < min(b_1..b_m), and
/// the integrand must decay along the contour (m + n > (p + q)/2).
struct MeijerParams {
  int m = 0;
  int n = 0;
  std::vector<double> a;  // size p
  std::vector<double> b;  // size q

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }

  /// Throws std::invalid_argument when outside the supported class.
  void validate() const;

  /// Abscissa of the integration contour (midpoint of the pole gap).
  double contour_abscissa() const;
};

/// Numerical Meijer G via adaptive quadrature along a vertical Mellin-Barnes
/// contour. Relative error target rel_tol (default 1e-8). Throws
/// std::invalid_argument for unsupported parameters, std::domain_error for
/// x <= 0, std::runtime_error when the contour tail fails to converge.
double meijer_g(const MeijerParams& params, double x, double rel_tol = 1e-8);

}  // namespace uavsec::specfun
