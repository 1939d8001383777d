#include "uavsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavsec/quadrature.hpp"

namespace uavsec::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kLn2Pi = 1.83787706640934548356;  // ln(2π)
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

template <typename T>
T lanczos_ln_gamma(T z) {
  // Valid for Re(z) > 0.
  T acc = T(kLanczos[0]);
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + T(i - 1));
  const T t = z + T(6.5);
  return T(0.5 * kLn2Pi) + (z - T(0.5)) * std::log(t) - t + std::log(acc);
}

// log(sin(πz)), stable for large |Im z|; branch offsets of 2πi possible.
std::complex<double> ln_sin_pi(std::complex<double> z) {
  const double y = z.imag();
  if (std::abs(y) < 8.0) return std::log(std::sin(kPi * z));
  if (y < 0.0) return std::conj(ln_sin_pi(std::conj(z)));
  // sin πz = -e^{-iπz}/(2i) · (1 - e^{2iπz}), |e^{2iπz}| = e^{-2πy} tiny.
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> small = std::exp(2.0 * kPi * i * z);
  return kPi * y - i * kPi * z.real() - std::log(2.0) - i * (kPi / 2.0) + std::log(1.0 - small);
}

// Series for Υ(a, x)·x^{-a}e^{x}: Σ_k x^k / (a(a+1)...(a+k)).
double lower_gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) return sum;
  }
  throw std::runtime_error("lower_inc_gamma: series did not converge");
}

// Continued fraction for Γ(a, x)·x^{-a}e^{x} (modified Lentz), x >= a + 1.
double upper_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 10000; ++k) {
    const double an = -k * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("upper_inc_gamma: continued fraction did not converge");
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return -erf(-x);
  if (x == 0.0) return 0.0;
  if (x > 6.5) return 1.0;  // erfc < 4e-20
  if (x <= 2.5) {
    // erf(x) = (2x/√π) e^{-x²} Σ_k (2x²)^k / (2k+1)!!, all terms positive.
    const double xx = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= xx / (2 * k + 1);
      sum += term;
      if (term < kEps * sum) break;
    }
    return (2.0 * x / kSqrtPi) * std::exp(-x * x) * sum;
  }
  return 1.0 - erfc(x);
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 2.5) return 1.0 - erf(x);
  // Modified Lentz on erfc(x)·√π·e^{x²} = 1/(x+ (1/2)/(x+ 1/(x+ (3/2)/(x+ ...)))).
  const double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < 400; ++j) {
    const double aj = (j == 1) ? 1.0 : 0.5 * (j - 1);
    d = x + aj * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + aj / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x * x) * f / kSqrtPi;
}

double lower_inc_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("lower_inc_gamma: requires a > 0");
  if (!(x >= 0.0)) throw std::domain_error("lower_inc_gamma: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double lg = ln_gamma(a);
  if (x < a + 1.0) {
    return std::exp(a * std::log(x) - x) * lower_gamma_series(a, x);
  }
  const double upper = std::exp(a * std::log(x) - x) * upper_gamma_cf(a, x);
  return std::exp(lg) - upper;
}

double upper_inc_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("upper_inc_gamma: requires a > 0");
  if (!(x >= 0.0)) throw std::domain_error("upper_inc_gamma: requires x >= 0");
  if (x == 0.0) return std::exp(ln_gamma(a));
  if (x < a + 1.0) {
    return std::exp(ln_gamma(a)) - std::exp(a * std::log(x) - x) * lower_gamma_series(a, x);
  }
  const double e = a * std::log(x) - x;
  if (e < -745.0) return 0.0;
  return std::exp(e) * upper_gamma_cf(a, x);
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  return lanczos_ln_gamma(x);
}

std::complex<double> ln_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw std::domain_error("ln_gamma: pole at non-positive integer");
  }
  if (z.real() >= 0.5) return lanczos_ln_gamma(z);
  // Reflection: Γ(z)Γ(1-z) = π / sin(πz).
  return std::log(kPi) - ln_sin_pi(z) - lanczos_ln_gamma(1.0 - z);
}

void MeijerParams::validate() const {
  const int pp = p();
  const int qq = q();
  if (m < 1 || m > qq || n < 0 || n > pp || pp > 4 || qq > 4) {
    throw std::invalid_argument("meijer_g: unsupported parameter class (need 1<=m<=q<=4, 0<=n<=p<=4)");
  }
  for (double v : a) {
    if (!std::isfinite(v)) throw std::invalid_argument("meijer_g: non-finite upper parameter");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw std::invalid_argument("meijer_g: non-finite lower parameter");
  }
  const double decay = m + n - 0.5 * (pp + qq);
  if (!(decay > 0.0)) {
    throw std::invalid_argument("meijer_g: contour integral does not decay (m + n <= (p + q)/2)");
  }
  if (n > 0) {
    const double left = *std::max_element(a.begin(), a.begin() + n) - 1.0;
    const double right = *std::min_element(b.begin(), b.begin() + m);
    if (!(left < right - 1e-12)) {
      throw std::invalid_argument("meijer_g: pole families are not separable by a vertical contour");
    }
  }
}

double MeijerParams::contour_abscissa() const {
  const double right = *std::min_element(b.begin(), b.begin() + m);
  if (n == 0) return right - 0.5;
  const double left = *std::max_element(a.begin(), a.begin() + n) - 1.0;
  return 0.5 * (left + right);
}

double meijer_g(const MeijerParams& params, double x, double rel_tol) {
  params.validate();
  if (!(x > 0.0)) throw std::domain_error("meijer_g: requires x > 0");

  const double sigma = params.contour_abscissa();
  const double lx = std::log(x);

  // Log of the gamma-ratio integrand at s = sigma + i t, including x^s.
  const auto log_term = [&](double t) -> std::complex<double> {
    const std::complex<double> s(sigma, t);
    std::complex<double> acc = s * lx;
    for (int j = 0; j < params.m; ++j) acc += ln_gamma(params.b[j] - s);
    for (int i = 0; i < params.n; ++i) acc += ln_gamma(1.0 - params.a[i] + s);
    for (int j = params.m; j < params.q(); ++j) acc -= ln_gamma(1.0 - params.b[j] + s);
    for (int i = params.n; i < params.p(); ++i) acc -= ln_gamma(params.a[i] - s);
    return acc;
  };
  const auto integrand = [&](double t) { return std::exp(log_term(t)).real(); };

  // Envelope scan: the magnitude decays like exp(-delta·π·t); truncate the
  // tail where it falls 16 decades below the running peak.
  double peak = 0.0;
  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0}) {
    peak = std::max(peak, std::exp(log_term(t).real()));
  }
  double tail = 4.0;
  for (;;) {
    const double env = std::exp(log_term(tail).real());
    peak = std::max(peak, env);
    if (env < 1e-16 * peak) break;
    tail *= 1.5;
    if (tail > 4000.0) {
      throw std::runtime_error("meijer_g: contour tail truncation failed to meet tolerance");
    }
  }

  QuadratureConfig cfg;
  cfg.rel_tol = std::max(rel_tol * 0.1, 1e-13);
  cfg.abs_tol = std::max(peak * tail * 1e-17, 1e-300);
  const double integral = integrate(integrand, 0.0, tail, cfg);
  return integral / kPi;
}

}  // namespace uavsec::specfun
