#include "uavsec/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "uavsec/specfun.hpp"

namespace uavsec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoOverSqrtPi = 1.12837916709551257390;

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

double UplinkScenario::theta() const { return std::exp2(rate_bits); }

void UplinkScenario::validate() const {
  chord.validate();
  check_positive(radius_g, "uplink: hemisphere radius");
  if (!(path_loss_exp >= 2.0)) throw std::invalid_argument("uplink: path-loss exponent must be >= 2");
  check_positive(tx_snr, "uplink: transmit SNR");
  check_positive(gain_main, "uplink: main-link gain");
  check_positive(gain_eve, "uplink: eavesdropper-link gain");
  if (!(rate_bits >= 0.0)) throw std::invalid_argument("uplink: rate threshold must be >= 0");
  if (!(chord.length <= 2.0 * radius_g)) {
    throw std::invalid_argument("uplink: chord length must satisfy l <= 2*R_G");
  }
  if (!(chord.endpoint_dist <= radius_g)) {
    throw std::invalid_argument("uplink: chord endpoints must lie within the hemisphere (b <= R_G)");
  }
}

double DownlinkScenario::theta() const { return std::exp2(rate_bits); }

void DownlinkScenario::validate() const {
  cap.validate();
  if (!(path_loss_exp >= 2.0)) throw std::invalid_argument("downlink: path-loss exponent must be >= 2");
  check_positive(tx_snr, "downlink: transmit SNR");
  check_positive(gain_main, "downlink: main-link gain");
  check_positive(gain_eve, "downlink: eavesdropper-link gain");
  if (!(rate_bits >= 0.0)) throw std::invalid_argument("downlink: rate threshold must be >= 0");
}

UplinkDerived UplinkDerived::from(const UplinkScenario& sc) {
  const double lg = sc.tx_snr * sc.gain_main;
  const double c = sc.chord.min_dist_sq();
  UplinkDerived d;
  d.theta = sc.theta();
  d.a_s_paper = 2.0 * std::sqrt(kPi * lg) / sc.chord.length;
  d.a_s_corrected = std::sqrt(kPi * lg) / sc.chord.length;
  d.b_s = c / lg;
  d.c_s = std::sqrt((sc.chord.endpoint_dist * sc.chord.endpoint_dist - c) / lg);
  const double n = sc.path_loss_exp;
  d.eta = 3.0 * std::pow(sc.tx_snr * sc.gain_eve, 3.0 / n) /
          (n * sc.radius_g * sc.radius_g * sc.radius_g);
  return d;
}

DownlinkDerived DownlinkDerived::from(const DownlinkScenario& sc) {
  const double n = sc.path_loss_exp;
  const double r = sc.cap.sphere_radius;
  const double h = sc.cap.altitude;
  const double rc2 = r * r - h * h;
  const double lg_main = sc.tx_snr * sc.gain_main;
  const double lg_eve = sc.tx_snr * sc.gain_eve;
  const double v_lower = region_volumes(sc.cap).lower;
  DownlinkDerived d;
  d.theta = sc.theta();
  d.a_g = std::pow(r, n) / lg_main;
  d.b_g = std::pow(h, n) / lg_main;
  d.c_g = 2.0 * std::pow(lg_main, 2.0 / n) / (n * rc2);
  d.b_e = 3.0 * std::pow(lg_eve, 3.0 / n) / (n * r * r * r);
  d.c_e = std::pow(r, n) / lg_eve;
  d.d_e = std::pow(h, n) / lg_eve;
  d.e1 = 2.0 * kPi * std::pow(sc.tx_snr, 3.0 / n) / (n * v_lower * sc.gain_eve);
  d.e2 = 2.0 * kPi * h * std::pow(sc.tx_snr, 2.0 / n) / (n * v_lower * sc.gain_eve);
  return d;
}

double chord_distance_pdf(double y, const ChordGeometry& g) {
  g.validate();
  // 4y/(l·sqrt(4y² + l² - 4b²)) with the radicand written as 4(y² - c) so it
  // cannot round negative inside the support.
  const double excess = y * y - g.min_dist_sq();
  if (excess <= 0.0 || y > g.endpoint_dist) return 0.0;
  return 2.0 * y / (g.length * std::sqrt(excess));
}

double chord_distance_cdf(double y, const ChordGeometry& g) {
  g.validate();
  if (y <= g.min_dist()) return 0.0;
  if (y >= g.endpoint_dist) return 1.0;
  const double excess = y * y - g.min_dist_sq();
  if (excess <= 0.0) return 0.0;
  return 2.0 * std::sqrt(excess) / g.length;
}

double scaled_distance_power_pdf(Region region, double x, const UplinkScenario& sc) {
  sc.validate();
  const double n = sc.path_loss_exp;
  const double lambda = sc.tx_snr;
  switch (region) {
    case Region::chord: {
      const double c = sc.chord.min_dist_sq();
      const double b = sc.chord.endpoint_dist;
      const double lo = std::pow(c, 0.5 * n) / lambda;
      const double hi = std::pow(b, n) / lambda;
      if (x <= lo || x > hi) return 0.0;
      const double excess = std::pow(lambda * x, 2.0 / n) - c;
      if (excess <= 0.0) return 0.0;
      return 2.0 * lambda / (n * sc.chord.length) * std::pow(lambda * x, 2.0 / n - 1.0) /
             std::sqrt(excess);
    }
    case Region::hemisphere: {
      const double hi = std::pow(sc.radius_g, n) / lambda;
      if (x <= 0.0 || x > hi) return 0.0;
      return 3.0 * std::pow(lambda, 3.0 / n) /
             (n * sc.radius_g * sc.radius_g * sc.radius_g) * std::pow(x, 3.0 / n - 1.0);
    }
    default:
      throw std::invalid_argument("scaled_distance_power_pdf: region does not belong to the uplink");
  }
}

double scaled_distance_power_pdf(Region region, double x, const DownlinkScenario& sc) {
  sc.validate();
  const double n = sc.path_loss_exp;
  const double lambda = sc.tx_snr;
  const double r = sc.cap.sphere_radius;
  const double h = sc.cap.altitude;
  switch (region) {
    case Region::ball: {
      const double hi = std::pow(r, n) / lambda;
      if (x <= 0.0 || x > hi) return 0.0;
      return 3.0 * std::pow(lambda, 3.0 / n) / (n * r * r * r) * std::pow(x, 3.0 / n - 1.0);
    }
    case Region::disk_at_height: {
      const double lo = std::pow(h, n) / lambda;
      const double hi = std::pow(r, n) / lambda;
      if (x < lo || x > hi) return 0.0;
      const double rc2 = r * r - h * h;
      return 2.0 * std::pow(lambda, 2.0 / n) / (n * rc2) * std::pow(x, 2.0 / n - 1.0);
    }
    case Region::lower_cap: {
      if (h >= r) throw std::domain_error("lower cap: region is empty at h = R");
      const double lo = std::pow(h, n) / lambda;
      const double hi = std::pow(r, n) / lambda;
      if (x < lo || x > hi) return 0.0;
      const double v = region_volumes(sc.cap).lower;
      return 2.0 * kPi / (n * v) *
             (std::pow(lambda, 3.0 / n) * std::pow(x, 3.0 / n - 1.0) -
              h * std::pow(lambda, 2.0 / n) * std::pow(x, 2.0 / n - 1.0));
    }
    default:
      throw std::invalid_argument("scaled_distance_power_pdf: region does not belong to the downlink");
  }
}

double cdf_gamma_s(double gamma, const UplinkScenario& sc, ConstantMode mode) {
  sc.validate();
  if (gamma < 0.0) throw std::domain_error("cdf_gamma_s: requires gamma >= 0");
  const UplinkDerived d = UplinkDerived::from(sc);
  const double a = (mode == ConstantMode::corrected) ? d.a_s_corrected : d.a_s_paper;
  if (gamma == 0.0) {
    // Continuity limit 1 - A·C·2/sqrt(pi): 0 for the corrected constant,
    // -1 for the printed one.
    return 1.0 - a * d.c_s * kTwoOverSqrtPi;
  }
  if (sc.path_loss_exp == 2.0) {
    const double root = std::sqrt(gamma);
    return 1.0 - a / root * std::exp(-d.b_s * gamma) * specfun::erf(d.c_s * root);
  }
  // General n: expectation of exp(-γ d^n/(λ g)) over the chord position,
  // written with v = |arclength - l/2| so the integrand is smooth.
  const double c = sc.chord.min_dist_sq();
  const double lg = sc.tx_snr * sc.gain_main;
  const double n = sc.path_loss_exp;
  const auto integrand = [&](double v) {
    return std::exp(-gamma * std::pow(v * v + c, 0.5 * n) / lg);
  };
  const double half = 0.5 * sc.chord.length;
  return 1.0 - 2.0 / sc.chord.length * integrate(integrand, 0.0, half);
}

double pdf_gamma_e_hemisphere(double x, const UplinkScenario& sc) {
  sc.validate();
  if (!(x > 0.0)) throw std::domain_error("pdf_gamma_e_hemisphere: requires x > 0");
  const double n = sc.path_loss_exp;
  const UplinkDerived d = UplinkDerived::from(sc);
  const double scale = std::pow(sc.radius_g, n) / (sc.tx_snr * sc.gain_eve);
  return d.eta * std::pow(x, -3.0 / n - 1.0) *
         specfun::lower_inc_gamma(1.0 + 3.0 / n, scale * x);
}

double cdf_gamma_e_hemisphere(double x, const UplinkScenario& sc) {
  sc.validate();
  if (x <= 0.0) return 0.0;
  const double n = sc.path_loss_exp;
  const UplinkDerived d = UplinkDerived::from(sc);
  const double scale = std::pow(sc.radius_g, n) / (sc.tx_snr * sc.gain_eve);
  return 1.0 - d.eta * std::pow(x, -3.0 / n) * specfun::lower_inc_gamma(3.0 / n, scale * x);
}

double cdf_gamma_g(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (x < 0.0) throw std::domain_error("cdf_gamma_g: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double n = sc.path_loss_exp;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  if (sc.cap.base_radius() == 0.0) {
    // h = R: the base disk collapses to a point at distance h.
    return -std::expm1(-d.b_g * x);
  }
  if (n == 2.0) {
    const double lg = sc.tx_snr * sc.gain_main;
    const double rc2 = sc.cap.base_radius() * sc.cap.base_radius();
    // e^{-B x} - e^{-A x} written through expm1 so small x stays exact.
    const double diff = -std::exp(-d.b_g * x) * std::expm1(-(d.a_g - d.b_g) * x);
    return 1.0 - lg / (rc2 * x) * diff;
  }
  // General n: 1 - E[exp(-x d^n/(λ g))] over the disk, with u = d²/λ^{2/n}.
  const double lambda = sc.tx_snr;
  const double g = sc.gain_main;
  const double lo = sc.cap.altitude * sc.cap.altitude / std::pow(lambda, 2.0 / n);
  const double hi = sc.cap.sphere_radius * sc.cap.sphere_radius / std::pow(lambda, 2.0 / n);
  const auto integrand = [&](double u) { return std::exp(-std::pow(u, 0.5 * n) * x / g); };
  const double rc2 = sc.cap.base_radius() * sc.cap.base_radius();
  return 1.0 - std::pow(lambda, 2.0 / n) / rc2 * integrate(integrand, lo, hi);
}

double cdf_gamma_g_meijer(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (x < 0.0) throw std::domain_error("cdf_gamma_g_meijer: requires x >= 0");
  if (x == 0.0) return 0.0;
  if (sc.cap.base_radius() == 0.0) return cdf_gamma_g(x, sc);
  const double n = sc.path_loss_exp;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  specfun::MeijerParams p;
  p.m = 1;
  p.n = 2;
  p.a = {1.0 + 2.0 / n, 1.0};
  p.b = {1.0 + 2.0 / n, 0.0, 2.0 / n};
  const double ga = specfun::meijer_g(p, d.a_g * x);
  const double gb = specfun::meijer_g(p, d.b_g * x);
  return d.c_g * std::pow(x, -2.0 / n) * (ga - gb);
}

double pdf_gamma_e_ball(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (!(x > 0.0)) throw std::domain_error("pdf_gamma_e_ball: requires x > 0");
  const double n = sc.path_loss_exp;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  return d.b_e * std::pow(x, -3.0 / n - 1.0) *
         specfun::lower_inc_gamma(1.0 + 3.0 / n, d.c_e * x);
}

double cdf_gamma_e_ball(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (x <= 0.0) return 0.0;
  const double n = sc.path_loss_exp;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  return 1.0 - d.b_e * std::pow(x, -3.0 / n) * specfun::lower_inc_gamma(3.0 / n, d.c_e * x);
}

double cap_distance_cdf(double x, const CapGeometry& cap) {
  cap.validate();
  if (cap.altitude >= cap.sphere_radius) {
    throw std::domain_error("cap_distance_cdf: region is empty at h = R");
  }
  const double h = cap.altitude;
  if (x <= h) return 0.0;
  if (x >= cap.sphere_radius) return 1.0;
  const double v = region_volumes(cap).lower;
  return kPi / (3.0 * v) * (2.0 * x * x * x - 3.0 * h * x * x + h * h * h);
}

namespace {

// Υ(a, c_e·x) - Υ(a, d_e·x), through the upper tail when both arguments are
// far into saturation so the difference keeps relative accuracy.
double inc_gamma_band(double a, double lo_arg, double hi_arg) {
  if (lo_arg > a + 1.0) {
    return specfun::upper_inc_gamma(a, lo_arg) - specfun::upper_inc_gamma(a, hi_arg);
  }
  return specfun::lower_inc_gamma(a, hi_arg) - specfun::lower_inc_gamma(a, lo_arg);
}

}  // namespace

double pdf_gamma_e_lower_cap(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (!(x > 0.0)) throw std::domain_error("pdf_gamma_e_lower_cap: requires x > 0");
  if (sc.cap.altitude >= sc.cap.sphere_radius) {
    throw std::domain_error("pdf_gamma_e_lower_cap: region is empty at h = R");
  }
  const double n = sc.path_loss_exp;
  const double g = sc.gain_eve;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  const double t1 = d.e1 * std::pow(g / x, 3.0 / n + 1.0) *
                    inc_gamma_band(1.0 + 3.0 / n, d.d_e * x, d.c_e * x);
  const double t2 = d.e2 * std::pow(g / x, 2.0 / n + 1.0) *
                    inc_gamma_band(1.0 + 2.0 / n, d.d_e * x, d.c_e * x);
  return t1 - t2;
}

double cdf_gamma_e_lower_cap(double x, const DownlinkScenario& sc) {
  sc.validate();
  if (sc.cap.altitude >= sc.cap.sphere_radius) {
    throw std::domain_error("cdf_gamma_e_lower_cap: region is empty at h = R");
  }
  if (x <= 0.0) return 0.0;
  const double n = sc.path_loss_exp;
  const double g = sc.gain_eve;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  const double t1 = d.e1 * g * std::pow(g / x, 3.0 / n) *
                    inc_gamma_band(3.0 / n, d.d_e * x, d.c_e * x);
  const double t2 = d.e2 * g * std::pow(g / x, 2.0 / n) *
                    inc_gamma_band(2.0 / n, d.d_e * x, d.c_e * x);
  return 1.0 - (t1 - t2);
}

}  // namespace uavsec
