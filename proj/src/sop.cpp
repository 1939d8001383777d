#include "uavsec/sop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uavsec/specfun.hpp"

namespace uavsec {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Characteristic width of the eavesdropper-SNR density: λ·g over the n-th
// power of a mid-range distance. Only steers the tail compactification.
double eve_snr_scale(double tx_snr, double gain_eve, double radius, double n) {
  return tx_snr * gain_eve / std::pow(0.5 * radius, n);
}

SopEstimate uplink_outage(const UplinkScenario& sc, double shift, const QuadratureConfig& q) {
  sc.validate();
  const double theta = sc.theta();
  const auto integrand = [&](double x) {
    return cdf_gamma_s(theta * x + shift, sc) * pdf_gamma_e_hemisphere(x, sc);
  };
  const double scale = eve_snr_scale(sc.tx_snr, sc.gain_eve, sc.radius_g, sc.path_loss_exp);
  double err = 0.0;
  const double value = integrate_to_inf(integrand, 0.0, scale, q, &err);
  return {clamp01(value), Method::quadrature, err, 0};
}

// ∫ F_{γ_G}(Θx + shift) f_{γ_E}(x) dx for the chosen eavesdropper density.
double downlink_region_integral(const DownlinkScenario& sc, double shift, bool lower_cap,
                                const QuadratureConfig& q, double* err_out = nullptr) {
  sc.validate();
  const double theta = sc.theta();
  const auto pdf = [&](double x) {
    return lower_cap ? pdf_gamma_e_lower_cap(x, sc) : pdf_gamma_e_ball(x, sc);
  };
  const auto integrand = [&](double x) { return cdf_gamma_g(theta * x + shift, sc) * pdf(x); };
  const double scale =
      eve_snr_scale(sc.tx_snr, sc.gain_eve, sc.cap.sphere_radius, sc.path_loss_exp);
  return integrate_to_inf(integrand, 0.0, scale, q, err_out);
}

SopEstimate downlink_outage(const DownlinkScenario& sc, double shift,
                            const QuadratureConfig& q, DecompositionMode mode) {
  sc.validate();
  double err_sp = 0.0;
  const double i_sp = downlink_region_integral(sc, shift, false, q, &err_sp);
  const double r = sc.cap.sphere_radius;
  const double h = sc.cap.altitude;
  if (h >= r) {
    // Empty below-ground cap: the ball is the above-ground region.
    return {clamp01(i_sp), Method::quadrature, err_sp, 0};
  }
  double err_s2 = 0.0;
  const double i_s2 = downlink_region_integral(sc, shift, true, q, &err_s2);
  const RegionVolumes v = region_volumes(sc.cap);
  double value = 0.0;
  double err = 0.0;
  if (mode == DecompositionMode::exact) {
    value = (v.sphere * i_sp - v.lower * i_s2) / v.upper;
    err = (v.sphere * err_sp + v.lower * err_s2) / v.upper;
    value = clamp01(value);
  } else {
    const double weight = h * h * (3.0 * r - h) / (4.0 * r * r * r);
    value = i_sp - weight * i_s2;
    err = err_sp + weight * err_s2;
  }
  return {value, Method::quadrature, err, 0};
}

}  // namespace

SopEstimate sop_uplink_lower(const UplinkScenario& sc, const QuadratureConfig& q) {
  return uplink_outage(sc, 0.0, q);
}

SopEstimate sop_uplink_exact(const UplinkScenario& sc, const QuadratureConfig& q) {
  return uplink_outage(sc, sc.theta() - 1.0, q);
}

double integral_i_sp(const DownlinkScenario& sc, const QuadratureConfig& q) {
  return downlink_region_integral(sc, 0.0, false, q);
}

double integral_i_s2(const DownlinkScenario& sc, const QuadratureConfig& q) {
  if (sc.cap.altitude >= sc.cap.sphere_radius) {
    throw std::domain_error("integral_i_s2: region is empty at h = R");
  }
  return downlink_region_integral(sc, 0.0, true, q);
}

SopEstimate sop_downlink_lower(const DownlinkScenario& sc, const QuadratureConfig& q,
                               DecompositionMode mode) {
  return downlink_outage(sc, 0.0, q, mode);
}

SopEstimate sop_downlink_exact(const DownlinkScenario& sc, const QuadratureConfig& q,
                               DecompositionMode mode) {
  return downlink_outage(sc, sc.theta() - 1.0, q, mode);
}

double integral_i_sp_closed_form(const DownlinkScenario& sc) {
  sc.validate();
  const double n = sc.path_loss_exp;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  specfun::MeijerParams p;
  p.m = 3;
  p.n = 2;
  p.a = {1.0, 3.0 / n, 1.0 + 5.0 / n, 1.0 + 3.0 / n};
  p.b = {1.0 + 3.0 / n, 3.0 / n, 5.0 / n, 0.0};
  const double pre = d.c_g * d.b_e * std::pow(d.theta, 3.0 / n);
  const double term_a =
      std::pow(d.a_g, 5.0 / n) * specfun::meijer_g(p, d.c_e / (d.a_g * d.theta));
  const double term_b =
      std::pow(d.b_g, 5.0 / n) * specfun::meijer_g(p, d.c_e / (d.b_g * d.theta));
  return pre * (term_a - term_b);
}

double f3_closed_form(double s, double t, double b, const DownlinkScenario& sc) {
  sc.validate();
  if (b == 0.0) return 0.0;  // Υ(s+1, 0·x) vanishes identically
  const double n = sc.path_loss_exp;
  const double theta = sc.theta();
  specfun::MeijerParams p;
  p.m = 2;
  p.n = 3;
  p.a = {1.0 + 2.0 / n, 1.0, 2.0 / n, 1.0 + s + 2.0 / n};
  p.b = {1.0 + 2.0 / n, s + 2.0 / n, 0.0, 2.0 / n};
  return std::pow(b, s + 2.0 / n) * specfun::meijer_g(p, t * theta / b);
}

double f3_integral(double s, double t, double b, const DownlinkScenario& sc,
                   const QuadratureConfig& q) {
  sc.validate();
  const double n = sc.path_loss_exp;
  const double theta = sc.theta();
  specfun::MeijerParams p;
  p.m = 1;
  p.n = 2;
  p.a = {1.0 + 2.0 / n, 1.0};
  p.b = {1.0 + 2.0 / n, 0.0, 2.0 / n};
  const auto g23 = [&](double y) {
    // At n = 2 the kernel collapses to y - 1 + e^{-y}.
    if (n == 2.0) return y - 1.0 + std::exp(-y);
    return specfun::meijer_g(p, y);
  };
  const auto integrand = [&](double x) {
    return std::pow(x, -s - 1.0 - 2.0 / n) * specfun::lower_inc_gamma(s + 1.0, b * x) *
           g23(t * theta * x);
  };
  // Integrand ~ x near 0 and ~ x^{-s-1} in the tail; 1/b sets the knee.
  return integrate_to_inf(integrand, 0.0, 1.0 / b, q);
}

double integral_i_s2_closed_form(const DownlinkScenario& sc) {
  sc.validate();
  if (sc.cap.altitude >= sc.cap.sphere_radius) {
    throw std::domain_error("integral_i_s2_closed_form: region is empty at h = R");
  }
  const double n = sc.path_loss_exp;
  const double g = sc.gain_eve;
  const DownlinkDerived d = DownlinkDerived::from(sc);
  const auto f2 = [&](double t) {
    const double t1 = d.e1 * std::pow(g, 3.0 / n + 1.0) *
                      (f3_closed_form(3.0 / n, t, d.c_e, sc) - f3_closed_form(3.0 / n, t, d.d_e, sc));
    const double t2 = d.e2 * std::pow(g, 2.0 / n + 1.0) *
                      (f3_closed_form(2.0 / n, t, d.c_e, sc) - f3_closed_form(2.0 / n, t, d.d_e, sc));
    return t1 - t2;
  };
  return d.c_g * std::pow(d.theta, -2.0 / n) * (f2(d.a_g) - f2(d.b_g));
}

}  // namespace uavsec
