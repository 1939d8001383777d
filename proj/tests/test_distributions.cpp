#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "uavsec/distributions.hpp"
#include "uavsec/montecarlo.hpp"
#include "uavsec/quadrature.hpp"
#include "uavsec/specfun.hpp"

using namespace uavsec;

namespace {

UplinkScenario default_uplink() {
  UplinkScenario sc;
  sc.chord = {15.0, 20.0};
  sc.radius_g = 15.0;
  sc.path_loss_exp = 2.0;
  sc.tx_snr = std::pow(10.0, 0.125);
  sc.gain_main = 1.0;
  sc.gain_eve = 1.1;
  sc.rate_bits = 0.1;
  return sc;
}

DownlinkScenario default_downlink() {
  DownlinkScenario sc;
  sc.cap = {20.0, 10.0};
  sc.path_loss_exp = 2.0;
  sc.tx_snr = std::pow(10.0, 0.5);
  sc.gain_main = 1.0;
  sc.gain_eve = 1.1;
  sc.rate_bits = 0.1;
  return sc;
}

// Direct quadrature of the serving-SNR CDF integral in its raw form
// 1 - (λ/l)∫ e^{-tγ/g} (λt - c)^{-1/2} dt, shifted by u = t - c/λ so the
// endpoint singularity is representable. Independent oracle for the n = 2
// erf/exp closed form.
double cdf_gamma_s_oracle_n2(double gamma, const UplinkScenario& sc) {
  if (gamma == 0.0) return 0.0;
  const double lambda = sc.tx_snr;
  const double g = sc.gain_main;
  const double c = sc.chord.min_dist_sq();
  const double hi = (sc.chord.endpoint_dist * sc.chord.endpoint_dist - c) / lambda;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-13;
  cfg.max_refinements = 100000;
  const double integral = integrate(
      [&](double u) { return std::exp(-(u + c / lambda) * gamma / g) / std::sqrt(lambda * u); },
      0.0, hi, cfg);
  return 1.0 - lambda / sc.chord.length * integral;
}

double pdf_mass(const std::function<double(double)>& pdf, double scale) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-15;
  cfg.max_refinements = 20000;
  return integrate_to_inf(pdf, 0.0, scale, cfg);
}

}  // namespace

TEST_CASE("scenario validation names the violated constraint") {
  UplinkScenario up = default_uplink();
  up.chord.endpoint_dist = 20.0;  // b > R_G
  CHECK_THROWS_WITH_AS(up.validate(),
                       "uplink: chord endpoints must lie within the hemisphere (b <= R_G)",
                       std::invalid_argument);
  DownlinkScenario dn = default_downlink();
  dn.gain_eve = 0.0;
  CHECK_THROWS_AS(dn.validate(), std::invalid_argument);
}

TEST_CASE("derived uplink constants") {
  const UplinkScenario sc = default_uplink();
  const UplinkDerived d = UplinkDerived::from(sc);
  CHECK(d.theta == doctest::Approx(std::exp2(0.1)).epsilon(1e-15));
  CHECK(d.a_s_paper == doctest::Approx(2.0 * d.a_s_corrected).epsilon(1e-15));
  // C_S reduces to l/(2 sqrt(g λ)) because b² - c = l²/4.
  CHECK(d.c_s ==
        doctest::Approx(sc.chord.length / (2.0 * std::sqrt(sc.gain_main * sc.tx_snr)))
            .epsilon(1e-14));
  CHECK(d.b_s == doctest::Approx(125.0 / sc.tx_snr).epsilon(1e-14));
}

TEST_CASE("derived downlink constants") {
  const DownlinkScenario sc = default_downlink();
  const DownlinkDerived d = DownlinkDerived::from(sc);
  CHECK(d.a_g >= d.b_g);
  CHECK(d.c_e >= d.d_e);
  CHECK(d.a_g == doctest::Approx(400.0 / sc.tx_snr).epsilon(1e-14));
  CHECK(d.b_g == doctest::Approx(100.0 / sc.tx_snr).epsilon(1e-14));
  CHECK(d.c_e == doctest::Approx(400.0 / (sc.tx_snr * 1.1)).epsilon(1e-14));
}

TEST_CASE("chord distance pdf") {
  const ChordGeometry g{15.0, 20.0};
  CHECK(chord_distance_pdf(15.0, g) == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(chord_distance_pdf(11.0, g) == 0.0);  // below sqrt(c) = sqrt(125)
  CHECK(chord_distance_pdf(15.5, g) == 0.0);
  // Degenerate apex-on-circle case collapses to the constant 2/l.
  const ChordGeometry flat{10.0, 20.0};
  for (double y : {2.0, 5.0, 9.0}) {
    CHECK(chord_distance_pdf(y, flat) == doctest::Approx(0.1).epsilon(1e-12));
  }
  // Mass check. Quadrature across the inverse-square-root endpoint carries
  // an ~1e-8 rounding floor (y² - c is lost in y's rounding), so the
  // normalization tolerance is 1e-6.
  QuadratureConfig cfg;
  cfg.max_refinements = 100000;
  cfg.rel_tol = 1e-10;
  const double mass =
      integrate([&](double y) { return chord_distance_pdf(y, g); }, g.min_dist(), 15.0, cfg);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("chord distance pdf matches a sampling histogram at the right edge") {
  const ChordGeometry g{15.0, 20.0};
  RandomStream rs(21, 0);
  const int n = 1000000;
  const double w = 0.1;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    if (sample_chord_point(g, rs) >= 15.0 - w) ++hits;
  }
  const double density_estimate = static_cast<double>(hits) / n / w;
  CHECK(std::abs(density_estimate - 0.15) < 0.005);
}

TEST_CASE("chord distance cdf") {
  const ChordGeometry g{15.0, 20.0};
  CHECK(chord_distance_cdf(15.0, g) == 1.0);
  CHECK(chord_distance_cdf(20.0, g) == 1.0);
  CHECK(chord_distance_cdf(g.min_dist(), g) == 0.0);
  CHECK(chord_distance_cdf(13.0, g) ==
        doctest::Approx(2.0 * std::sqrt(44.0) / 20.0).epsilon(1e-14));
  // CDF increments equal integrals of the PDF between interior grid points
  // (differences sidestep the rounding floor at the singular lower edge).
  QuadratureConfig cfg;
  cfg.max_refinements = 100000;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;
  double lo = 11.2;
  for (double y : {11.5, 12.0, 13.0, 14.0, 14.9}) {
    const double mass = integrate([&](double t) { return chord_distance_pdf(t, g); }, lo, y, cfg);
    const double diff = chord_distance_cdf(y, g) - chord_distance_cdf(lo, g);
    CHECK(std::abs(diff - mass) < 1e-8);
    lo = y;
  }
}

TEST_CASE("scaled distance-power pdf: support and closed cases") {
  const UplinkScenario up = default_uplink();
  // Hemisphere at n=2, R=15, λ=1: density x^{1/2}·(3/2)/15³ on (0, 225].
  UplinkScenario unit = up;
  unit.tx_snr = 1.0;
  for (double x : {1.0, 50.0, 224.0}) {
    CHECK(scaled_distance_power_pdf(Region::hemisphere, x, unit) ==
          doctest::Approx(1.5 * std::sqrt(x) / 3375.0).epsilon(1e-13));
  }
  CHECK(scaled_distance_power_pdf(Region::hemisphere, 226.0, unit) == 0.0);
  // Chord support is [c/λ, b²/λ] at n=2.
  const double c = up.chord.min_dist_sq();
  CHECK(scaled_distance_power_pdf(Region::chord, c / up.tx_snr * 0.99, up) == 0.0);
  CHECK(scaled_distance_power_pdf(Region::chord, 226.0 / up.tx_snr, up) == 0.0);
  CHECK(scaled_distance_power_pdf(Region::chord, 150.0 / up.tx_snr, up) > 0.0);
  // Region/scenario mismatch.
  CHECK_THROWS_AS(scaled_distance_power_pdf(Region::ball, 1.0, up), std::invalid_argument);
  const DownlinkScenario dn = default_downlink();
  CHECK_THROWS_AS(scaled_distance_power_pdf(Region::chord, 1.0, dn), std::invalid_argument);
}

TEST_CASE("scaled distance-power pdfs integrate to one") {
  const UplinkScenario up = default_uplink();
  const DownlinkScenario dn = default_downlink();
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-15;
  cfg.max_refinements = 100000;
  const double lam_u = up.tx_snr;
  const double lam_d = dn.tx_snr;
  const double c = up.chord.min_dist_sq();
  {
    const double mass = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::chord, x, up); },
        c / lam_u, 225.0 / lam_u, cfg);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
  {
    const double mass = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::hemisphere, x, up); },
        0.0, 225.0 / lam_u, cfg);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    const double mass = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::ball, x, dn); },
        0.0, 400.0 / lam_d, cfg);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    const double mass = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::disk_at_height, x, dn); },
        100.0 / lam_d, 400.0 / lam_d, cfg);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    // Lower cap at λ = 1 over [h², R²], as well as at the default λ.
    DownlinkScenario unit = dn;
    unit.tx_snr = 1.0;
    const double mass = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::lower_cap, x, unit); },
        100.0, 400.0, cfg);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    const double mass2 = integrate(
        [&](double x) { return scaled_distance_power_pdf(Region::lower_cap, x, dn); },
        100.0 / lam_d, 400.0 / lam_d, cfg);
    CHECK(mass2 == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("serving-SNR CDF: limits and the constant adjudication") {
  const UplinkScenario sc = default_uplink();
  CHECK(cdf_gamma_s(0.0, sc) == 0.0);
  CHECK(cdf_gamma_s(1e6, sc) >= 1.0 - 1e-6);
  CHECK_THROWS_AS(cdf_gamma_s(-1.0, sc), std::domain_error);
  // The printed constant makes the CDF limit -1 at the origin: kept as a
  // regression of the documented discrepancy.
  CHECK(cdf_gamma_s(0.0, sc, ConstantMode::paper) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(cdf_gamma_s(1e-9, sc, ConstantMode::paper) == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("serving-SNR CDF: closed form vs raw-integral oracle") {
  const UplinkScenario sc = default_uplink();
  CHECK(cdf_gamma_s(1.0, sc) == doctest::Approx(cdf_gamma_s_oracle_n2(1.0, sc)).epsilon(1e-9));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double gamma = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    const double diff = std::abs(cdf_gamma_s(gamma, sc) - cdf_gamma_s_oracle_n2(gamma, sc));
    worst = std::max(worst, diff);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("serving-SNR CDF: general-n path is monotone and agrees at n = 2") {
  UplinkScenario sc = default_uplink();
  sc.path_loss_exp = 2.0000001;  // force the quadrature branch next to n = 2
  const UplinkScenario exact = default_uplink();
  for (double gamma : {0.01, 0.1, 1.0, 10.0}) {
    CHECK(cdf_gamma_s(gamma, sc) == doctest::Approx(cdf_gamma_s(gamma, exact)).epsilon(1e-5));
  }
  sc.path_loss_exp = 4.0;
  double prev = -1.0;
  for (double gamma = 0.0; gamma <= 20.0; gamma += 0.25) {
    const double v = cdf_gamma_s(gamma, sc);
    CHECK(v >= prev - 1e-12);
    CHECK(v <= 1.0 + 1e-12);
    prev = v;
  }
}

TEST_CASE("eavesdropper SNR density over the hemisphere") {
  const UplinkScenario sc = default_uplink();
  CHECK_THROWS_AS(pdf_gamma_e_hemisphere(0.0, sc), std::domain_error);
  const double scale = sc.tx_snr * sc.gain_eve / 56.0;
  const double mass = pdf_mass([&](double x) { return pdf_gamma_e_hemisphere(x, sc); }, scale);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // Finite limit at the origin: (3/5)·R²/(λ g) for n = 2.
  const double limit = 0.6 * sc.radius_g * sc.radius_g / (sc.tx_snr * sc.gain_eve);
  CHECK(pdf_gamma_e_hemisphere(1e-9, sc) == doctest::Approx(limit).epsilon(1e-5));
  // CDF equals the integral of the PDF along a log grid.
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-16;
  cfg.max_refinements = 40000;
  double acc = 0.0;
  double lo = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    acc += integrate([&](double t) { return pdf_gamma_e_hemisphere(t, sc); },
                     lo == 0.0 ? 1e-300 : lo, x, cfg);
    lo = x;
    CHECK(cdf_gamma_e_hemisphere(x, sc) == doctest::Approx(acc).epsilon(1e-8));
  }
}

TEST_CASE("eavesdropper SNR over the hemisphere matches simulation") {
  const UplinkScenario sc = default_uplink();
  RandomStream rs(22, 0);
  const int n = 100000;
  std::vector<double> snr(n);
  for (int i = 0; i < n; ++i) {
    const double d = sample_uniform_hemisphere(sc.radius_g, rs).norm();
    snr[i] = sc.tx_snr * rs.next_exponential(sc.gain_eve) / (d * d);
  }
  const auto ks = ks_statistic(snr, [&](double x) { return cdf_gamma_e_hemisphere(x, sc); });
  CHECK(ks.pass_at_01);
}

TEST_CASE("serving-SNR CDF on the downlink") {
  const DownlinkScenario sc = default_downlink();
  CHECK(cdf_gamma_g(0.0, sc) == 0.0);
  CHECK(cdf_gamma_g(1e7, sc) >= 1.0 - 1e-6);
  CHECK_THROWS_AS(cdf_gamma_g(-0.1, sc), std::domain_error);
  double prev = 0.0;
  for (double x = 0.0; x <= 50.0; x += 0.5) {
    const double v = cdf_gamma_g(x, sc);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
  // Elementary n = 2 form vs the general-n quadrature branch vs the
  // Mellin-Barnes form.
  DownlinkScenario near2 = sc;
  near2.path_loss_exp = 2.0000001;
  for (double x : {0.01, 0.3, 1.0, 4.0, 30.0}) {
    CHECK(cdf_gamma_g(x, near2) == doctest::Approx(cdf_gamma_g(x, sc)).epsilon(1e-5));
  }
  for (double x : {0.2, 1.0, 5.0}) {
    CHECK(cdf_gamma_g_meijer(x, sc) == doctest::Approx(cdf_gamma_g(x, sc)).epsilon(1e-6));
  }
}

TEST_CASE("downlink serving SNR matches simulation") {
  const DownlinkScenario sc = default_downlink();
  RandomStream rs(23, 0);
  const int n = 100000;
  std::vector<double> snr(n);
  const double h = sc.cap.altitude;
  for (int i = 0; i < n; ++i) {
    const Point3 p = sample_uniform_disk(sc.cap.base_radius(), h, rs);
    const double d2 = p.x * p.x + p.y * p.y + h * h;
    snr[i] = sc.tx_snr * rs.next_exponential(sc.gain_main) / d2;
  }
  const auto ks = ks_statistic(snr, [&](double x) { return cdf_gamma_g(x, sc); });
  CHECK(ks.pass_at_01);
}

TEST_CASE("eavesdropper SNR density over the ball") {
  const DownlinkScenario sc = default_downlink();
  CHECK_THROWS_AS(pdf_gamma_e_ball(-1.0, sc), std::domain_error);
  const double scale = sc.tx_snr * sc.gain_eve / 100.0;
  const double mass = pdf_mass([&](double x) { return pdf_gamma_e_ball(x, sc); }, scale);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // Structural identity with the hemisphere density under parameter renaming.
  UplinkScenario up = default_uplink();
  up.radius_g = sc.cap.sphere_radius;
  up.chord = {sc.cap.sphere_radius, sc.cap.sphere_radius};
  up.tx_snr = sc.tx_snr;
  up.gain_eve = sc.gain_eve;
  for (double x : {0.05, 0.2, 1.0, 5.0}) {
    CHECK(pdf_gamma_e_ball(x, sc) ==
          doctest::Approx(pdf_gamma_e_hemisphere(x, up)).epsilon(1e-12));
  }
  RandomStream rs(24, 0);
  const int n = 100000;
  std::vector<double> snr(n);
  for (int i = 0; i < n; ++i) {
    const double d = sample_uniform_ball(sc.cap.sphere_radius, rs).norm();
    snr[i] = sc.tx_snr * rs.next_exponential(sc.gain_eve) / (d * d);
  }
  const auto ks = ks_statistic(snr, [&](double x) { return cdf_gamma_e_ball(x, sc); });
  CHECK(ks.pass_at_01);
}

TEST_CASE("cap distance cdf") {
  const CapGeometry cap{20.0, 10.0};
  CHECK(cap_distance_cdf(10.0, cap) == 0.0);
  CHECK(cap_distance_cdf(20.0, cap) == 1.0);
  CHECK(cap_distance_cdf(15.0, cap) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK_THROWS_AS(cap_distance_cdf(1.0, CapGeometry{20.0, 20.0}), std::domain_error);
  double prev = 0.0;
  for (double x = 10.0; x <= 20.0; x += 0.25) {
    const double v = cap_distance_cdf(x, cap);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("eavesdropper SNR density over the lower cap") {
  const DownlinkScenario sc = default_downlink();
  CHECK_THROWS_AS(pdf_gamma_e_lower_cap(0.0, sc), std::domain_error);
  DownlinkScenario degenerate = sc;
  degenerate.cap.altitude = 20.0;
  CHECK_THROWS_AS(pdf_gamma_e_lower_cap(1.0, degenerate), std::domain_error);

  const double scale = sc.tx_snr * sc.gain_eve / 150.0;
  const double mass = pdf_mass([&](double x) { return pdf_gamma_e_lower_cap(x, sc); }, scale);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

  // h -> 0: the lower hemisphere has the same center-distance law as the
  // ball, so the densities coincide.
  DownlinkScenario flat = sc;
  flat.cap.altitude = 0.0;
  for (double x : {0.05, 0.3, 1.0, 4.0}) {
    CHECK(pdf_gamma_e_lower_cap(x, flat) ==
          doctest::Approx(pdf_gamma_e_ball(x, flat)).epsilon(1e-10));
  }

  // CDF equals the integral of the PDF.
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-16;
  cfg.max_refinements = 40000;
  double acc = 0.0;
  double lo = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    acc += integrate([&](double t) { return pdf_gamma_e_lower_cap(t, sc); },
                     lo == 0.0 ? 1e-300 : lo, x, cfg);
    lo = x;
    CHECK(cdf_gamma_e_lower_cap(x, sc) == doctest::Approx(acc).epsilon(1e-8));
  }

  RandomStream rs(25, 0);
  const int n = 100000;
  std::vector<double> snr(n);
  for (int i = 0; i < n; ++i) {
    const Point3 p = sample_uniform_lower_cap(sc.cap, rs);
    const double dz = p.z - sc.cap.altitude;
    const double d2 = p.x * p.x + p.y * p.y + dz * dz;
    snr[i] = sc.tx_snr * rs.next_exponential(sc.gain_eve) / d2;
  }
  const auto ks = ks_statistic(snr, [&](double x) { return cdf_gamma_e_lower_cap(x, sc); });
  CHECK(ks.pass_at_01);
}

TEST_CASE("serving SNR matches simulation (uplink, closed form)") {
  const UplinkScenario sc = default_uplink();
  RandomStream rs(26, 0);
  const int n = 100000;
  std::vector<double> snr(n);
  for (int i = 0; i < n; ++i) {
    const double d = sample_chord_point(sc.chord, rs);
    snr[i] = sc.tx_snr * rs.next_exponential(sc.gain_main) / (d * d);
  }
  const auto ks = ks_statistic(snr, [&](double x) { return cdf_gamma_s(x, sc); });
  CHECK(ks.pass_at_01);
}
