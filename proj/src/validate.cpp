#include "uavsec/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "uavsec/montecarlo.hpp"
#include "uavsec/sop.hpp"
#include "uavsec/specfun.hpp"

namespace uavsec {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    out << (ok ? "[ ok ] " : "[FAIL] ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << '\n';
    if (!ok) ++failures;
  }

  void info(const std::string& line) { out << "       " << line << '\n'; }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

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

void run_specfun(Reporter& rep) {
  using specfun::lower_inc_gamma;
  using specfun::meijer_g;

  rep.check(std::abs(specfun::erf(1.0) - 0.84270079294971487) < 1e-12, "erf(1) reference value");

  bool odd = true;
  bool monotone = true;
  double prev = -2.0;
  for (double x = -3.0; x <= 3.0; x += 0.125) {
    if (std::abs(specfun::erf(x) + specfun::erf(-x)) > 1e-15) odd = false;
    if (specfun::erf(x) <= prev) monotone = false;
    prev = specfun::erf(x);
  }
  rep.check(odd, "erf odd symmetry");
  rep.check(monotone, "erf monotone");

  rep.check(std::abs(lower_inc_gamma(1.0, 1.0) - (1.0 - std::exp(-1.0))) < 1e-14,
            "lower incomplete gamma at (1,1)");
  const double sqrt_pi = 1.7724538509055160273;
  rep.check(std::abs(lower_inc_gamma(0.5, 2.0) - sqrt_pi * specfun::erf(std::sqrt(2.0))) < 1e-12,
            "half-integer incomplete gamma identity");

  // exp(-x) as G^{1,0}_{0,1}.
  specfun::MeijerParams pexp;
  pexp.m = 1;
  pexp.n = 0;
  pexp.a = {};
  pexp.b = {0.0};
  rep.check(std::abs(meijer_g(pexp, 0.7) - std::exp(-0.7)) < 1e-8, "G^{1,0}_{0,1} = exp");

  // Υ(a, x) as G^{1,1}_{1,2} over the full grid.
  double worst = 0.0;
  for (double a : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      specfun::MeijerParams p;
      p.m = 1;
      p.n = 1;
      p.a = {1.0};
      p.b = {a, 0.0};
      const double ref = lower_inc_gamma(a, x);
      const double err = std::abs(meijer_g(p, x) - ref) / std::max(1.0, ref);
      worst = std::max(worst, err);
    }
  }
  rep.check(worst < 1e-6, "G^{1,1}_{1,2} = lower incomplete gamma", "max err " + num(worst));

  specfun::MeijerParams perf;
  perf.m = 1;
  perf.n = 1;
  perf.a = {1.0};
  perf.b = {0.5, 0.0};
  rep.check(std::abs(meijer_g(perf, 1.0) / sqrt_pi - specfun::erf(1.0)) < 1e-8,
            "G^{1,1}_{1,2} = erf");
}

void run_distributions(Reporter& rep) {
  const UplinkScenario up = default_uplink();
  const DownlinkScenario dn = default_downlink();
  const QuadratureConfig qc{1e-10, 1e-15, 4000};

  // Densities normalize to 1.
  {
    const double scale = up.tx_snr * up.gain_eve / (up.radius_g * up.radius_g / 4.0);
    const double mass = integrate_to_inf(
        [&](double x) { return pdf_gamma_e_hemisphere(x, up); }, 0.0, scale, qc);
    rep.check(std::abs(mass - 1.0) < 1e-6, "eavesdropper SNR density (hemisphere) normalizes",
              num(mass));
  }
  {
    const double scale = dn.tx_snr * dn.gain_eve / (dn.cap.sphere_radius * dn.cap.sphere_radius / 4.0);
    const double mass =
        integrate_to_inf([&](double x) { return pdf_gamma_e_ball(x, dn); }, 0.0, scale, qc);
    rep.check(std::abs(mass - 1.0) < 1e-6, "eavesdropper SNR density (ball) normalizes", num(mass));
    const double mass2 =
        integrate_to_inf([&](double x) { return pdf_gamma_e_lower_cap(x, dn); }, 0.0, scale, qc);
    rep.check(std::abs(mass2 - 1.0) < 1e-6, "eavesdropper SNR density (lower cap) normalizes",
              num(mass2));
  }

  // n = 2 closed form of the serving-SNR CDF against direct quadrature.
  {
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double gamma = std::pow(10.0, -3.0 + 6.0 * i / 24.0);
      const double closed = cdf_gamma_s(gamma, up);
      const double c = up.chord.min_dist_sq();
      const double lg = up.tx_snr * up.gain_main;
      const double direct = 1.0 - 2.0 / up.chord.length *
                                      integrate(
                                          [&](double v) {
                                            return std::exp(-gamma * (v * v + c) / lg);
                                          },
                                          0.0, 0.5 * up.chord.length, qc);
      worst = std::max(worst, std::abs(closed - direct));
    }
    rep.check(worst < 1e-8, "serving-SNR CDF closed form matches quadrature",
              "max err " + num(worst));
  }

  rep.check(cdf_gamma_s(0.0, up, ConstantMode::corrected) == 0.0,
            "corrected constant gives F(0) = 0");
  const double paper_limit = cdf_gamma_s(0.0, up, ConstantMode::paper);
  rep.check(std::abs(paper_limit + 1.0) < 1e-6,
            "printed constant gives F(0+) = -1 (documented discrepancy)", num(paper_limit));

  // Serving-SNR CDF on the downlink: elementary form vs Mellin-Barnes form.
  {
    double worst = 0.0;
    for (double x : {0.2, 1.0, 5.0}) {
      worst = std::max(worst, std::abs(cdf_gamma_g(x, dn) - cdf_gamma_g_meijer(x, dn)));
    }
    rep.check(worst < 1e-6, "downlink serving-SNR CDF matches Mellin-Barnes form",
              "max err " + num(worst));
  }
}

void run_sop(Reporter& rep, std::uint64_t seed) {
  const UplinkScenario up = default_uplink();
  const DownlinkScenario dn = default_downlink();
  const QuadratureConfig qc;

  // Transmit SNR cancels out of the lower bound.
  {
    std::vector<double> values;
    for (double db : {-5.0, 0.0, 5.0}) {
      UplinkScenario sc = up;
      sc.tx_snr = std::pow(10.0, db / 10.0);
      values.push_back(sop_uplink_lower(sc, qc).value);
    }
    const double spread = std::abs(values[0] - values[2]) + std::abs(values[1] - values[2]);
    rep.check(spread < 10.0 * qc.rel_tol, "uplink lower bound invariant to transmit SNR",
              "spread " + num(spread));
    std::vector<double> dnv;
    for (double db : {-5.0, 0.0, 5.0}) {
      DownlinkScenario sc = dn;
      sc.tx_snr = std::pow(10.0, db / 10.0);
      dnv.push_back(sop_downlink_lower(sc, qc).value);
    }
    const double dspread = std::abs(dnv[0] - dnv[2]) + std::abs(dnv[1] - dnv[2]);
    rep.check(dspread < 10.0 * qc.rel_tol, "downlink lower bound invariant to transmit SNR",
              "spread " + num(dspread));
  }

  rep.check(sop_uplink_exact(up, qc).value >= sop_uplink_lower(up, qc).value,
            "uplink exact outage >= lower bound");

  // Monte Carlo agreement at defaults.
  {
    const SopEstimate quad = sop_uplink_lower(up, qc);
    const McResult mc = mc_sop_uplink(up, 100000, Bound::lower, RandomStream(seed, 0), 2);
    const double se = mc.half_width_95 / 1.96;
    rep.check(std::abs(quad.value - mc.estimate) <= 3.0 * se,
              "uplink lower bound within 3 SE of Monte Carlo",
              num(quad.value) + " vs " + num(mc.estimate) + " +/- " + num(mc.half_width_95));
  }
  {
    const SopEstimate quad = sop_downlink_lower(dn, qc);
    const McResult mc = mc_sop_downlink(dn, 100000, Bound::lower, RandomStream(seed, 1), 2);
    const double se = mc.half_width_95 / 1.96;
    rep.check(std::abs(quad.value - mc.estimate) <= 3.0 * se,
              "downlink lower bound (exact weights) within 3 SE of Monte Carlo",
              num(quad.value) + " vs " + num(mc.estimate) + " +/- " + num(mc.half_width_95));
  }

  // Adjudication: recombination weights for the downlink decomposition.
  rep.info("");
  rep.info("recombination adjudication (R = 20, eavesdropper over the above-ground cap):");
  rep.info("  h     paper-mode    exact-mode    monte-carlo       95% CI");
  int inside = 0;
  for (double h : {2.0, 10.0, 18.0}) {
    DownlinkScenario sc = dn;
    sc.cap.altitude = h;
    const double paper = sop_downlink_lower(sc, qc, DecompositionMode::paper).value;
    const double exact = sop_downlink_lower(sc, qc, DecompositionMode::exact).value;
    const McResult mc = mc_sop_downlink(sc, 100000, Bound::lower,
                                        RandomStream(seed, 100 + static_cast<std::uint64_t>(h)), 2);
    const bool in_ci = std::abs(exact - mc.estimate) <= mc.half_width_95;
    if (in_ci) ++inside;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-5g %-13.6g %-13.6g %-13.6g [%.6g, %.6g]%s", h, paper,
                  exact, mc.estimate, mc.estimate - mc.half_width_95,
                  mc.estimate + mc.half_width_95, in_ci ? "" : "  <-- outside");
    rep.info(buf);
  }
  rep.check(inside == 3, "exact-mode recombination inside the Monte Carlo 95% CI at all h");
  rep.info("paper-mode deviations are reported above, not failed.");

  // Adjudication: the two normalization constants of the n = 2 CDF.
  const UplinkDerived d = UplinkDerived::from(up);
  rep.info("");
  rep.info("serving-SNR CDF constant adjudication:");
  rep.info("  printed constant " + num(d.a_s_paper) + " -> F(0+) = " +
           num(cdf_gamma_s(0.0, up, ConstantMode::paper)));
  rep.info("  corrected constant " + num(d.a_s_corrected) + " -> F(0+) = " +
           num(cdf_gamma_s(0.0, up, ConstantMode::corrected)) + " (default)");
}

}  // namespace

int run_validate(ValidateSuite suite, std::uint64_t seed, std::ostream& out) {
  Reporter rep{out};
  if (suite == ValidateSuite::all || suite == ValidateSuite::specfun) {
    out << "== special functions ==\n";
    run_specfun(rep);
  }
  if (suite == ValidateSuite::all || suite == ValidateSuite::distributions) {
    out << "== distributions ==\n";
    run_distributions(rep);
  }
  if (suite == ValidateSuite::all || suite == ValidateSuite::sop) {
    out << "== secrecy outage ==\n";
    run_sop(rep, seed);
  }
  out << (rep.failures == 0 ? "all checks passed\n"
                            : std::to_string(rep.failures) + " check(s) failed\n");
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace uavsec
