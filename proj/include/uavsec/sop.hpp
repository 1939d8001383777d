#pragma once

#include <cstdint>

#include "uavsec/distributions.hpp"
#include "uavsec/quadrature.hpp"

namespace uavsec {

enum class Method { quadrature, closed_form, monte_carlo };

struct SopEstimate {
  double value = 0.0;        // probability in [0, 1]
  Method method = Method::quadrature;
  double error_bound = 0.0;  // quadrature error estimate or MC 95% half-width
  std::int64_t samples = 0;  // Monte Carlo only, else 0
};

/// Pr{γ_S <= Θ·γ_E}: outage of the uplink against the reduced threshold.
SopEstimate sop_uplink_lower(const UplinkScenario& sc, const QuadratureConfig& q = {});

/// Pr{γ_S <= Θ·γ_E + Θ - 1}: the full outage event; always >= the lower bound.
SopEstimate sop_uplink_exact(const UplinkScenario& sc, const QuadratureConfig& q = {});

/// ∫ F_{γ_G}(Θx) f_{γ_E}(x) dx with the eavesdropper uniform over the full
/// coverage ball.
double integral_i_sp(const DownlinkScenario& sc, const QuadratureConfig& q = {});

/// Same with the eavesdropper uniform over the below-ground cap. Throws
/// std::domain_error when the cap is empty (h = R).
double integral_i_s2(const DownlinkScenario& sc, const QuadratureConfig& q = {});

/// How the ball/cap decomposition is recombined into the outage over the
/// above-ground region: `exact` applies the law of total probability
/// (V_sp·I_sp - V_lower·I_s2)/V_upper; `paper` keeps the printed weight
/// I_sp - h²(3R - h)/(4R³)·I_s2.
enum class DecompositionMode { exact, paper };

SopEstimate sop_downlink_lower(const DownlinkScenario& sc, const QuadratureConfig& q = {},
                               DecompositionMode mode = DecompositionMode::exact);

/// Downlink outage against the full threshold Θx + Θ - 1, recombined the
/// same way.
SopEstimate sop_downlink_exact(const DownlinkScenario& sc, const QuadratureConfig& q = {},
                               DecompositionMode mode = DecompositionMode::exact);

// Closed Mellin-Barnes forms. Cross-check paths only: the quadrature
// evaluators above stay the primary route.

/// I_sp through the pair of G^{3,2}_{4,4} terms.
double integral_i_sp_closed_form(const DownlinkScenario& sc);

/// I_s2 through f2/f3; see f3_closed_form.
double integral_i_s2_closed_form(const DownlinkScenario& sc);

/// f3(s, t, b) = ∫ x^{-s-1-2/n} Υ(s+1, bx) G^{1,2}_{2,3}[tΘx] dx, evaluated
/// in closed form as b^{s+2/n}·G^{2,3}_{4,4}[tΘ/b | ...].
double f3_closed_form(double s, double t, double b, const DownlinkScenario& sc);

/// The defining integral of f3 by quadrature (n = 2 uses the elementary
/// kernel y - 1 + e^{-y} for the G^{1,2}_{2,3} factor).
double f3_integral(double s, double t, double b, const DownlinkScenario& sc,
                   const QuadratureConfig& q = {});

}  // namespace uavsec
