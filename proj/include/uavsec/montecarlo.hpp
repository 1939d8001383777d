#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "uavsec/distributions.hpp"
#include "uavsec/random.hpp"

namespace uavsec {

struct McResult {
  double estimate = 0.0;
  double half_width_95 = 0.0;
  std::int64_t samples = 0;
  std::int64_t outage_count = 0;
};

enum class Bound { lower, exact };

enum class EveRegion { ball, lower_cap };

/// Squared channel amplitude under Rayleigh fading: exponential with the
/// given mean. Throws std::domain_error for non-positive means.
double draw_power_gain(double g_mean, RandomStream& rs);

/// Empirical uplink outage probability over n trials. Each trial draws the
/// receiver position on the chord, the eavesdropper in the hemisphere, and
/// both fading gains, then tests γ_S <= Θγ_E (lower) or <= Θγ_E + Θ - 1
/// (exact). Trials are indexed substreams, so the count is reproducible for
/// any thread count. Requires n >= 1000.
McResult mc_sop_uplink(const UplinkScenario& sc, std::int64_t n, Bound bound,
                       RandomStream stream, int threads = 1);

/// Empirical downlink outage: receiver uniform on the base disk,
/// eavesdropper uniform in the above-ground cap.
McResult mc_sop_downlink(const DownlinkScenario& sc, std::int64_t n, Bound bound,
                         RandomStream stream, int threads = 1);

/// Empirical Pr{γ_G <= Θγ_E} with the eavesdropper uniform over the full
/// ball or the below-ground cap (the two pieces of the decomposition).
McResult mc_region_expectation(const DownlinkScenario& sc, EveRegion region, std::int64_t n,
                               RandomStream stream, int threads = 1);

struct KsResult {
  double statistic = 0.0;
  bool pass_at_01 = false;  // statistic < 1.63/sqrt(N)
};

/// Sup-norm distance between the empirical CDF of the samples and the given
/// CDF, with the alpha = 0.01 asymptotic critical value. Throws
/// std::invalid_argument on an empty sample.
KsResult ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

}  // namespace uavsec
