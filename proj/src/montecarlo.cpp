#include "uavsec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace uavsec {

namespace {

McResult reduce(std::int64_t outage, std::int64_t n) {
  McResult r;
  r.samples = n;
  r.outage_count = outage;
  r.estimate = static_cast<double>(outage) / static_cast<double>(n);
  const double z = 1.959963984540054;
  if (outage < 30) {
    // Wilson interval half-width; the normal approximation collapses when
    // outages are rare.
    const double p = r.estimate;
    const double nn = static_cast<double>(n);
    const double denom = 1.0 + z * z / nn;
    r.half_width_95 = z * std::sqrt(p * (1.0 - p) / nn + z * z / (4.0 * nn * nn)) / denom;
  } else {
    r.half_width_95 = z * std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n));
  }
  return r;
}

// Counts trials satisfying the outage predicate; trial i consumes only the
// substream at_trial(i), so the partition into chunks cannot change the sum.
McResult run_trials(std::int64_t n, int threads, const RandomStream& stream,
                    const std::function<bool(RandomStream&)>& trial) {
  if (n < 1000) throw std::invalid_argument("monte carlo: sample count must be at least 1000");
  const int workers = std::max(1, std::min<int>(threads, 64));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(workers), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi]() {
      try {
        std::int64_t local = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
          RandomStream rs = stream.at_trial(static_cast<std::uint64_t>(i));
          if (trial(rs)) ++local;
        }
        counts[static_cast<std::size_t>(w)] = local;
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::int64_t outage = 0;
  for (std::int64_t c : counts) outage += c;
  return reduce(outage, n);
}

}  // namespace

double draw_power_gain(double g_mean, RandomStream& rs) {
  if (!(g_mean > 0.0)) throw std::domain_error("draw_power_gain: mean must be positive");
  return rs.next_exponential(g_mean);
}

McResult mc_sop_uplink(const UplinkScenario& sc, std::int64_t n, Bound bound,
                       RandomStream stream, int threads) {
  sc.validate();
  const double theta = sc.theta();
  const double shift = (bound == Bound::exact) ? theta - 1.0 : 0.0;
  const double pl = sc.path_loss_exp;
  const auto trial = [&](RandomStream& rs) {
    const double d_s = sample_chord_point(sc.chord, rs);
    const Point3 e = sample_uniform_hemisphere(sc.radius_g, rs);
    const double d_e = e.norm();
    const double gain_s = draw_power_gain(sc.gain_main, rs);
    const double gain_e = draw_power_gain(sc.gain_eve, rs);
    const double snr_s = sc.tx_snr * gain_s / std::pow(d_s, pl);
    const double snr_e = sc.tx_snr * gain_e / std::pow(d_e, pl);
    return snr_s <= theta * snr_e + shift;
  };
  return run_trials(n, threads, stream, trial);
}

McResult mc_sop_downlink(const DownlinkScenario& sc, std::int64_t n, Bound bound,
                         RandomStream stream, int threads) {
  sc.validate();
  const double theta = sc.theta();
  const double shift = (bound == Bound::exact) ? theta - 1.0 : 0.0;
  const double pl = sc.path_loss_exp;
  const double h = sc.cap.altitude;
  const double rc = sc.cap.base_radius();
  const auto trial = [&](RandomStream& rs) {
    double d_g = h;  // degenerate disk at h = R
    if (rc > 0.0) {
      const Point3 g = sample_uniform_disk(rc, h, rs);
      d_g = std::sqrt(g.x * g.x + g.y * g.y + h * h);
    }
    const Point3 e = sample_uniform_upper_cap(sc.cap, rs);
    const double dz = e.z - h;
    const double d_e = std::sqrt(e.x * e.x + e.y * e.y + dz * dz);
    const double gain_g = draw_power_gain(sc.gain_main, rs);
    const double gain_e = draw_power_gain(sc.gain_eve, rs);
    const double snr_g = sc.tx_snr * gain_g / std::pow(d_g, pl);
    const double snr_e = sc.tx_snr * gain_e / std::pow(d_e, pl);
    return snr_g <= theta * snr_e + shift;
  };
  return run_trials(n, threads, stream, trial);
}

McResult mc_region_expectation(const DownlinkScenario& sc, EveRegion region, std::int64_t n,
                               RandomStream stream, int threads) {
  sc.validate();
  if (region == EveRegion::lower_cap && sc.cap.altitude >= sc.cap.sphere_radius) {
    throw std::domain_error("mc_region_expectation: lower cap is empty at h = R");
  }
  const double theta = sc.theta();
  const double pl = sc.path_loss_exp;
  const double h = sc.cap.altitude;
  const double rc = sc.cap.base_radius();
  const auto trial = [&](RandomStream& rs) {
    double d_g = h;  // degenerate disk at h = R
    if (rc > 0.0) {
      const Point3 g = sample_uniform_disk(rc, h, rs);
      d_g = std::sqrt(g.x * g.x + g.y * g.y + h * h);
    }
    double d_e = 0.0;
    if (region == EveRegion::ball) {
      d_e = sample_uniform_ball(sc.cap.sphere_radius, rs).norm();
    } else {
      const Point3 e = sample_uniform_lower_cap(sc.cap, rs);
      const double dz = e.z - h;
      d_e = std::sqrt(e.x * e.x + e.y * e.y + dz * dz);
    }
    const double gain_g = draw_power_gain(sc.gain_main, rs);
    const double gain_e = draw_power_gain(sc.gain_eve, rs);
    const double snr_g = sc.tx_snr * gain_g / std::pow(d_g, pl);
    const double snr_e = sc.tx_snr * gain_e / std::pow(d_e, pl);
    return snr_g <= theta * snr_e;
  };
  return run_trials(n, threads, stream, trial);
}

KsResult ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double di = static_cast<double>(i);
    d = std::max(d, std::max(f - di / n, (di + 1.0) / n - f));
  }
  KsResult r;
  r.statistic = d;
  r.pass_at_01 = d < 1.63 / std::sqrt(n);
  return r;
}

}  // namespace uavsec
