#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uavsec/distributions.hpp"

namespace uavsec {

enum class Link { uplink, downlink };

struct ConfigError : std::runtime_error {
  ConfigError(int line_number, const std::string& message)
      : std::runtime_error(line_number > 0
                               ? "config line " + std::to_string(line_number) + ": " + message
                               : "config: " + message),
        line(line_number) {}
  int line = 0;
};

/// Flat key=value run configuration. Unset keys keep the defaults below;
/// lambda_db defaults to 1.25 dB on the uplink and 5 dB on the downlink.
struct RunConfig {
  Link link = Link::uplink;
  double path_loss_exp = 2.0;       // n
  double rate_bits = 0.1;           // rs_bits
  std::optional<double> lambda_db;  // transmit SNR in dB
  double gain_main = 1.0;           // g_main
  double gain_eve = 1.1;            // g_eve
  double radius_g = 15.0;           // r_g
  double chord_l = 15.0;
  double chord_b = 15.0;
  double radius_s = 20.0;           // r_s
  double height_h = 10.0;
  std::int64_t mc_samples = 100000;
  std::uint64_t seed = 1;
  double quad_rel_tol = 1e-9;

  double effective_lambda_db() const;
  double tx_snr_linear() const;  // 10^(dB/10)

  UplinkScenario uplink_scenario() const;
  DownlinkScenario downlink_scenario() const;

  QuadratureConfig quadrature() const;

  /// Checks the cross-field invariants; throws ConfigError naming the
  /// violated one.
  void check() const;
};

/// Parses a config file. Throws ConfigError with the offending line number
/// for malformed input, unknown keys, or violated constraints.
RunConfig parse_config(const std::string& path);

/// Same, from an in-memory string (used by tests).
RunConfig parse_config_text(std::string_view text);

}  // namespace uavsec
