#pragma once

#include "uavsec/geometry.hpp"
#include "uavsec/quadrature.hpp"

namespace uavsec {

/// Ground-to-air link: transmitter G at the origin, receiver uniform on the
/// flight chord, eavesdropper uniform in the hemisphere of radius radius_g.
struct UplinkScenario {
  ChordGeometry chord;
  double radius_g = 15.0;       // hemisphere radius (m)
  double path_loss_exp = 2.0;   // n >= 2
  double tx_snr = 1.0;          // λ = P/N0, linear
  double gain_main = 1.0;       // mean power gain of the serving link
  double gain_eve = 1.1;        // mean power gain of the eavesdropping link
  double rate_bits = 0.1;       // outage threshold (bits/s/Hz)

  double theta() const;  // 2^rate_bits
  void validate() const;
};

/// Air-to-ground link: transmitter hovering at cap.altitude, receiver uniform
/// on the base disk, eavesdropper uniform in the above-ground coverage cap.
struct DownlinkScenario {
  CapGeometry cap;
  double path_loss_exp = 2.0;
  double tx_snr = 1.0;
  double gain_main = 1.0;
  double gain_eve = 1.1;
  double rate_bits = 0.1;

  double theta() const;
  void validate() const;
};

/// Constants of the uplink closed forms.
struct UplinkDerived {
  double theta;
  double a_s_paper;      // printed normalization; makes F(0+) = -1
  double a_s_corrected;  // normalization forced by F(0) = 0
  double b_s;
  double c_s;
  double eta;

  static UplinkDerived from(const UplinkScenario& sc);
};

/// Constants of the downlink closed forms.
struct DownlinkDerived {
  double theta;
  double a_g, b_g, c_g;       // serving-link SNR CDF
  double b_e, c_e, d_e;       // eavesdropper SNR over the ball / cap bounds
  double e1, e2;              // eavesdropper SNR over the below-ground cap

  static DownlinkDerived from(const DownlinkScenario& sc);
};

enum class Region { chord, hemisphere, ball, disk_at_height, lower_cap };

/// Which normalization the n = 2 closed form of the serving-SNR CDF uses.
enum class ConstantMode { corrected, paper };

/// Density of the apex-to-point distance for a uniform point on the chord:
/// 4y / (l·sqrt(4y² + l² - 4b²)) on [sqrt(c), b].
double chord_distance_pdf(double y, const ChordGeometry& g);

/// CDF of the same distance: 2·sqrt(y² - c)/l on [sqrt(c), b].
double chord_distance_cdf(double y, const ChordGeometry& g);

/// Density of d^n/λ for the named region. Regions chord and hemisphere
/// belong to the uplink overload; ball, disk_at_height and lower_cap to the
/// downlink one. Throws std::invalid_argument for a region that does not
/// belong to the scenario.
double scaled_distance_power_pdf(Region region, double x, const UplinkScenario& sc);
double scaled_distance_power_pdf(Region region, double x, const DownlinkScenario& sc);

/// CDF of the serving SNR on the uplink. For n = 2 this is the elementary
/// erf/exp form (with the corrected constant by default); general n falls
/// back to quadrature. The value at 0 is the continuity limit, which is 0
/// in corrected mode and -1 in paper mode.
double cdf_gamma_s(double gamma, const UplinkScenario& sc,
                   ConstantMode mode = ConstantMode::corrected);

/// Density/CDF of the eavesdropper SNR, eavesdropper uniform in the hemisphere.
double pdf_gamma_e_hemisphere(double x, const UplinkScenario& sc);
double cdf_gamma_e_hemisphere(double x, const UplinkScenario& sc);

/// CDF of the serving SNR on the downlink (receiver uniform on the base disk).
double cdf_gamma_g(double x, const DownlinkScenario& sc);

/// Same CDF through the Mellin-Barnes form; cross-check path only.
double cdf_gamma_g_meijer(double x, const DownlinkScenario& sc);

/// Density/CDF of the eavesdropper SNR, eavesdropper uniform in the ball.
double pdf_gamma_e_ball(double x, const DownlinkScenario& sc);
double cdf_gamma_e_ball(double x, const DownlinkScenario& sc);

/// CDF of the distance from the ball center to a point uniform in the
/// below-ground cap: π(2x³ - 3hx² + h³)/(3·V_lower) on [h, R].
double cap_distance_cdf(double x, const CapGeometry& cap);

/// Density/CDF of the eavesdropper SNR, eavesdropper uniform in the
/// below-ground cap. Throws std::domain_error when the cap is empty (h = R).
double pdf_gamma_e_lower_cap(double x, const DownlinkScenario& sc);
double cdf_gamma_e_lower_cap(double x, const DownlinkScenario& sc);

}  // namespace uavsec
