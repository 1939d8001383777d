#pragma once

#include "uavsec/random.hpp"

namespace uavsec {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Straight flight segment AB seen from a ground node G with GA = GB.
/// The squared distance from G to a point of the segment ranges over
/// [min_dist_sq, endpoint_dist²].
struct ChordGeometry {
  double endpoint_dist = 0.0;  // b: G to either endpoint (m)
  double length = 0.0;         // l: AB (m)

  /// c = b² - l²/4, the squared distance from G to the midpoint.
  double min_dist_sq() const { return endpoint_dist * endpoint_dist - 0.25 * length * length; }
  double min_dist() const;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

/// Coverage ball of a transmitter hovering at `altitude` above the ground
/// plane z = 0, cut by that plane. The above-ground part is the serving
/// region; its base is a disk of radius base_radius.
struct CapGeometry {
  double sphere_radius = 0.0;  // R (m)
  double altitude = 0.0;       // h, center height (m), 0 <= h <= R

  double base_radius() const;  // sqrt(R² - h²)

  void validate() const;
};

struct RegionVolumes {
  double sphere = 0.0;     // full ball
  double upper = 0.0;      // above-ground part (sphere - lower)
  double lower = 0.0;      // below-ground cap, height R - h
  double lower_alt = 0.0;  // variant that treats the cut-off cap as height h;
                           // differs from `lower` except at h = R/2
};

RegionVolumes region_volumes(const CapGeometry& cap);

/// Distance from the apex to a point uniform on the chord.
double sample_chord_point(const ChordGeometry& g, RandomStream& rs);

/// Uniform in {|p| <= R, z >= 0}.
Point3 sample_uniform_hemisphere(double radius, RandomStream& rs);

/// Uniform in the full ball of the given radius, centered at the origin.
Point3 sample_uniform_ball(double radius, RandomStream& rs);

/// Uniform in the above-ground part of the coverage ball (center (0,0,h)),
/// by rejection from the shifted ball; acceptance is upper/sphere >= 1/2.
Point3 sample_uniform_upper_cap(const CapGeometry& cap, RandomStream& rs);

/// Uniform in the below-ground part of the coverage ball. Throws
/// std::domain_error when altitude == sphere_radius (empty region).
Point3 sample_uniform_lower_cap(const CapGeometry& cap, RandomStream& rs);

/// Uniform on the ground disk of the given radius in the plane z = 0.
/// depth is the transmitter altitude; it fixes the distance range
/// [depth, sqrt(radius² + depth²)] but does not affect the sample itself.
Point3 sample_uniform_disk(double radius, double depth, RandomStream& rs);

}  // namespace uavsec
