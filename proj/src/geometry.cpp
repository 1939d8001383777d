#include "uavsec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace uavsec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Point3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double ChordGeometry::min_dist() const { return std::sqrt(min_dist_sq()); }

void ChordGeometry::validate() const {
  if (!(length > 0.0)) throw std::invalid_argument("chord: length must be positive (0 < l)");
  if (!(endpoint_dist > 0.0)) throw std::invalid_argument("chord: endpoint distance must be positive");
  if (!(length <= 2.0 * endpoint_dist)) {
    throw std::invalid_argument("chord: length must not exceed twice the endpoint distance (l <= 2b)");
  }
}

double CapGeometry::base_radius() const {
  return std::sqrt(std::max(0.0, sphere_radius * sphere_radius - altitude * altitude));
}

void CapGeometry::validate() const {
  if (!(sphere_radius > 0.0)) throw std::invalid_argument("cap: sphere radius must be positive");
  if (!(altitude >= 0.0 && altitude <= sphere_radius)) {
    throw std::invalid_argument("cap: altitude must satisfy 0 <= h <= R");
  }
}

RegionVolumes region_volumes(const CapGeometry& cap) {
  cap.validate();
  const double r = cap.sphere_radius;
  const double h = cap.altitude;
  RegionVolumes v;
  v.sphere = 4.0 / 3.0 * kPi * r * r * r;
  v.lower = kPi * (r - h) * (r - h) * (2.0 * r + h) / 3.0;
  v.upper = v.sphere - v.lower;
  v.lower_alt = kPi * h * h * (r - h / 3.0);
  return v;
}

double sample_chord_point(const ChordGeometry& g, RandomStream& rs) {
  const double x = g.length * rs.next_uniform();
  // Law of cosines with cos A = l / (2b).
  const double d2 = g.endpoint_dist * g.endpoint_dist + x * x - g.length * x;
  return std::sqrt(std::max(0.0, d2));
}

Point3 sample_uniform_hemisphere(double radius, RandomStream& rs) {
  for (;;) {
    const double x = 2.0 * rs.next_uniform() - 1.0;
    const double y = 2.0 * rs.next_uniform() - 1.0;
    const double z = rs.next_uniform();
    if (x * x + y * y + z * z <= 1.0) return {radius * x, radius * y, radius * z};
  }
}

Point3 sample_uniform_ball(double radius, RandomStream& rs) {
  for (;;) {
    const double x = 2.0 * rs.next_uniform() - 1.0;
    const double y = 2.0 * rs.next_uniform() - 1.0;
    const double z = 2.0 * rs.next_uniform() - 1.0;
    if (x * x + y * y + z * z <= 1.0) return {radius * x, radius * y, radius * z};
  }
}

Point3 sample_uniform_upper_cap(const CapGeometry& cap, RandomStream& rs) {
  for (;;) {
    const Point3 p = sample_uniform_ball(cap.sphere_radius, rs);
    const double z = p.z + cap.altitude;
    if (z >= 0.0) return {p.x, p.y, z};
  }
}

Point3 sample_uniform_lower_cap(const CapGeometry& cap, RandomStream& rs) {
  cap.validate();
  if (cap.altitude >= cap.sphere_radius) {
    throw std::domain_error("lower cap: region is empty at h = R");
  }
  const double rc = cap.base_radius();
  const double depth = cap.sphere_radius - cap.altitude;
  const double r2 = cap.sphere_radius * cap.sphere_radius;
  // Rejection from the bounding box of the below-ground region.
  for (;;) {
    const double x = rc * (2.0 * rs.next_uniform() - 1.0);
    const double y = rc * (2.0 * rs.next_uniform() - 1.0);
    const double z = -depth * rs.next_uniform();
    const double dz = z - cap.altitude;
    if (x * x + y * y + dz * dz <= r2) return {x, y, z};
  }
}

Point3 sample_uniform_disk(double radius, double depth, RandomStream& rs) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk: radius must be positive");
  if (!(depth >= 0.0)) throw std::invalid_argument("disk: depth must be non-negative");
  const double r = radius * std::sqrt(rs.next_uniform());
  const double phi = 2.0 * kPi * rs.next_uniform();
  return {r * std::cos(phi), r * std::sin(phi), 0.0};
}

}  // namespace uavsec
