#pragma once

#include <span>

namespace flightclust {

/// Mean earth radius in nautical miles. Fixed for the whole process.
inline constexpr double kEarthRadiusNm = 3440.065;

/// Latitude/longitude in decimal degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// True when lat is in [-90, 90] and lon in [-180, 180].
bool is_valid(GeoPoint p) noexcept;

/// Wraps a finite longitude into [-180, 180].
double normalize_lon(double lon) noexcept;

/// Spherical law of cosines distance in nautical miles.
///
/// The longitude difference is used as |lon_p - lon_q| without wrapping: cos
/// is even and 2*pi periodic so a difference of e.g. 350 degrees yields the
/// same result as 10 degrees. The arccos argument is clamped to [-1, 1] and
/// coincident points return exactly 0.
double great_circle_nm(GeoPoint p, GeoPoint q) noexcept;

/// Sum of great-circle legs between consecutive points. Throws
/// Error(Domain) on an empty sequence.
double path_length_nm(std::span<const GeoPoint> points);

}  // namespace flightclust
