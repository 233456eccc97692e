#include "flightclust/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "flightclust/error.hpp"

namespace flightclust {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

bool is_valid(GeoPoint p) noexcept {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

double normalize_lon(double lon) noexcept {
  if (lon >= -180.0 && lon <= 180.0) return lon;
  double wrapped = std::fmod(lon + 180.0, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  return wrapped - 180.0;
}

double great_circle_nm(GeoPoint p, GeoPoint q) noexcept {
  // sin^2 + cos^2 can round to just below 1, so coincident points are
  // handled before the arccos.
  if (p.lat == q.lat && p.lon == q.lon) return 0.0;
  const double lat_p = p.lat * kDegToRad;
  const double lat_q = q.lat * kDegToRad;
  const double dlon = std::abs(p.lon - q.lon) * kDegToRad;
  const double c = std::sin(lat_p) * std::sin(lat_q) +
                   std::cos(lat_p) * std::cos(lat_q) * std::cos(dlon);
  return kEarthRadiusNm * std::acos(std::clamp(c, -1.0, 1.0));
}

double path_length_nm(std::span<const GeoPoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::Domain, "path_length_nm: empty point sequence");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += great_circle_nm(points[i - 1], points[i]);
  }
  return total;
}

}  // namespace flightclust
