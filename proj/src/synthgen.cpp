#include "flightclust/synthgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "flightclust/error.hpp"

namespace flightclust::synth {

namespace {

using namespace std::chrono;
constexpr double kPi = std::numbers::pi;

constexpr GeoPoint kCMH{39.998, -82.892};
constexpr GeoPoint kATL{33.637, -84.428};
constexpr GeoPoint kSFO{37.619, -122.375};
constexpr GeoPoint kPIT{40.492, -80.233};
constexpr GeoPoint kPHL{39.872, -75.241};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

struct RouteGeometry {
  std::string origin_code;
  std::string destination_code;
  GeoPoint origin;
  GeoPoint destination;
  Date first_day;
  int spacing_hours;
  std::vector<double> cruise_speed_kt;  // per group
  std::vector<double> cruise_alt_ff;    // per group
};

RouteGeometry geometry_for(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::TwoBundles:
      return {"CMH", "ATL", kCMH, kATL, Date{year{2014}, month{6}, day{1}}, 12,
              {382.0, 370.0}, {223.0, 232.0}};
    case ScenarioKind::ParallelCorridors:
      return {"SFO", "PIT", kSFO, kPIT, Date{year{2014}, month{7}, day{19}}, 13,
              {465.0, 478.0, 463.0}, {337.0, 322.0, 332.0}};
    case ScenarioKind::SharedCorridorDivergentArrivals:
      return {"CMH", "PHL", kCMH, kPHL, Date{year{2014}, month{10}, day{1}}, 6,
              {360.0, 360.0}, {250.0, 250.0}};
  }
  throw Error(ErrorCode::Domain, "unknown scenario kind");
}

// Rises smoothly from 0 to 1 over the first `ramp` of the route and falls
// back over the last `ramp`.
double plateau(double s, double ramp) {
  if (s < ramp) return 0.5 - 0.5 * std::cos(kPi * s / ramp);
  if (s > 1.0 - ramp) return 0.5 - 0.5 * std::cos(kPi * (1.0 - s) / ramp);
  return 1.0;
}

GeoPoint lerp(GeoPoint a, GeoPoint b, double s) {
  return {a.lat + s * (b.lat - a.lat), a.lon + s * (b.lon - a.lon)};
}

// Unit vector left of the direction of travel, in (lat, lon) degree space.
GeoPoint left_normal(GeoPoint from, GeoPoint to) {
  const double dlat = to.lat - from.lat;
  const double dlon = to.lon - from.lon;
  const double norm = std::hypot(dlat, dlon);
  return {dlon / norm, -dlat / norm};
}

GeoPoint offset(GeoPoint p, GeoPoint normal, double amount) {
  return {p.lat + amount * normal.lat, p.lon + amount * normal.lon};
}

struct FlightDraw {
  double wander1;
  double wander2;
  double hook_scale;
  double speed_offset;
  double alt_offset;
};

double wander(const FlightDraw& f, double jitter, double s) {
  return jitter * (f.wander1 * std::sin(kPi * s) + 0.5 * f.wander2 * std::sin(2.0 * kPi * s));
}

GeoPoint position_at(ScenarioKind kind, const RouteGeometry& g, std::size_t group,
                     const FlightDraw& f, double jitter, double s) {
  const GeoPoint normal = left_normal(g.origin, g.destination);
  switch (kind) {
    case ScenarioKind::TwoBundles: {
      // Southbound: left of track is east.
      constexpr std::array<double, 2> kBow = {0.25, -1.2};
      const double lateral = kBow[group] * std::sin(kPi * s) + wander(f, jitter, s);
      return offset(lerp(g.origin, g.destination, s), normal, lateral);
    }
    case ScenarioKind::ParallelCorridors: {
      // Eastbound: left of track is north.
      constexpr std::array<double, 3> kCorridor = {2.0, 0.0, -1.2};
      const double lateral = kCorridor[group] * plateau(s, 0.15) + wander(f, jitter, s);
      return offset(lerp(g.origin, g.destination, s), normal, lateral);
    }
    case ScenarioKind::SharedCorridorDivergentArrivals: {
      constexpr double kSplit = 0.8;
      const GeoPoint split = lerp(g.origin, g.destination, kSplit);
      if (s <= kSplit) {
        return offset(lerp(g.origin, g.destination, s), normal,
                      wander(f, jitter, s / kSplit));
      }
      // Arrival hook through a fix north (group 0) or south (group 1) of the
      // destination.
      const double hook = (group == 0 ? 0.5 : -0.5) * f.hook_scale;
      const GeoPoint fix{g.destination.lat + hook, g.destination.lon};
      const double u = (s - kSplit) / (1.0 - kSplit);
      return u <= 0.5 ? lerp(split, fix, u / 0.5) : lerp(fix, g.destination, (u - 0.5) / 0.5);
    }
  }
  return g.origin;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::TwoBundles: return "two-bundles";
    case ScenarioKind::ParallelCorridors: return "parallel-corridors";
    case ScenarioKind::SharedCorridorDivergentArrivals:
      return "shared-corridor-divergent-arrivals";
  }
  return "two-bundles";
}

std::optional<ScenarioKind> parse_scenario(std::string_view text) noexcept {
  for (auto k : {ScenarioKind::TwoBundles, ScenarioKind::ParallelCorridors,
                 ScenarioKind::SharedCorridorDivergentArrivals}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::size_t group_count(ScenarioKind kind) noexcept {
  return kind == ScenarioKind::ParallelCorridors ? 3 : 2;
}

ScenarioSpec default_spec(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::TwoBundles: return {kind, 20, 100, 0.05, 1};
    case ScenarioKind::ParallelCorridors: return {kind, 8, 150, 0.08, 1};
    case ScenarioKind::SharedCorridorDivergentArrivals: return {kind, 15, 100, 0.1, 1};
  }
  return {};
}

std::vector<AirportLocation> scenario_airports() {
  return {{"ATL", kATL}, {"CMH", kCMH}, {"PHL", kPHL}, {"PIT", kPIT}, {"SFO", kSFO}};
}

Scenario generate(const ScenarioSpec& spec) {
  if (spec.flights_per_group < 2) {
    throw Error(ErrorCode::Domain, "scenario needs at least 2 flights per group");
  }
  if (spec.points_per_flight < 2) {
    throw Error(ErrorCode::Domain, "scenario needs at least 2 points per flight");
  }
  if (!(spec.jitter_deg >= 0.0) || !std::isfinite(spec.jitter_deg)) {
    throw Error(ErrorCode::Domain, "jitter_deg must be a finite value >= 0");
  }

  const RouteGeometry g = geometry_for(spec.kind);
  const std::size_t groups = group_count(spec.kind);
  const std::size_t total = groups * spec.flights_per_group;
  const std::size_t points = spec.points_per_flight;

  // Nominal block time at 420 kt spread over the fixes, at least 1 s apart.
  const double block_ms = great_circle_nm(g.origin, g.destination) / 420.0 * 3.6e6;
  const auto step = milliseconds{std::max<long long>(
      1000, static_cast<long long>(block_ms / static_cast<double>(points - 1)))};

  Rng rng(spec.seed);
  Scenario out;
  out.origin = g.origin_code;
  out.destination = g.destination_code;
  for (std::size_t f = 0; f < total; ++f) {
    const std::size_t group = f % groups;
    FlightDraw draw{rng.symmetric(), rng.symmetric(), 1.0 + 0.1 * rng.symmetric(),
                    12.0 * rng.symmetric(), 10.0 * rng.symmetric()};
    const Timestamp departure{sys_days{g.first_day} + hours{g.spacing_hours * static_cast<long>(f)} +
                              minutes{static_cast<long>(rng.unit() * 50.0)}};

    std::vector<TrackPoint> track;
    track.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
      const double s = static_cast<double>(i) / static_cast<double>(points - 1);
      TrackPoint p;
      p.position = position_at(spec.kind, g, group, draw, spec.jitter_deg, s);
      p.position.lon = normalize_lon(p.position.lon);
      const double climb = std::min({1.0, s / 0.1, (1.0 - s) / 0.1});
      const double cruise_alt = g.cruise_alt_ff[group] + draw.alt_offset;
      p.altitude_ff = 10.0 + (cruise_alt - 10.0) * climb + 2.0 * rng.symmetric() * climb;
      p.speed_kt = std::max(0.0, g.cruise_speed_kt[group] + draw.speed_offset +
                                     5.0 * rng.symmetric());
      p.time = departure + step * static_cast<long>(i);
      track.push_back(p);
    }
    char id[32];
    std::snprintf(id, sizeof id, "%s%s%04zu", g.origin_code.c_str(),
                  g.destination_code.c_str(), f + 1);
    out.flights.emplace_back(id, g.origin_code, g.destination_code, std::move(track));
    out.truth.push_back(group);
  }
  return out;
}

}  // namespace flightclust::synth
