#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "flightclust/track_model.hpp"

namespace fixtures {

inline flightclust::Timestamp at(int y, unsigned m, unsigned d, int hour = 12) {
  using namespace std::chrono;
  return flightclust::Timestamp{sys_days{year{y} / month{m} / day{d}} + hours{hour}};
}

/// Track with one fix per minute starting at `start`.
inline flightclust::FlightTrack track(const std::string& id,
                                      const std::vector<flightclust::GeoPoint>& pts,
                                      flightclust::Timestamp start = at(2014, 6, 1),
                                      const std::string& origin = "CMH",
                                      const std::string& destination = "ATL",
                                      double speed = 400.0, double altitude = 300.0) {
  std::vector<flightclust::TrackPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back({pts[i], altitude, speed,
                      start + std::chrono::minutes{static_cast<long>(i)}});
  }
  return flightclust::FlightTrack(id, origin, destination, std::move(points));
}

}  // namespace fixtures

#include "flightclust/synthgen.hpp"

namespace fixtures {

inline flightclust::TrackStore store_from(const flightclust::synth::Scenario& sc) {
  flightclust::TrackStore store;
  for (const auto& f : sc.flights) store.add(f);
  for (const auto& a : flightclust::synth::scenario_airports()) store.add_airport(a);
  return store;
}

inline flightclust::TrackStore store_from(flightclust::synth::ScenarioKind kind) {
  return store_from(flightclust::synth::generate(flightclust::synth::default_spec(kind)));
}

}  // namespace fixtures
