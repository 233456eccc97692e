#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flightclust/track_model.hpp"

namespace flightclust::synth {

/// Route archetypes:
///  - TwoBundles: two well separated path families between CMH and ATL.
///  - ParallelCorridors: three laterally offset eastbound corridors SFO-PIT.
///  - SharedCorridorDivergentArrivals: CMH-PHL flights sharing one enroute
///    corridor, splitting into a northern and a southern arrival hook over
///    the final 20% of each track.
enum class ScenarioKind { TwoBundles, ParallelCorridors, SharedCorridorDivergentArrivals };

std::string_view to_string(ScenarioKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario(std::string_view text) noexcept;

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::TwoBundles;
  std::size_t flights_per_group = 20;
  std::size_t points_per_flight = 100;
  double jitter_deg = 0.05;  // amplitude of the per-flight lateral wander
  std::uint64_t seed = 1;
};

/// Default flight count, point count and jitter for each archetype.
ScenarioSpec default_spec(ScenarioKind kind);

std::size_t group_count(ScenarioKind kind) noexcept;

struct Scenario {
  std::vector<FlightTrack> flights;  // sorted by flight_id
  std::vector<std::size_t> truth;    // ground-truth group per flight
  std::string origin;
  std::string destination;
};

/// Deterministic for a given spec. Randomness comes from std::mt19937_64
/// seeded with spec.seed; doubles are formed from the top 53 bits of each
/// draw so the output does not depend on the standard library's
/// distribution implementations.
///
/// Every flight gets a smooth lateral offset jitter_deg * (u1 sin(pi s) +
/// 0.5 u2 sin(2 pi s)), s in [0, 1] along the route and u1, u2 uniform in
/// [-1, 1], so direction vectors stay realistic.
///
/// Throws Error(Domain) if flights_per_group < 2, points_per_flight < 2 or
/// jitter_deg is negative.
Scenario generate(const ScenarioSpec& spec);

/// Airports referenced by the scenarios (CMH, ATL, SFO, PIT, PHL).
std::vector<AirportLocation> scenario_airports();

}  // namespace flightclust::synth
