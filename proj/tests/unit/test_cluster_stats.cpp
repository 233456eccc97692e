#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "flightclust/cluster_stats.hpp"
#include "flightclust/error.hpp"
#include "flightclust/synthgen.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flightclust;

namespace {

Clustering from_labels(std::vector<std::size_t> labels) {
  Clustering c;
  for (auto l : labels) c.k = std::max(c.k, l + 1);
  c.labels = std::move(labels);
  return c;
}

// Single-pass moments, a different route from the library's two-pass SD.
struct Moments {
  double n = 0, sum = 0, sq = 0;
  void add(double v) { n += 1; sum += v; sq += v * v; }
  double mean() const { return sum / n; }
  double sd() const { return std::sqrt(std::max(0.0, sq / n - mean() * mean())); }
};

}  // namespace

TEST_CASE("a flight along the airport great circle deviates 0%") {
  // Points along the equator from (0, 0) to (0, 3).
  const auto f = fixtures::track("F", {{0, 0}, {0, 1}, {0, 2}, {0, 3}});
  const double gcd = great_circle_nm({0, 0}, {0, 3});
  const auto stats = compute_stats(std::vector<FlightTrack>{f}, from_labels({0}), gcd);
  REQUIRE(stats.size() == 1);
  CHECK(std::abs(stats[0].deviation_gcd_pct) < 1e-9);
  CHECK(stats[0].n_flights == 1);
  CHECK(stats[0].n_points == 4);
  CHECK(stats[0].speed_kt.sd == 0.0);
  CHECK(stats[0].altitude_ff.sd == 0.0);
  CHECK(stats[0].flight_distance_nm.sd == 0.0);
}

TEST_CASE("compute_stats errors") {
  const std::vector<FlightTrack> flights{fixtures::track("F", {{0, 0}, {0, 1}})};
  CHECK_THROWS_AS(compute_stats(flights, from_labels({0}), 0.0), Error);
  CHECK_THROWS_AS(compute_stats(flights, from_labels({}), 10.0), Error);
  Clustering bad = from_labels({0});
  bad.labels[0] = 3;
  CHECK_THROWS_AS(compute_stats(flights, bad, 10.0), Error);
}

TEST_CASE("compute_stats matches a direct recomputation on a synthetic scenario") {
  const auto sc = synth::generate(synth::default_spec(synth::ScenarioKind::ParallelCorridors));
  const double gcd = great_circle_nm({37.619, -122.375}, {40.492, -80.233});
  const auto c = from_labels(sc.truth);
  const auto stats = compute_stats(sc.flights, c, gcd);
  REQUIRE(stats.size() == 3);

  std::map<std::size_t, Moments> speed, alt, dist;
  std::map<std::size_t, std::size_t> points, flights;
  for (std::size_t i = 0; i < sc.flights.size(); ++i) {
    const auto g = sc.truth[i];
    double len = 0.0;
    const auto pts = sc.flights[i].points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      speed[g].add(pts[j].speed_kt);
      alt[g].add(pts[j].altitude_ff);
      if (j > 0) {
        len += oracle::haversine_nm(pts[j - 1].position.lat, pts[j - 1].position.lon,
                                    pts[j].position.lat, pts[j].position.lon);
      }
    }
    dist[g].add(len);
    points[g] += pts.size();
    ++flights[g];
  }
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); };
  std::size_t total_points = 0, total_flights = 0;
  for (const auto& s : stats) {
    const auto g = s.cluster_index;  // truth labels are first-appearance ordered
    CHECK(s.n_points == points[g]);
    CHECK(s.n_flights == flights[g]);
    CHECK(rel(s.speed_kt.mean, speed[g].mean()) < 1e-9);
    CHECK(rel(s.speed_kt.sd, speed[g].sd()) < 1e-6);
    CHECK(rel(s.altitude_ff.mean, alt[g].mean()) < 1e-9);
    CHECK(rel(s.altitude_ff.sd, alt[g].sd()) < 1e-6);
    CHECK(rel(s.flight_distance_nm.mean, dist[g].mean()) < 1e-9);
    const double dev = 100.0 * (dist[g].mean() - gcd) / gcd;
    CHECK(std::abs(s.deviation_gcd_pct - dev) < 1e-9 * std::max(1.0, std::abs(dev)) + 1e-7);
    total_points += s.n_points;
    total_flights += s.n_flights;
  }
  std::size_t raw_points = 0;
  for (const auto& f : sc.flights) raw_points += f.size();
  CHECK(total_points == raw_points);
  CHECK(total_flights == sc.flights.size());
}

TEST_CASE("statistics are permutation invariant") {
  auto sc = synth::generate(synth::default_spec(synth::ScenarioKind::TwoBundles));
  const auto base = compute_stats(sc.flights, from_labels(sc.truth), 400.0);
  std::vector<FlightTrack> rev(sc.flights.rbegin(), sc.flights.rend());
  std::vector<std::size_t> labels(sc.truth.rbegin(), sc.truth.rend());
  // Reversal swaps first-appearance order of the two groups.
  for (auto& l : labels) l = 1 - l;
  const auto flipped = compute_stats(rev, from_labels(labels), 400.0);
  for (std::size_t g = 0; g < 2; ++g) {
    const auto& same = base[1 - g];
    CHECK(flipped[g].n_points == same.n_points);
    CHECK(flipped[g].speed_kt.mean == doctest::Approx(same.speed_kt.mean).epsilon(1e-12));
    CHECK(flipped[g].flight_distance_nm.sd ==
          doctest::Approx(same.flight_distance_nm.sd).epsilon(1e-9));
  }
}

TEST_CASE("mean_sd is the population convention") {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  const auto r = mean_sd(v);
  CHECK(r.mean == 5.0);
  CHECK(r.sd == 2.0);
}
