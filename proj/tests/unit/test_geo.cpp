#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "flightclust/error.hpp"
#include "flightclust/geo.hpp"
#include "oracles.hpp"

using namespace flightclust;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double R = kEarthRadiusNm;

GeoPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lat(-90.0, 90.0), lon(-180.0, 180.0);
  return {lat(rng), lon(rng)};
}
}  // namespace

TEST_CASE("great_circle_nm analytic cases") {
  CHECK(great_circle_nm({40.0, -83.0}, {40.0, -83.0}) == 0.0);
  CHECK(great_circle_nm({0, 0}, {0, 180}) == doctest::Approx(kPi * R).epsilon(1e-12));
  CHECK(great_circle_nm({0, 0}, {0, 90}) == doctest::Approx(kPi / 2 * R).epsilon(1e-12));
  CHECK(kPi * R == doctest::Approx(10807.3).epsilon(1e-5));
}

TEST_CASE("great_circle_nm agrees with a haversine oracle") {
  std::mt19937_64 rng(20140601);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint p = random_point(rng), q = random_point(rng);
    const double expected = oracle::haversine_nm(p.lat, p.lon, q.lat, q.lon);
    CHECK(std::abs(great_circle_nm(p, q) - expected) < 0.01);
  }
}

TEST_CASE("great_circle_nm properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const GeoPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
    const double pq = great_circle_nm(p, q);
    CHECK(pq == great_circle_nm(q, p));
    CHECK(pq >= 0.0);
    CHECK(pq <= kPi * R);
    CHECK(great_circle_nm(p, p) == 0.0);
    CHECK(great_circle_nm(p, r) <= pq + great_circle_nm(q, r) + 1e-6 * R);
  }
}

TEST_CASE("longitude differences beyond 180 degrees need no wrapping") {
  CHECK(great_circle_nm({10, 175}, {10, -175}) ==
        doctest::Approx(great_circle_nm({10, -5}, {10, 5})).epsilon(1e-12));
}

TEST_CASE("normalize_lon and is_valid") {
  CHECK(normalize_lon(190.0) == doctest::Approx(-170.0));
  CHECK(normalize_lon(-190.0) == doctest::Approx(170.0));
  CHECK(normalize_lon(45.0) == 45.0);
  CHECK(is_valid({90.0, 180.0}));
  CHECK_FALSE(is_valid({91.0, 0.0}));
  CHECK_FALSE(is_valid({0.0, 180.5}));
}

TEST_CASE("path_length_nm") {
  const std::vector<GeoPoint> single{{12.0, 34.0}};
  CHECK(path_length_nm(single) == 0.0);

  const std::vector<GeoPoint> equator{{0, 0}, {0, 1}, {0, 2}};
  CHECK(path_length_nm(equator) == doctest::Approx(2 * kPi / 180 * R).epsilon(1e-12));
  CHECK(path_length_nm(equator) == doctest::Approx(120.08).epsilon(1e-4));

  CHECK_THROWS_AS(path_length_nm(std::vector<GeoPoint>{}), Error);
}

TEST_CASE("path_length_nm matches leg-sum oracle and is reversal invariant") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> step(0.0, 0.3);
  std::vector<GeoPoint> track{{35.0, -100.0}};
  for (int i = 1; i < 50; ++i) {
    track.push_back({track.back().lat + step(rng), track.back().lon + step(rng)});
  }
  double oracle_sum = 0.0;
  for (std::size_t i = 1; i < track.size(); ++i) {
    oracle_sum += oracle::haversine_nm(track[i - 1].lat, track[i - 1].lon, track[i].lat,
                                       track[i].lon);
  }
  const double forward = path_length_nm(track);
  CHECK(forward == doctest::Approx(oracle_sum).epsilon(1e-9));
  std::reverse(track.begin(), track.end());
  CHECK(path_length_nm(track) == doctest::Approx(forward).epsilon(1e-12));
}
