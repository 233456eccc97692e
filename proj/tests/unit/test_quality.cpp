#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "flightclust/error.hpp"
#include "flightclust/quality.hpp"
#include "oracles.hpp"

using namespace flightclust;

namespace {

DistanceMatrix to_matrix(const oracle::Matrix& d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.size(); ++i) labels.push_back("L" + std::to_string(i));
  return DistanceMatrix::from_values(labels, oracle::flatten(d));
}

Clustering make_clustering(std::vector<std::size_t> labels) {
  Clustering c;
  c.k = 0;
  for (auto l : labels) c.k = std::max(c.k, l + 1);
  c.labels = std::move(labels);
  return c;
}

const oracle::Matrix kFour{{0, 1, 10, 10}, {1, 0, 10, 10}, {10, 10, 0, 1}, {10, 10, 1, 0}};

}  // namespace

TEST_CASE("silhouette hand case") {
  const auto r = silhouette(to_matrix(kFour), make_clustering({0, 0, 1, 1}));
  CHECK(r.k == 2);
  for (double v : r.values) CHECK(v == 0.9);
  CHECK(r.score == 0.9);
}

TEST_CASE("silhouette is undefined outside 2 <= k <= n-1") {
  const auto m = to_matrix(kFour);
  for (auto labels : {std::vector<std::size_t>{0, 0, 0, 0}, {0, 1, 2, 3}}) {
    try {
      silhouette(m, make_clustering(labels));
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UndefinedSilhouette);
    }
  }
}

TEST_CASE("singleton clusters score 0") {
  const auto r = silhouette(to_matrix(kFour), make_clustering({0, 0, 1, 2}));
  CHECK(r.values[2] == 0.0);
  CHECK(r.values[3] == 0.0);
  // a = 1, b = 10 for the first two samples.
  CHECK(r.values[0] == 0.9);
  CHECK(r.score == doctest::Approx(0.45));
}

TEST_CASE("silhouette matches the direct-formula oracle") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> size(3, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const auto raw = oracle::random_matrix(rng, n);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(4, n - 1))(rng);
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i < k ? i : std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    const auto r = silhouette(to_matrix(raw), make_clustering(labels));
    const auto expected = oracle::silhouette_values(raw, labels);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(r.values[i] - expected[i]) <= 1e-12);
      CHECK(r.values[i] >= -1.0);
      CHECK(r.values[i] <= 1.0);
      mean += expected[i];
    }
    CHECK(std::abs(r.score - mean / static_cast<double>(n)) <= 1e-12);

    // Scale invariance.
    oracle::Matrix scaled = raw;
    for (auto& row : scaled) for (auto& v : row) v *= 3.5;
    CHECK(silhouette(to_matrix(scaled), make_clustering(labels)).score ==
          doctest::Approx(r.score).epsilon(1e-12));
  }
}

TEST_CASE("auto_cut on the four-flight example") {
  const auto m = to_matrix(kFour);
  const auto d = build_dendrogram(m);
  const auto best = auto_cut(m, d);
  CHECK(best.clustering.k == 2);
  CHECK(best.report.score == 0.9);
  CHECK(best.clustering.source.kind == CutSource::Kind::AutoSilhouette);
  CHECK(silhouette(m, cut_k(d, 3)).score < 0.9);
}

TEST_CASE("auto_cut with equidistant flights ties to k = 2") {
  const oracle::Matrix eq{{0, 5, 5}, {5, 0, 5}, {5, 5, 0}};
  const auto m = to_matrix(eq);
  const auto best = auto_cut(m, build_dendrogram(m));
  CHECK(best.clustering.k == 2);
  CHECK(best.report.score <= 0.0);
}

TEST_CASE("auto_cut needs three flights and beats every other k") {
  const auto two = to_matrix({{0, 1}, {1, 0}});
  try {
    auto_cut(two, build_dendrogram(two));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewFlights);
  }

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = to_matrix(oracle::random_matrix(rng, 11));
    const auto d = build_dendrogram(m);
    const auto best = auto_cut(m, d);
    for (std::size_t k = 2; k <= 10; ++k) {
      const double s = silhouette(m, cut_k(d, k)).score;
      CHECK(best.report.score >= s);
      if (s == best.report.score) CHECK(best.clustering.k <= k);
    }
    const auto capped = auto_cut(m, d, 3);
    CHECK(capped.clustering.k <= 3);
  }
}
