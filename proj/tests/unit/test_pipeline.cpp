#include <doctest.h>

#include "flightclust/error.hpp"
#include "flightclust/json_io.hpp"
#include "flightclust/pipeline.hpp"
#include "fixtures.hpp"

using namespace flightclust;
using synth::ScenarioKind;

namespace {

ClusterRequest request(const std::string& o, const std::string& d, const char* from,
                       const char* to) {
  ClusterRequest r;
  r.query = {o, d, *parse_date(from), *parse_date(to)};
  return r;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Domain;
}

}  // namespace

TEST_CASE("auto mode on two bundles") {
  const auto store = fixtures::store_from(ScenarioKind::TwoBundles);
  const auto out = run_cluster(store, request("CMH", "ATL", "2014-06-01", "2014-06-22"));
  CHECK(out.flights.size() == 40);
  CHECK(out.clustering.k == 2);
  REQUIRE(out.silhouette);
  CHECK(out.silhouette->score > 0.7);
  CHECK(out.stats.size() == 2);
  CHECK(out.dendrogram.merges().size() == 39);
}

TEST_CASE("threshold above the root gives one cluster without silhouette") {
  const auto store = fixtures::store_from(ScenarioKind::TwoBundles);
  auto r = request("CMH", "ATL", "2014-06-01", "2014-06-22");
  r.mode = {ClusterMode::Kind::Threshold, 5000.0, 0};
  const auto out = run_cluster(store, r);
  CHECK(out.clustering.k == 1);
  CHECK_FALSE(out.silhouette);
  CHECK(out.stats.size() == 1);
}

TEST_CASE("pipeline errors") {
  const auto store = fixtures::store_from(ScenarioKind::TwoBundles);
  CHECK(code_of([&] { run_cluster(store, request("CMH", "ATL", "2015-01-01", "2015-01-02")); }) ==
        ErrorCode::EmptyResult);
  // Flights depart every 12 hours, so one day holds two flights.
  CHECK(code_of([&] { run_cluster(store, request("CMH", "ATL", "2014-06-01", "2014-06-01")); }) ==
        ErrorCode::TooFewFlights);

  auto k_mode = request("CMH", "ATL", "2014-06-01", "2014-06-01");
  k_mode.mode = {ClusterMode::Kind::K, 0.0, 1};
  CHECK(run_cluster(store, k_mode).clustering.k == 1);
  k_mode.mode.k = 3;
  CHECK(code_of([&] { run_cluster(store, k_mode); }) == ErrorCode::Validation);

  TrackStore no_airports;
  for (const auto& f : synth::generate(synth::default_spec(ScenarioKind::TwoBundles)).flights) {
    no_airports.add(f);
  }
  CHECK(code_of([&] {
          run_cluster(no_airports, request("CMH", "ATL", "2014-06-01", "2014-06-22"));
        }) == ErrorCode::MissingAirport);

  auto cos = request("CMH", "ATL", "2014-06-01", "2014-06-22");
  cos.metric = MetricKind::Cosine;
  cos.mode = {ClusterMode::Kind::Threshold, 50.0, 0};
  CHECK(code_of([&] { cos.validate(); }) == ErrorCode::Validation);
  cos.mode.threshold = 0.5;
  CHECK_NOTHROW(cos.validate());
}

TEST_CASE("matrix cache reuses matrices and evicts least recently used") {
  const auto store = fixtures::store_from(ScenarioKind::TwoBundles);
  MatrixCache cache(2);
  auto r = request("CMH", "ATL", "2014-06-01", "2014-06-22");
  const auto first = run_cluster(store, r, &cache);
  CHECK_FALSE(first.timing.matrix_cached);
  r.mode = {ClusterMode::Kind::Threshold, 20.0, 0};
  const auto second = run_cluster(store, r, &cache);
  CHECK(second.timing.matrix_cached);
  CHECK(second.matrix == first.matrix);

  auto other = r;
  other.extraction_n = ExtractionFactor{2};
  run_cluster(store, other, &cache);
  auto third = r;
  third.metric = MetricKind::Cosine;
  third.mode = {ClusterMode::Kind::Auto, 0.0, 0};
  run_cluster(store, third, &cache);
  CHECK(cache.size() == 2);
  CHECK(cache.get(MatrixCache::key_for(r)) == nullptr);
  CHECK(cache.get(MatrixCache::key_for(third)) != nullptr);
}

TEST_CASE("responses are deterministic apart from timing") {
  const auto store = fixtures::store_from(ScenarioKind::ParallelCorridors);
  auto r = request("SFO", "PIT", "2014-07-19", "2014-08-30");
  auto a = json_io::to_json(run_cluster(store, r), r);
  auto b = json_io::to_json(run_cluster(store, r), r);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("dendrogram JSON round trip and client-side cut agreement") {
  const auto store = fixtures::store_from(ScenarioKind::ParallelCorridors);
  auto r = request("SFO", "PIT", "2014-07-19", "2014-08-30");
  const auto out = run_cluster(store, r);
  const auto j = json_io::to_json(out.dendrogram);
  const auto back = json_io::dendrogram_from_json(j);
  REQUIRE(back.merges().size() == out.dendrogram.merges().size());
  for (std::size_t i = 0; i < back.merges().size(); ++i) {
    CHECK(back.merges()[i].left == out.dendrogram.merges()[i].left);
    CHECK(back.merges()[i].height == out.dendrogram.merges()[i].height);
  }
  for (double t : {0.0, 10.0, 50.0, 80.0, 200.0}) {
    r.mode = {ClusterMode::Kind::Threshold, t, 0};
    CHECK(run_cluster(store, r).clustering.labels == cut_threshold(back, t).labels);
  }
  CHECK_THROWS_AS(json_io::dendrogram_from_json(nlohmann::json{{"n_leaves", 2}}), Error);
}

TEST_CASE("parse_cluster_request validation names fields") {
  const nlohmann::json base = {{"origin", "CMH"}, {"destination", "ATL"},
                               {"from", "2014-06-01"}, {"to", "2014-06-22"}};
  auto field_of = [](nlohmann::json body) {
    try {
      json_io::parse_cluster_request(body);
    } catch (const Error& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  CHECK(field_of(base) == "<none>");
  auto b = base;
  b.erase("origin");
  CHECK(field_of(b) == "origin");
  b = base;
  b["from"] = "06/01/2014";
  CHECK(field_of(b) == "from");
  b = base;
  b["metric"] = "frechet";
  CHECK(field_of(b) == "metric");
  b = base;
  b["mode"] = "threshold";
  CHECK(field_of(b) == "threshold");
  b["threshold"] = -1;
  CHECK(field_of(b) == "threshold");
  b = base;
  b["extraction_n"] = 0;
  CHECK(field_of(b) == "extraction_n");
  b = base;
  b["linkage"] = "ward";
  CHECK(field_of(b) == "linkage");
  b = base;
  b["mode"] = "k";
  b["k"] = 3;
  const auto req = json_io::parse_cluster_request(b);
  CHECK(req.mode.kind == ClusterMode::Kind::K);
  CHECK(req.mode.k == 3);
}

TEST_CASE("GeoJSON export") {
  const auto store = fixtures::store_from(ScenarioKind::TwoBundles);
  auto r = request("CMH", "ATL", "2014-06-01", "2014-06-22");
  const auto out = run_cluster(store, r);
  const auto g = json_io::to_geojson(out);
  CHECK(g["type"] == "FeatureCollection");
  REQUIRE(g["features"].size() == 40);
  const auto& f = g["features"][0];
  CHECK(f["geometry"]["type"] == "LineString");
  CHECK(f["properties"]["flight_id"] == out.flights[0].flight_id());
  CHECK(f["properties"]["cluster"] == out.clustering.labels[0]);
  // [lon, lat] order.
  CHECK(f["geometry"]["coordinates"][0][0] == out.flights[0].points()[0].position.lon);
}
