#include "flightclust/json_io.hpp"

#include <string>

#include "flightclust/error.hpp"

namespace flightclust::json_io {

namespace {

json mean_sd_json(const MeanSd& v) { return {{"mean", v.mean}, {"sd", v.sd}}; }

std::string mode_name(ClusterMode::Kind kind) {
  switch (kind) {
    case ClusterMode::Kind::Auto: return "auto";
    case ClusterMode::Kind::Threshold: return "threshold";
    case ClusterMode::Kind::K: return "k";
  }
  return "auto";
}

const json& require(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end()) {
    throw Error(ErrorCode::Validation, std::string("missing field '") + field + "'", field);
  }
  return *it;
}

std::string require_string(const json& body, const char* field) {
  const json& v = require(body, field);
  if (!v.is_string()) {
    throw Error(ErrorCode::Validation, std::string("'") + field + "' must be a string",
                field);
  }
  return v.get<std::string>();
}

Date require_date(const json& body, const char* field) {
  const auto d = parse_date(require_string(body, field));
  if (!d) {
    throw Error(ErrorCode::Validation,
                std::string("'") + field + "' must be a YYYY-MM-DD date", field);
  }
  return *d;
}

std::size_t positive_integer(const json& v, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorCode::Validation,
                std::string("'") + field + "' must be a positive integer", field);
  }
  return v.get<std::size_t>();
}

json polyline(const FlightTrack& f) {
  const auto pos = f.positions();
  const std::size_t n = (pos.size() + kTransportMaxPoints - 1) / kTransportMaxPoints;
  json path = json::array();
  for (const auto& p : extract<GeoPoint>(pos, ExtractionFactor{n < 1 ? 1 : n})) {
    path.push_back({p.lat, p.lon});
  }
  return path;
}

}  // namespace

json to_json(const Dendrogram& d) {
  json merges = json::array();
  for (const auto& m : d.merges()) merges.push_back({m.left, m.right, m.height});
  return {{"n_leaves", d.n_leaves()}, {"merges", std::move(merges)}};
}

Dendrogram dendrogram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_leaves") || !j.contains("merges") ||
      !j["merges"].is_array()) {
    throw Error(ErrorCode::Validation, "dendrogram needs n_leaves and merges", "dendrogram");
  }
  const std::size_t n = positive_integer(j["n_leaves"], "n_leaves");
  std::vector<Merge> merges;
  for (const auto& m : j["merges"]) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_number_unsigned() ||
        !m[1].is_number_unsigned() || !m[2].is_number()) {
      throw Error(ErrorCode::Validation, "merge must be [left, right, height]", "merges");
    }
    merges.push_back({m[0].get<std::size_t>(), m[1].get<std::size_t>(),
                      m[2].get<double>(), 0});
  }
  try {
    return Dendrogram(n, std::move(merges));
  } catch (const Error& e) {
    throw Error(ErrorCode::Validation, e.what(), "merges");
  }
}

json to_json(const ClusterStats& s) {
  return {{"cluster", s.cluster_index},
          {"number_of_points", s.n_points},
          {"number_of_flights", s.n_flights},
          {"speed_knots", mean_sd_json(s.speed_kt)},
          {"altitude_hundred_feet", mean_sd_json(s.altitude_ff)},
          {"flight_distance_nm", mean_sd_json(s.flight_distance_nm)},
          {"deviation_with_gcd_pct", s.deviation_gcd_pct}};
}

json to_json(const SilhouetteReport& r, std::span<const std::string> labels) {
  json values = json::object();
  for (std::size_t i = 0; i < r.values.size() && i < labels.size(); ++i) {
    values[labels[i]] = r.values[i];
  }
  return {{"k", r.k}, {"score", r.score}, {"values", std::move(values)}};
}

json flight_summary(const FlightTrack& f) {
  return {{"flight_id", f.flight_id()},
          {"origin", f.origin()},
          {"destination", f.destination()},
          {"date", format_date(f.first_date())},
          {"n_points", f.size()},
          {"path", polyline(f)}};
}

ClusterRequest parse_cluster_request(const json& body) {
  if (!body.is_object()) {
    throw Error(ErrorCode::Validation, "request body must be a JSON object", "body");
  }
  ClusterRequest r;
  r.query.origin = require_string(body, "origin");
  r.query.destination = require_string(body, "destination");
  r.query.date_from = require_date(body, "from");
  r.query.date_to = require_date(body, "to");

  if (body.contains("metric")) {
    const auto m = parse_metric(require_string(body, "metric"));
    if (!m) throw Error(ErrorCode::Validation, "metric must be 'geo' or 'cosine'", "metric");
    r.metric = *m;
  }
  if (body.contains("extraction_n")) {
    r.extraction_n = ExtractionFactor{positive_integer(body["extraction_n"], "extraction_n")};
  }
  if (body.contains("linkage")) {
    const auto l = parse_linkage(require_string(body, "linkage"));
    if (!l) {
      throw Error(ErrorCode::Validation,
                  "linkage must be 'average', 'complete' or 'single'", "linkage");
    }
    r.linkage = *l;
  }
  const std::string mode = body.contains("mode") ? require_string(body, "mode") : "auto";
  if (mode == "auto") {
    r.mode.kind = ClusterMode::Kind::Auto;
    if (body.contains("k_cap")) r.k_cap = positive_integer(body["k_cap"], "k_cap");
  } else if (mode == "threshold") {
    const json& t = require(body, "threshold");
    if (!t.is_number()) {
      throw Error(ErrorCode::Validation, "'threshold' must be a number", "threshold");
    }
    r.mode = {ClusterMode::Kind::Threshold, t.get<double>(), 0};
  } else if (mode == "k") {
    r.mode = {ClusterMode::Kind::K, 0.0, positive_integer(require(body, "k"), "k")};
  } else {
    throw Error(ErrorCode::Validation, "mode must be 'auto', 'threshold' or 'k'", "mode");
  }
  r.validate();
  return r;
}

json to_json(const ClusterRequest& r) {
  json j = {{"origin", r.query.origin},
            {"destination", r.query.destination},
            {"from", format_date(r.query.date_from)},
            {"to", format_date(r.query.date_to)},
            {"metric", to_string(r.metric)},
            {"extraction_n", r.extraction_n.value()},
            {"linkage", to_string(r.linkage)},
            {"mode", mode_name(r.mode.kind)}};
  if (r.mode.kind == ClusterMode::Kind::Threshold) j["threshold"] = r.mode.threshold;
  if (r.mode.kind == ClusterMode::Kind::K) j["k"] = r.mode.k;
  if (r.mode.kind == ClusterMode::Kind::Auto && r.k_cap) j["k_cap"] = *r.k_cap;
  return j;
}

json to_json(const ClusterOutcome& o, const ClusterRequest& request) {
  const auto& labels = o.matrix->labels();
  json clusters = json::array();
  for (const auto& leaves : o.clustering.members()) {
    json ids = json::array();
    for (std::size_t leaf : leaves) ids.push_back(labels[leaf]);
    clusters.push_back({{"cluster", clusters.size()}, {"flight_ids", std::move(ids)}});
  }
  json flights = json::array();
  for (std::size_t i = 0; i < o.flights.size(); ++i) {
    flights.push_back({{"flight_id", o.flights[i].flight_id()},
                       {"cluster", o.clustering.labels[i]},
                       {"n_points", o.flights[i].size()},
                       {"path", polyline(o.flights[i])}});
  }
  json dendrogram = to_json(o.dendrogram);
  dendrogram["labels"] = labels;
  json stats = json::array();
  for (const auto& s : o.stats) stats.push_back(to_json(s));

  json j = {{"request", to_json(request)},
            {"k", o.clustering.k},
            {"clusters", std::move(clusters)},
            {"flights", std::move(flights)},
            {"dendrogram", std::move(dendrogram)},
            {"stats", std::move(stats)},
            {"airport_gcd_nm", o.airport_gcd_nm},
            {"timing",
             {{"matrix_ms", o.timing.matrix_ms},
              {"cluster_ms", o.timing.cluster_ms},
              {"matrix_cached", o.timing.matrix_cached}}}};
  if (o.silhouette) j["silhouette"] = to_json(*o.silhouette, labels);
  return j;
}

json to_geojson(const ClusterOutcome& o) {
  json features = json::array();
  for (std::size_t i = 0; i < o.flights.size(); ++i) {
    json coords = json::array();
    for (const auto& p : o.flights[i].points()) {
      coords.push_back({p.position.lon, p.position.lat});
    }
    // A LineString needs two positions.
    if (coords.size() == 1) coords.push_back(coords.front());
    features.push_back(
        {{"type", "Feature"},
         {"geometry", {{"type", "LineString"}, {"coordinates", std::move(coords)}}},
         {"properties",
          {{"flight_id", o.flights[i].flight_id()}, {"cluster", o.clustering.labels[i]}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

}  // namespace flightclust::json_io
