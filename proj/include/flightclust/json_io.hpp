#pragma once

#include <span>

#include <nlohmann/json.hpp>

#include "flightclust/cluster_stats.hpp"
#include "flightclust/hcluster.hpp"
#include "flightclust/pipeline.hpp"
#include "flightclust/quality.hpp"

namespace flightclust::json_io {

using nlohmann::json;

/// Per-flight polylines in responses are thinned to at most this many points.
inline constexpr std::size_t kTransportMaxPoints = 250;

/// `{"n_leaves": n, "merges": [[left, right, height], ...]}`
json to_json(const Dendrogram& d);
/// Inverse of to_json; throws Error(Validation) on malformed input.
Dendrogram dendrogram_from_json(const json& j);

json to_json(const ClusterStats& s);
json to_json(const SilhouetteReport& r, std::span<const std::string> labels);

/// Flight descriptor used by GET /api/flights.
json flight_summary(const FlightTrack& f);

/// Reads a ClusterRequest body:
///   {"origin": "CMH", "destination": "ATL", "from": "2014-06-01",
///    "to": "2014-06-22", "metric": "geo", "extraction_n": 1,
///    "linkage": "average", "mode": "auto" | "threshold" | "k",
///    "threshold": 50, "k": 3, "k_cap": 20}
/// Throws Error(Validation) naming the offending field.
ClusterRequest parse_cluster_request(const json& body);
json to_json(const ClusterRequest& r);

/// Full response. The "timing" member is the only part that varies between
/// identical requests.
json to_json(const ClusterOutcome& outcome, const ClusterRequest& request);

/// FeatureCollection with one LineString per flight carrying `flight_id` and
/// `cluster` properties. Coordinates are [lon, lat].
json to_geojson(const ClusterOutcome& outcome);

}  // namespace flightclust::json_io
