#include "flightclust/cluster_stats.hpp"

#include <cmath>

#include "flightclust/error.hpp"

namespace flightclust {

MeanSd mean_sd(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

std::vector<ClusterStats> compute_stats(std::span<const FlightTrack> flights,
                                        const Clustering& c,
                                        double airport_gcd_nm) {
  if (!(airport_gcd_nm > 0.0)) {
    throw Error(ErrorCode::Domain, "airport great-circle distance must be > 0");
  }
  if (c.labels.size() != flights.size()) {
    throw Error(ErrorCode::Domain, "every flight must carry a cluster label");
  }
  for (std::size_t label : c.labels) {
    if (label >= c.k) throw Error(ErrorCode::Domain, "cluster label out of range");
  }

  std::vector<ClusterStats> out;
  out.reserve(c.k);
  for (const auto& leaves : c.members()) {
    if (leaves.empty()) throw Error(ErrorCode::Domain, "empty cluster in clustering");
    ClusterStats s;
    s.cluster_index = out.size();
    s.n_flights = leaves.size();
    std::vector<double> speeds, altitudes, distances;
    for (std::size_t leaf : leaves) {
      const FlightTrack& f = flights[leaf];
      for (const auto& p : f.points()) {
        speeds.push_back(p.speed_kt);
        altitudes.push_back(p.altitude_ff);
      }
      distances.push_back(path_length_nm(f.positions()));
    }
    s.n_points = speeds.size();
    s.speed_kt = mean_sd(speeds);
    s.altitude_ff = mean_sd(altitudes);
    s.flight_distance_nm = mean_sd(distances);
    s.deviation_gcd_pct =
        100.0 * (s.flight_distance_nm.mean - airport_gcd_nm) / airport_gcd_nm;
    out.push_back(s);
  }
  return out;
}

}  // namespace flightclust
