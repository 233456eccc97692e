#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flightclust/hcluster.hpp"
#include "flightclust/track_model.hpp"

namespace flightclust {

/// Mean and population standard deviation.
struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd mean_sd(std::span<const double> values);

/// Per-cluster summary in the layout of the route statistics tables.
/// Counts and point statistics use raw (unextracted) points.
struct ClusterStats {
  std::size_t cluster_index = 0;
  std::size_t n_flights = 0;
  std::size_t n_points = 0;
  MeanSd speed_kt;
  MeanSd altitude_ff;
  MeanSd flight_distance_nm;  // flown path length per flight
  /// 100 * (mean flight distance - airport GCD) / airport GCD.
  double deviation_gcd_pct = 0.0;
};

/// One entry per cluster, in cluster index order. `flights` is aligned with
/// the clustering leaves. Throws Error(Domain) if a flight is unlabeled or
/// airport_gcd_nm <= 0.
std::vector<ClusterStats> compute_stats(std::span<const FlightTrack> flights,
                                        const Clustering& c,
                                        double airport_gcd_nm);

}  // namespace flightclust
