#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flightclust/hcluster.hpp"
#include "flightclust/metrics.hpp"

namespace flightclust {

struct SilhouetteReport {
  std::vector<double> values;  // per leaf, in matrix label order
  double score = 0.0;          // mean of values
  std::size_t k = 0;
};

/// Per-sample (b - a) / max(a, b), with a the mean distance to the sample's
/// own cluster and b the smallest mean distance to another cluster. Samples
/// in singleton clusters score 0, as does a = b = 0. Throws
/// Error(UndefinedSilhouette) unless 2 <= k <= n - 1.
SilhouetteReport silhouette(const DistanceMatrix& m, const Clustering& c);

struct AutoCut {
  Clustering clustering;
  SilhouetteReport report;
};

/// Scores cut_k for every k in [2, min(n - 1, k_cap)] and keeps the best;
/// ties go to the smaller k. Throws Error(TooFewFlights) when n < 3.
AutoCut auto_cut(const DistanceMatrix& m, const Dendrogram& d,
                 std::optional<std::size_t> k_cap = std::nullopt);

}  // namespace flightclust
