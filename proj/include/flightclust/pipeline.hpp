#pragma once

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flightclust/cluster_stats.hpp"
#include "flightclust/hcluster.hpp"
#include "flightclust/metrics.hpp"
#include "flightclust/quality.hpp"
#include "flightclust/track_model.hpp"

namespace flightclust {

/// How the dendrogram is cut: best silhouette, a distance threshold in the
/// metric's units, or a fixed cluster count.
struct ClusterMode {
  enum class Kind { Auto, Threshold, K };
  Kind kind = Kind::Auto;
  double threshold = 0.0;
  std::size_t k = 0;
};

struct ClusterRequest {
  TrackQuery query;
  MetricKind metric = MetricKind::Geographic;
  ExtractionFactor extraction_n{1};
  Linkage linkage = Linkage::Average;
  ClusterMode mode;
  std::optional<std::size_t> k_cap;  // auto mode only

  /// Field-level checks that do not need the store. A threshold outside the
  /// metric's range (e.g. 50 for cosine) is a unit mismatch. Throws
  /// Error(Validation) naming the field.
  void validate() const;
};

struct Timing {
  double matrix_ms = 0.0;
  double cluster_ms = 0.0;
  bool matrix_cached = false;
};

struct ClusterOutcome {
  std::vector<FlightTrack> flights;  // matrix label order
  std::shared_ptr<const DistanceMatrix> matrix;
  Dendrogram dendrogram;
  Clustering clustering;
  std::optional<SilhouetteReport> silhouette;  // only when 2 <= k <= n - 1
  std::vector<ClusterStats> stats;
  double airport_gcd_nm = 0.0;
  Timing timing;
};

/// Bounded LRU cache of distance matrices keyed by (query, metric,
/// extraction). Safe for concurrent use; concurrent puts of the same key keep
/// the last one.
class MatrixCache {
 public:
  explicit MatrixCache(std::size_t capacity = 8) : capacity_(capacity) {}

  static std::string key_for(const ClusterRequest& r);

  std::shared_ptr<const DistanceMatrix> get(const std::string& key);
  void put(const std::string& key, std::shared_ptr<const DistanceMatrix> m);
  std::size_t size() const;

 private:
  using Entry = std::pair<std::string, std::shared_ptr<const DistanceMatrix>>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

/// Query, distance matrix, dendrogram, cut, silhouette and statistics.
/// Throws Error(EmptyResult) when the query matches no flights and
/// Error(TooFewFlights) in auto mode with fewer than 3 flights.
ClusterOutcome run_cluster(const TrackStore& store, const ClusterRequest& request,
                           MatrixCache* cache = nullptr, unsigned workers = 0);

}  // namespace flightclust
