#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "flightclust/metrics.hpp"

namespace flightclust {

/// Cluster-to-cluster distance used after a merge.
enum class Linkage { Average, Complete, Single };

std::string_view to_string(Linkage linkage) noexcept;
std::optional<Linkage> parse_linkage(std::string_view text) noexcept;

/// One agglomeration step. Leaves are node ids 0..n-1; the i-th merge creates
/// node n + i.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t node = 0;
};

/// Full merge tree: n_leaves - 1 merges with non-decreasing heights.
class Dendrogram {
 public:
  Dendrogram() = default;

  /// Validates the merge list: node ids in range, every node used at most
  /// once as a child, heights non-decreasing. Throws Error(Domain).
  Dendrogram(std::size_t n_leaves, std::vector<Merge> merges);

  std::size_t n_leaves() const noexcept { return n_leaves_; }
  const std::vector<Merge>& merges() const noexcept { return merges_; }
  /// Height of the last merge, 0 for a single leaf.
  double root_height() const noexcept;

 private:
  std::size_t n_leaves_ = 0;
  std::vector<Merge> merges_;
};

/// How a Clustering was obtained.
struct CutSource {
  enum class Kind { AutoSilhouette, Threshold, KCut };
  Kind kind = Kind::KCut;
  double threshold = 0.0;  // Threshold only
  std::size_t k = 0;       // KCut only
};

/// Flat partition of the dendrogram leaves. Cluster indices are contiguous
/// and numbered by first appearance in leaf order.
struct Clustering {
  std::vector<std::size_t> labels;  // per leaf
  std::size_t k = 0;
  CutSource source;

  /// Leaf indices per cluster, each list ascending.
  std::vector<std::vector<std::size_t>> members() const;
};

/// Agglomerative clustering with Lance-Williams updates. O(n^3) time with a
/// full pairwise scan per merge, O(n^2) memory; fine for the few hundred
/// flights of a single airport-pair query. Ties on the minimum distance go
/// to the lexicographically smallest (min node id, max node id) pair.
Dendrogram build_dendrogram(const DistanceMatrix& m,
                            Linkage linkage = Linkage::Average);

/// Applies every merge with height strictly below t.
Clustering cut_threshold(const Dendrogram& d, double t);

/// Applies the first n - k merges. Throws Error(Domain) unless 1 <= k <= n.
Clustering cut_k(const Dendrogram& d, std::size_t k);

/// Applies the first `merge_count` merges.
Clustering apply_merges(const Dendrogram& d, std::size_t merge_count);

}  // namespace flightclust
