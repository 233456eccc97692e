#include "flightclust/hcluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "flightclust/error.hpp"

namespace flightclust {

std::string_view to_string(Linkage linkage) noexcept {
  switch (linkage) {
    case Linkage::Average: return "average";
    case Linkage::Complete: return "complete";
    case Linkage::Single: return "single";
  }
  return "average";
}

std::optional<Linkage> parse_linkage(std::string_view text) noexcept {
  if (text == "average") return Linkage::Average;
  if (text == "complete") return Linkage::Complete;
  if (text == "single") return Linkage::Single;
  return std::nullopt;
}

Dendrogram::Dendrogram(std::size_t n_leaves, std::vector<Merge> merges)
    : n_leaves_(n_leaves), merges_(std::move(merges)) {
  if (n_leaves_ == 0) throw Error(ErrorCode::Domain, "dendrogram needs leaves");
  if (merges_.size() != n_leaves_ - 1) {
    throw Error(ErrorCode::Domain, "dendrogram must have n_leaves - 1 merges");
  }
  std::vector<bool> used(2 * n_leaves_ - 1, false);
  for (std::size_t i = 0; i < merges_.size(); ++i) {
    Merge& m = merges_[i];
    m.node = n_leaves_ + i;
    const bool ok = m.left < m.node && m.right < m.node && m.left != m.right &&
                    !used[m.left] && !used[m.right] && std::isfinite(m.height) &&
                    m.height >= 0.0 && (i == 0 || m.height >= merges_[i - 1].height);
    if (!ok) {
      throw Error(ErrorCode::Domain,
                  "invalid dendrogram merge " + std::to_string(i));
    }
    used[m.left] = used[m.right] = true;
  }
}

double Dendrogram::root_height() const noexcept {
  return merges_.empty() ? 0.0 : merges_.back().height;
}

std::vector<std::vector<std::size_t>> Clustering::members() const {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t leaf = 0; leaf < labels.size(); ++leaf) {
    out[labels[leaf]].push_back(leaf);
  }
  return out;
}

Dendrogram build_dendrogram(const DistanceMatrix& m, Linkage linkage) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::Domain, "cannot cluster zero flights");

  // Working matrix over slots; slot s holds the cluster with node id node[s].
  std::vector<double> d(m.values().begin(), m.values().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * n + j]; };
  std::vector<std::size_t> node(n);
  std::iota(node.begin(), node.end(), std::size_t{0});
  std::vector<std::size_t> members(n, 1);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  std::vector<Merge> merges;
  merges.reserve(n - 1);
  while (active.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    bool found = false;
    for (std::size_t x = 0; x < active.size(); ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        const std::size_t i = active[x], j = active[y];
        const double v = at(i, j);
        const std::pair<std::size_t, std::size_t> key{std::min(node[i], node[j]),
                                                     std::max(node[i], node[j])};
        if (!found || v < best || (v == best && key < best_key)) {
          best = v;
          best_key = key;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }

    const std::size_t new_node = n + merges.size();
    merges.push_back({best_key.first, best_key.second, best, new_node});

    // Merged cluster takes slot bi; slot bj retires.
    for (std::size_t k : active) {
      if (k == bi || k == bj) continue;
      const double dik = at(bi, k);
      const double djk = at(bj, k);
      double v = 0.0;
      switch (linkage) {
        case Linkage::Average: {
          const double ni = static_cast<double>(members[bi]);
          const double nj = static_cast<double>(members[bj]);
          v = (ni * dik + nj * djk) / (ni + nj);
          // A weighted mean lies in [min, max]; keep rounding from leaving it.
          v = std::clamp(v, std::min(dik, djk), std::max(dik, djk));
          break;
        }
        case Linkage::Complete: v = std::max(dik, djk); break;
        case Linkage::Single: v = std::min(dik, djk); break;
      }
      at(bi, k) = at(k, bi) = v;
    }
    members[bi] += members[bj];
    node[bi] = new_node;
    active.erase(std::find(active.begin(), active.end(), bj));
  }
  return Dendrogram(n, std::move(merges));
}

Clustering apply_merges(const Dendrogram& d, std::size_t merge_count) {
  const std::size_t n = d.n_leaves();
  merge_count = std::min(merge_count, d.merges().size());

  // Union-find over node ids.
  std::vector<std::size_t> parent(n + merge_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < merge_count; ++i) {
    const Merge& m = d.merges()[i];
    parent[find(m.left)] = m.node;
    parent[find(m.right)] = m.node;
  }

  Clustering c;
  c.labels.resize(n);
  std::vector<std::size_t> index_of_root(n + merge_count,
                                         std::numeric_limits<std::size_t>::max());
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    std::size_t& idx = index_of_root[find(leaf)];
    if (idx == std::numeric_limits<std::size_t>::max()) idx = c.k++;
    c.labels[leaf] = idx;
  }
  return c;
}

Clustering cut_threshold(const Dendrogram& d, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::Domain, "threshold must be non-negative");
  }
  std::size_t applied = 0;
  while (applied < d.merges().size() && d.merges()[applied].height < t) ++applied;
  Clustering c = apply_merges(d, applied);
  c.source = {CutSource::Kind::Threshold, t, 0};
  return c;
}

Clustering cut_k(const Dendrogram& d, std::size_t k) {
  if (k < 1 || k > d.n_leaves()) {
    throw Error(ErrorCode::Domain, "cluster count " + std::to_string(k) +
                                       " outside [1, " +
                                       std::to_string(d.n_leaves()) + "]");
  }
  Clustering c = apply_merges(d, d.n_leaves() - k);
  c.source = {CutSource::Kind::KCut, 0.0, k};
  return c;
}

}  // namespace flightclust
