#include "flightclust/quality.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "flightclust/error.hpp"

namespace flightclust {

SilhouetteReport silhouette(const DistanceMatrix& m, const Clustering& c) {
  const std::size_t n = m.size();
  if (c.labels.size() != n) {
    throw Error(ErrorCode::Domain, "clustering does not match the matrix size");
  }
  if (c.k < 2 || c.k + 1 > n) {
    throw Error(ErrorCode::UndefinedSilhouette,
                "silhouette is undefined for k = " + std::to_string(c.k) +
                    " with " + std::to_string(n) + " flights");
  }

  std::vector<std::size_t> sizes(c.k, 0);
  for (std::size_t label : c.labels) ++sizes[label];

  SilhouetteReport report;
  report.k = c.k;
  report.values.resize(n, 0.0);
  std::vector<double> sums(c.k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t own = c.labels[i];
    if (sizes[own] == 1) continue;
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sums[c.labels[j]] += m(i, j);
    }
    const double a = sums[own] / static_cast<double>(sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t other = 0; other < c.k; ++other) {
      if (other != own) {
        b = std::min(b, sums[other] / static_cast<double>(sizes[other]));
      }
    }
    const double denom = std::max(a, b);
    report.values[i] = denom > 0.0 ? (b - a) / denom : 0.0;
  }
  double total = 0.0;
  for (double v : report.values) total += v;
  report.score = total / static_cast<double>(n);
  return report;
}

AutoCut auto_cut(const DistanceMatrix& m, const Dendrogram& d,
                 std::optional<std::size_t> k_cap) {
  const std::size_t n = d.n_leaves();
  if (n < 3 || m.size() != n) {
    throw Error(ErrorCode::TooFewFlights,
                "automatic cut needs at least 3 flights, got " + std::to_string(n));
  }
  std::size_t k_max = n - 1;
  if (k_cap) k_max = std::clamp<std::size_t>(*k_cap, 2, n - 1);

  std::optional<AutoCut> best;
  for (std::size_t k = 2; k <= k_max; ++k) {
    Clustering c = cut_k(d, k);
    SilhouetteReport r = silhouette(m, c);
    if (!best || r.score > best->report.score) {
      best = AutoCut{std::move(c), std::move(r)};
    }
  }
  best->clustering.source = {CutSource::Kind::AutoSilhouette, 0.0, best->clustering.k};
  return std::move(*best);
}

}  // namespace flightclust
