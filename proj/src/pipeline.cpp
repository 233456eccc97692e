#include "flightclust/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "flightclust/error.hpp"

namespace flightclust {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   since)
      .count();
}

}  // namespace

void ClusterRequest::validate() const {
  query.validate();
  if (query.origin == query.destination) {
    throw Error(ErrorCode::Validation, "origin and destination must differ",
                "destination");
  }
  switch (mode.kind) {
    case ClusterMode::Kind::Auto:
      if (k_cap && *k_cap < 2) {
        throw Error(ErrorCode::Validation, "k_cap must be >= 2", "k_cap");
      }
      break;
    case ClusterMode::Kind::Threshold: {
      const double upper = metric_upper_bound(metric);
      if (!std::isfinite(mode.threshold) || mode.threshold < 0.0 ||
          mode.threshold > upper) {
        throw Error(ErrorCode::Validation,
                    std::string("threshold must be in [0, ") +
                        (metric == MetricKind::Geographic ? "pi*R] nautical miles"
                                                          : "2] for the cosine metric") +
                        " (unit mismatch with metric '" + std::string(to_string(metric)) +
                        "')",
                    "threshold");
      }
      break;
    }
    case ClusterMode::Kind::K:
      if (mode.k < 1) throw Error(ErrorCode::Validation, "k must be >= 1", "k");
      break;
  }
}

std::string MatrixCache::key_for(const ClusterRequest& r) {
  return r.query.origin + '|' + r.query.destination + '|' +
         format_date(r.query.date_from) + '|' + format_date(r.query.date_to) + '|' +
         std::string(to_string(r.metric)) + '|' + std::to_string(r.extraction_n.value());
}

std::shared_ptr<const DistanceMatrix> MatrixCache::get(const std::string& key) {
  std::lock_guard lock(mutex_);
  const auto it = index_.find(key);
  if (it == index_.end()) return nullptr;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->second;
}

void MatrixCache::put(const std::string& key, std::shared_ptr<const DistanceMatrix> m) {
  if (capacity_ == 0) return;
  std::lock_guard lock(mutex_);
  if (const auto it = index_.find(key); it != index_.end()) {
    it->second->second = std::move(m);
    order_.splice(order_.begin(), order_, it->second);
    return;
  }
  order_.emplace_front(key, std::move(m));
  index_[key] = order_.begin();
  if (order_.size() > capacity_) {
    index_.erase(order_.back().first);
    order_.pop_back();
  }
}

std::size_t MatrixCache::size() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

ClusterOutcome run_cluster(const TrackStore& store, const ClusterRequest& request,
                           MatrixCache* cache, unsigned workers) {
  request.validate();

  ClusterOutcome out;
  out.flights = store.query(request.query);
  if (out.flights.empty()) {
    throw Error(ErrorCode::EmptyResult,
                "no flights matched " + request.query.origin + "-" +
                    request.query.destination + " " + format_date(request.query.date_from) +
                    ".." + format_date(request.query.date_to));
  }
  const std::size_t n = out.flights.size();
  if (request.mode.kind == ClusterMode::Kind::Auto && n < 3) {
    throw Error(ErrorCode::TooFewFlights,
                "automatic cut needs at least 3 flights, query matched " +
                    std::to_string(n));
  }
  if (request.mode.kind == ClusterMode::Kind::K && request.mode.k > n) {
    throw Error(ErrorCode::Validation,
                "k = " + std::to_string(request.mode.k) + " exceeds the " +
                    std::to_string(n) + " matched flights",
                "k");
  }
  out.airport_gcd_nm =
      store.airport_gcd_nm(request.query.origin, request.query.destination);

  auto start = std::chrono::steady_clock::now();
  const std::string key = MatrixCache::key_for(request);
  if (cache) out.matrix = cache->get(key);
  out.timing.matrix_cached = out.matrix != nullptr;
  if (!out.matrix) {
    out.matrix = std::make_shared<const DistanceMatrix>(
        build_matrix(out.flights, request.metric, request.extraction_n, workers));
    if (cache) cache->put(key, out.matrix);
  }
  out.timing.matrix_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  out.dendrogram = build_dendrogram(*out.matrix, request.linkage);
  switch (request.mode.kind) {
    case ClusterMode::Kind::Auto: {
      auto best = auto_cut(*out.matrix, out.dendrogram, request.k_cap);
      out.clustering = std::move(best.clustering);
      out.silhouette = std::move(best.report);
      break;
    }
    case ClusterMode::Kind::Threshold:
      out.clustering = cut_threshold(out.dendrogram, request.mode.threshold);
      break;
    case ClusterMode::Kind::K:
      out.clustering = cut_k(out.dendrogram, request.mode.k);
      break;
  }
  if (!out.silhouette && out.clustering.k >= 2 && out.clustering.k + 1 <= n) {
    out.silhouette = silhouette(*out.matrix, out.clustering);
  }
  out.timing.cluster_ms = elapsed_ms(start);

  out.stats = compute_stats(out.flights, out.clustering, out.airport_gcd_nm);
  return out;
}

}  // namespace flightclust
