#include "flightclust/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "flightclust/error.hpp"

namespace flightclust {

std::string_view to_string(MetricKind kind) noexcept {
  return kind == MetricKind::Geographic ? "geo" : "cosine";
}

std::optional<MetricKind> parse_metric(std::string_view text) noexcept {
  if (text == "geo" || text == "geographic") return MetricKind::Geographic;
  if (text == "cosine") return MetricKind::Cosine;
  return std::nullopt;
}

double metric_upper_bound(MetricKind kind) noexcept {
  return kind == MetricKind::Geographic ? std::numbers::pi * kEarthRadiusNm : 2.0;
}

std::vector<DirectionVector> direction_vectors(std::span<const GeoPoint> points) {
  std::vector<DirectionVector> out;
  if (points.size() < 2) return out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    out.push_back({points[i + 1].lat - points[i].lat,
                   points[i + 1].lon - points[i].lon});
  }
  return out;
}

double mean_gcd_nm(std::span<const GeoPoint> a, std::span<const GeoPoint> b) {
  const auto idx = pair_indices(a.size(), b.size());
  double sum = 0.0;
  for (const auto& [i, j] : idx) sum += great_circle_nm(a[i], b[j]);
  return sum / static_cast<double>(idx.size());
}

double cosine_distance_vectors(std::span<const DirectionVector> a,
                               std::span<const DirectionVector> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::InsufficientPoints,
                "cosine distance needs at least one direction vector per track");
  }
  double sum = 0.0;
  std::size_t counted = 0;
  for (const auto& [i, j] : pair_indices(a.size(), b.size())) {
    const DirectionVector& u = a[i];
    const DirectionVector& v = b[j];
    const double uu = u.dlat * u.dlat + u.dlon * u.dlon;
    const double vv = v.dlat * v.dlat + v.dlon * v.dlon;
    if (uu == 0.0 && vv == 0.0) {
      sum += 1.0;
    } else if (uu == 0.0 || vv == 0.0) {
      continue;
    } else {
      const double dot = u.dlat * v.dlat + u.dlon * v.dlon;
      sum += std::clamp(dot / std::sqrt(uu * vv), -1.0, 1.0);
    }
    ++counted;
  }
  if (counted == 0) {
    throw Error(ErrorCode::DegenerateTrack,
                "every direction-vector pair has exactly one zero vector");
  }
  const double similarity = sum / static_cast<double>(counted);
  return std::clamp(1.0 - similarity, 0.0, 2.0);
}

double geo_distance(const FlightTrack& a, const FlightTrack& b,
                    ExtractionFactor n) {
  const auto pa = a.positions();
  const auto pb = b.positions();
  return mean_gcd_nm(extract<GeoPoint>(pa, n), extract<GeoPoint>(pb, n));
}

namespace {

std::vector<DirectionVector> extracted_vectors(const FlightTrack& t,
                                               ExtractionFactor n) {
  const auto pos = t.positions();
  const auto kept = extract<GeoPoint>(pos, n);
  if (kept.size() < 2) {
    throw Error(ErrorCode::InsufficientPoints,
                "flight " + t.flight_id() +
                    " has fewer than 2 points after extraction");
  }
  return direction_vectors(kept);
}

}  // namespace

double cosine_distance(const FlightTrack& a, const FlightTrack& b,
                       ExtractionFactor n) {
  const auto va = extracted_vectors(a, n);
  const auto vb = extracted_vectors(b, n);
  try {
    return cosine_distance_vectors(va, vb);
  } catch (const Error& e) {
    throw Error(e.code(), "flights " + a.flight_id() + ", " + b.flight_id() +
                              ": " + e.what());
  }
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               MetricKind metric, ExtractionFactor extraction)
    : labels_(std::move(labels)),
      metric_(metric),
      extraction_(extraction),
      d_(labels_.size() * labels_.size(), 0.0) {}

DistanceMatrix DistanceMatrix::from_values(std::vector<std::string> labels,
                                           std::span<const double> values,
                                           MetricKind metric,
                                           ExtractionFactor extraction) {
  const std::size_t n = labels.size();
  if (values.size() != n * n) {
    throw Error(ErrorCode::Domain, "distance matrix size does not match labels");
  }
  DistanceMatrix m(std::move(labels), metric, extraction);
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i * n + i] != 0.0) {
      throw Error(ErrorCode::Domain, "distance matrix diagonal must be zero");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = values[i * n + j];
      if (v != values[j * n + i] || !std::isfinite(v) || v < 0.0) {
        throw Error(ErrorCode::Domain,
                    "distance matrix must be symmetric, finite and non-negative");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

DistanceMatrix build_matrix(std::span<const FlightTrack> flights,
                            MetricKind metric, ExtractionFactor n,
                            unsigned workers) {
  if (flights.empty()) {
    throw Error(ErrorCode::Domain, "build_matrix needs at least one flight");
  }
  std::vector<std::string> labels;
  labels.reserve(flights.size());
  for (const auto& f : flights) labels.push_back(f.flight_id());
  DistanceMatrix m(std::move(labels), metric, n);

  // Extraction and vector construction happen once per flight; this also
  // surfaces per-flight precondition failures before any pair is computed.
  std::vector<std::vector<GeoPoint>> points;
  std::vector<std::vector<DirectionVector>> vectors;
  for (const auto& f : flights) {
    if (metric == MetricKind::Geographic) {
      const auto pos = f.positions();
      points.push_back(extract<GeoPoint>(pos, n));
    } else {
      vectors.push_back(extracted_vectors(f, n));
    }
  }

  const std::size_t count = flights.size();
  auto entry = [&](std::size_t i, std::size_t j) {
    if (metric == MetricKind::Geographic) return mean_gcd_nm(points[i], points[j]);
    try {
      return cosine_distance_vectors(vectors[i], vectors[j]);
    } catch (const Error& e) {
      throw Error(e.code(), "flights " + flights[i].flight_id() + ", " +
                                flights[j].flight_id() + ": " + e.what());
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  // Rows are handed out dynamically; every (i, j) cell is written by exactly
  // one worker.
  std::atomic<std::size_t> next_row{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next_row++; i < count; i = next_row++) {
      try {
        for (std::size_t j = i + 1; j < count; ++j) m.set(i, j, entry(i, j));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_row = count;
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

}  // namespace flightclust
