#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flightclust/geo.hpp"
#include "flightclust/sampling.hpp"
#include "flightclust/track_model.hpp"

namespace flightclust {

/// Flight-to-flight distance model. Geographic distances are nautical miles
/// in [0, pi*R]; cosine distances are unitless in [0, 2].
enum class MetricKind { Geographic, Cosine };

std::string_view to_string(MetricKind kind) noexcept;
/// Accepts "geo", "geographic" and "cosine".
std::optional<MetricKind> parse_metric(std::string_view text) noexcept;
/// Largest distance the metric can produce.
double metric_upper_bound(MetricKind kind) noexcept;

/// Consecutive-fix difference (dlat, dlon) in raw degree space.
struct DirectionVector {
  double dlat = 0.0;
  double dlon = 0.0;
};

std::vector<DirectionVector> direction_vectors(std::span<const GeoPoint> points);

/// Mean great-circle distance over paired, already extracted positions.
double mean_gcd_nm(std::span<const GeoPoint> a, std::span<const GeoPoint> b);

/// 1 - mean cosine similarity over paired direction vectors. When both paired
/// vectors are zero the pair scores 1; when exactly one is zero the pair is
/// skipped. Throws Error(DegenerateTrack) when every pair is skipped and
/// Error(InsufficientPoints) when either sequence is empty.
double cosine_distance_vectors(std::span<const DirectionVector> a,
                               std::span<const DirectionVector> b);

/// Geographic model: extract, pair, average great-circle distance.
double geo_distance(const FlightTrack& a, const FlightTrack& b,
                    ExtractionFactor n);

/// Cosine model: extract, build direction vectors, pair, 1 - mean cosine.
/// Throws Error(InsufficientPoints) if either track keeps fewer than 2 points.
double cosine_distance(const FlightTrack& a, const FlightTrack& b,
                       ExtractionFactor n);

/// Dense symmetric matrix with zero diagonal, labelled by flight_id.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, MetricKind metric,
                 ExtractionFactor extraction);

  /// Builds from a row-major n*n array, checking symmetry, zero diagonal and
  /// finite non-negative entries. Throws Error(Domain) otherwise.
  static DistanceMatrix from_values(std::vector<std::string> labels,
                                    std::span<const double> values,
                                    MetricKind metric = MetricKind::Geographic,
                                    ExtractionFactor extraction = ExtractionFactor{1});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  MetricKind metric() const noexcept { return metric_; }
  ExtractionFactor extraction() const noexcept { return extraction_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return d_[i * labels_.size() + j];
  }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value) noexcept {
    d_[i * labels_.size() + j] = value;
    d_[j * labels_.size() + i] = value;
  }

  std::span<const double> values() const noexcept { return d_; }

 private:
  std::vector<std::string> labels_;
  MetricKind metric_;
  ExtractionFactor extraction_;
  std::vector<double> d_;
};

/// Pairwise distance matrix over `flights` (labels keep input order).
/// `workers` = 0 uses the hardware concurrency. Each entry depends only on its
/// two tracks, so the result is bit-identical for any worker count.
DistanceMatrix build_matrix(std::span<const FlightTrack> flights,
                            MetricKind metric, ExtractionFactor n,
                            unsigned workers = 0);

}  // namespace flightclust
