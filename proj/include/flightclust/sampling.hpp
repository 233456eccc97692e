#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "flightclust/geo.hpp"

namespace flightclust {

/// Keep-one-in-N point extraction factor. N = 1 keeps every point.
class ExtractionFactor {
 public:
  /// Throws Error(Domain) when n == 0.
  explicit ExtractionFactor(std::size_t n = 1);

  std::size_t value() const noexcept { return n_; }

  friend bool operator==(ExtractionFactor, ExtractionFactor) = default;

 private:
  std::size_t n_;
};

/// Indices kept by extraction: every i with i % n == 0, plus the last index.
std::vector<std::size_t> extraction_indices(std::size_t length,
                                            ExtractionFactor n);

/// Every-Nth downsampling that always retains the final element. Throws
/// Error(Domain) on empty input.
template <class T>
std::vector<T> extract(std::span<const T> items, ExtractionFactor n) {
  std::vector<T> out;
  const auto idx = extraction_indices(items.size(), n);
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(items[i]);
  return out;
}

/// Index-proportional pairing of two sequences. With k = min(len_a, len_b),
/// pair i is (floor(i * len_a / k), floor(i * len_b / k)). Equal lengths give
/// exact index-by-index pairing. Throws Error(Domain) if either is empty.
std::vector<std::pair<std::size_t, std::size_t>> pair_indices(std::size_t len_a,
                                                              std::size_t len_b);

struct PairedSequence {
  std::vector<std::pair<GeoPoint, GeoPoint>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
};

PairedSequence pair_tracks(std::span<const GeoPoint> a,
                           std::span<const GeoPoint> b);

}  // namespace flightclust
