#include "flightclust/sampling.hpp"

#include <algorithm>

#include "flightclust/error.hpp"

namespace flightclust {

ExtractionFactor::ExtractionFactor(std::size_t n) : n_(n) {
  if (n_ == 0) {
    throw Error(ErrorCode::Domain, "extraction factor must be >= 1");
  }
}

std::vector<std::size_t> extraction_indices(std::size_t length,
                                            ExtractionFactor n) {
  if (length == 0) {
    throw Error(ErrorCode::Domain, "cannot extract from an empty sequence");
  }
  std::vector<std::size_t> idx;
  idx.reserve(length / n.value() + 2);
  for (std::size_t i = 0; i < length; i += n.value()) idx.push_back(i);
  if (idx.back() != length - 1) idx.push_back(length - 1);
  return idx;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_indices(std::size_t len_a,
                                                              std::size_t len_b) {
  if (len_a == 0 || len_b == 0) {
    throw Error(ErrorCode::Domain, "cannot pair an empty sequence");
  }
  const std::size_t k = std::min(len_a, len_b);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.emplace_back(i * len_a / k, i * len_b / k);
  }
  return out;
}

PairedSequence pair_tracks(std::span<const GeoPoint> a,
                           std::span<const GeoPoint> b) {
  PairedSequence seq;
  const auto idx = pair_indices(a.size(), b.size());
  seq.pairs.reserve(idx.size());
  for (const auto& [i, j] : idx) seq.pairs.emplace_back(a[i], b[j]);
  return seq;
}

}  // namespace flightclust
