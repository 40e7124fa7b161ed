#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unimod/bigint.hpp"

namespace unimod::detail {

// In-place Bareiss on a k x k row-major buffer; nullopt on 64-bit overflow.
std::optional<std::int64_t> bareiss_det_i64(std::int64_t* a, std::size_t k);
BigInt bareiss_det_big(std::vector<BigInt> a, std::size_t k);
// Checked fast path with arbitrary-precision fallback; `scratch` is reused.
BigInt minor_det(std::span<const std::int64_t> entries, std::size_t k, std::vector<std::int64_t>& scratch);

// Next k-subset of {0..n-1} in colexicographic order; false after the last.
inline bool next_combination_colex(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

// The k-subset with the given colex rank.
std::vector<std::size_t> unrank_colex(std::uint64_t rank, std::size_t k);

}  // namespace unimod::detail
