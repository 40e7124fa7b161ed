#include <algorithm>
#include <limits>
#include <optional>

#include "detail/bareiss.hpp"
#include "unimod/linalg.hpp"

namespace unimod {

IntMatrix::IntMatrix(const IncidenceMatrix& m) : IntMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = m.at(r, c);
  }
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

IntMatrix IntMatrix::columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

namespace detail {

std::optional<std::int64_t> bareiss_det_i64(std::int64_t* a, std::size_t k) {
  if (k == 0) return 1;
  std::int64_t prev = 1;
  bool negate = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pivot = i;
    while (pivot < k && a[pivot * k + i] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != i) {
      std::swap_ranges(a + pivot * k, a + pivot * k + k, a + i * k);
      negate = !negate;
    }
    const std::int64_t p = a[i * k + i];
    for (std::size_t r = i + 1; r < k; ++r) {
      const std::int64_t f = a[r * k + i];
      for (std::size_t c = i + 1; c < k; ++c) {
        std::int64_t x;
        std::int64_t y;
        std::int64_t z;
        if (__builtin_mul_overflow(a[r * k + c], p, &x) || __builtin_mul_overflow(f, a[i * k + c], &y) ||
            __builtin_sub_overflow(x, y, &z)) {
          return std::nullopt;
        }
        a[r * k + c] = z / prev;
      }
    }
    prev = p;
  }
  const std::int64_t d = a[(k - 1) * k + (k - 1)];
  return negate ? -d : d;
}

BigInt bareiss_det_big(std::vector<BigInt> a, std::size_t k) {
  if (k == 0) return 1;
  BigInt prev = 1;
  bool negate = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pivot = i;
    while (pivot < k && a[pivot * k + i] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != i) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[pivot * k + c], a[i * k + c]);
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        a[r * k + c] = (a[r * k + c] * a[i * k + i] - a[r * k + i] * a[i * k + c]) / prev;
      }
    }
    prev = a[i * k + i];
  }
  return negate ? BigInt(-a[(k - 1) * k + (k - 1)]) : a[(k - 1) * k + (k - 1)];
}

BigInt minor_det(std::span<const std::int64_t> entries, std::size_t k, std::vector<std::int64_t>& scratch) {
  scratch.assign(entries.begin(), entries.end());
  if (auto d = bareiss_det_i64(scratch.data(), k)) return *d;
  return bareiss_det_big(std::vector<BigInt>(entries.begin(), entries.end()), k);
}

}  // namespace detail

BigInt determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t k = square.rows();
  std::vector<std::int64_t> entries(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) entries[r * k + c] = square(r, c);
  }
  std::vector<std::int64_t> scratch;
  return detail::minor_det(entries, k, scratch);
}

std::size_t exact_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c);
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t cc = 0; cc < cols; ++cc) std::swap(a[pivot * cols + cc], a[rank * cols + cc]);
    }
    const BigInt p = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt f = a[r * cols + c];
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        a[r * cols + cc] = (a[r * cols + cc] * p - f * a[rank * cols + cc]) / prev;
      }
      a[r * cols + c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const IncidenceMatrix& m) { return exact_rank(IntMatrix(m)); }

std::uint64_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace unimod
