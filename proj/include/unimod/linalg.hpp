#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "unimod/bigint.hpp"
#include "unimod/graph.hpp"

namespace unimod {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit IntMatrix(const IncidenceMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  IntMatrix columns(std::span<const std::size_t> cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix. Runs on checked
/// 64-bit arithmetic and restarts on arbitrary precision after an overflow.
BigInt determinant(const IntMatrix& square);

/// Rank over the rationals by fraction-free elimination.
std::size_t exact_rank(const IntMatrix& m);
std::size_t exact_rank(const IncidenceMatrix& m);

/// Saturating binomial coefficient.
std::uint64_t choose(std::size_t n, std::size_t k);

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 50'000'000;

struct MinorReport {
  std::size_t rank = 0;
  std::set<BigInt> distinct_abs_values;  // nonzero |minor| values seen
  std::uint64_t minors_evaluated = 0;
  std::uint64_t minors_total = 0;        // C(n,d) * C(m,d), saturating
  bool sampled = false;
};

struct ScanOptions {
  std::optional<std::uint64_t> sample_limit;  // sample when the total exceeds this
  std::uint64_t seed = 0;
};

/// Every d x d minor (d = rank), or a uniform sample of them when the total
/// count exceeds sample_limit.
MinorReport minor_scan(const IncidenceMatrix& m, const ScanOptions& options = {});
/// Single-threaded reference for minor_scan.
MinorReport minor_scan_serial(const IncidenceMatrix& m, const ScanOptions& options = {});

class ExhaustiveRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All nonzero maximal minors share one absolute value. Throws
/// ExhaustiveRequired when the exhaustive scan would exceed `limit` minors.
bool is_unimodular_matrix(const IncidenceMatrix& m, std::uint64_t limit = kDefaultExhaustiveLimit);
/// Verdict from an existing report; a sampled report can only refute.
bool is_unimodular_report(const MinorReport& report);

/// Every k x k minor, k <= max_order, lies in {-1, 0, 1}.
/// Orders above min(n, m) are vacuous. Throws SizeLimitExceeded when the
/// submatrix count exceeds `limit`.
bool is_totally_unimodular_bruteforce(const IncidenceMatrix& m, std::size_t max_order,
                                      std::uint64_t limit = kDefaultExhaustiveLimit);

}  // namespace unimod
