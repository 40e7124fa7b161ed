#include <atomic>
#include <numeric>
#include <random>

#include <omp.h>

#include "detail/bareiss.hpp"
#include "unimod/linalg.hpp"

namespace unimod {

namespace detail {

std::vector<std::size_t> unrank_colex(std::uint64_t rank, std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = k; i >= 1; --i) {
    std::size_t x = i - 1;
    while (choose(x + 1, i) <= rank) ++x;
    c[i - 1] = x;
    rank -= choose(x, i);
  }
  return c;
}

}  // namespace detail

namespace {

using detail::next_combination_colex;

class MinorEvaluator {
 public:
  MinorEvaluator(const IntMatrix& a, std::size_t k) : a_(a), k_(k), buf_(k * k) {}

  BigInt abs_det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) buf_[i * k_ + j] = a_(rows[i], cols[j]);
    }
    BigInt d = detail::minor_det(buf_, k_, scratch_);
    return d < 0 ? BigInt(-d) : d;
  }

 private:
  const IntMatrix& a_;
  std::size_t k_;
  std::vector<std::int64_t> buf_;
  std::vector<std::int64_t> scratch_;
};

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

// Evaluates `count` consecutive column subsets starting at `cols`, each
// against every row subset.
void scan_column_range(const IntMatrix& a, std::size_t k, std::vector<std::size_t> cols,
                       std::uint64_t count, std::set<BigInt>& values, std::uint64_t& evaluated) {
  MinorEvaluator eval(a, k);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto rows = first_combination(k);
    do {
      BigInt v = eval.abs_det(rows, cols);
      ++evaluated;
      if (v != 0) values.insert(std::move(v));
    } while (next_combination_colex(rows, a.rows()));
    if (!next_combination_colex(cols, a.cols())) break;
  }
}

struct Sample {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::vector<Sample> draw_samples(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k,
                                 std::size_t count) {
  std::vector<std::size_t> all_rows(n);
  std::vector<std::size_t> all_cols(m);
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
  std::vector<Sample> out(count);
  for (auto& s : out) {
    std::sample(all_rows.begin(), all_rows.end(), std::back_inserter(s.rows), k, rng);
    std::sample(all_cols.begin(), all_cols.end(), std::back_inserter(s.cols), k, rng);
  }
  return out;
}

constexpr std::size_t kSampleBatch = 4096;

MinorReport prepare(const IntMatrix& a, const ScanOptions& options, bool& exhaustive) {
  MinorReport report;
  report.rank = exact_rank(a);
  const std::uint64_t col_sets = choose(a.cols(), report.rank);
  const std::uint64_t row_sets = choose(a.rows(), report.rank);
  const unsigned __int128 total = static_cast<unsigned __int128>(col_sets) * row_sets;
  report.minors_total = total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
  exhaustive = !options.sample_limit || report.minors_total <= *options.sample_limit;
  report.sampled = !exhaustive;
  return report;
}

MinorReport scan(const IncidenceMatrix& m, const ScanOptions& options, bool parallel) {
  const IntMatrix a(m);
  bool exhaustive = true;
  MinorReport report = prepare(a, options, exhaustive);
  const std::size_t d = report.rank;
  if (d == 0) {
    // The empty minor.
    report.distinct_abs_values.insert(BigInt(1));
    report.minors_evaluated = 1;
    return report;
  }

  if (exhaustive) {
    const std::uint64_t col_sets = choose(a.cols(), d);
    if (!parallel) {
      scan_column_range(a, d, first_combination(d), col_sets, report.distinct_abs_values,
                        report.minors_evaluated);
      return report;
    }
#pragma omp parallel
    {
      const auto threads = static_cast<unsigned __int128>(omp_get_num_threads());
      const auto t = static_cast<unsigned __int128>(omp_get_thread_num());
      const auto begin = static_cast<std::uint64_t>(col_sets * t / threads);
      const auto end = static_cast<std::uint64_t>(col_sets * (t + 1) / threads);
      std::set<BigInt> local;
      std::uint64_t evaluated = 0;
      if (begin < end) scan_column_range(a, d, detail::unrank_colex(begin, d), end - begin, local, evaluated);
#pragma omp critical
      {
        report.distinct_abs_values.merge(local);
        report.minors_evaluated += evaluated;
      }
    }
    return report;
  }

  std::mt19937_64 rng(options.seed);
  std::uint64_t remaining = *options.sample_limit;
  while (remaining > 0) {
    const std::size_t batch = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kSampleBatch));
    remaining -= batch;
    const auto samples = draw_samples(rng, a.rows(), a.cols(), d, batch);
    if (!parallel) {
      MinorEvaluator eval(a, d);
      for (const auto& s : samples) {
        BigInt v = eval.abs_det(s.rows, s.cols);
        if (v != 0) report.distinct_abs_values.insert(std::move(v));
      }
    } else {
#pragma omp parallel
      {
        MinorEvaluator eval(a, d);
        std::set<BigInt> local;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples.size()); ++i) {
          BigInt v = eval.abs_det(samples[i].rows, samples[i].cols);
          if (v != 0) local.insert(std::move(v));
        }
#pragma omp critical
        report.distinct_abs_values.merge(local);
      }
    }
    report.minors_evaluated += batch;
  }
  return report;
}

}  // namespace

MinorReport minor_scan(const IncidenceMatrix& m, const ScanOptions& options) {
  return scan(m, options, true);
}

MinorReport minor_scan_serial(const IncidenceMatrix& m, const ScanOptions& options) {
  return scan(m, options, false);
}

bool is_unimodular_report(const MinorReport& report) {
  if (report.distinct_abs_values.size() > 1) return false;
  if (report.sampled) {
    throw ExhaustiveRequired("EXHAUSTIVE_REQUIRED: a sampled minor scan can only refute unimodularity");
  }
  return report.distinct_abs_values.size() == 1;
}

bool is_unimodular_matrix(const IncidenceMatrix& m, std::uint64_t limit) {
  const IntMatrix a(m);
  const std::size_t d = exact_rank(a);
  const unsigned __int128 total =
      static_cast<unsigned __int128>(choose(a.cols(), d)) * choose(a.rows(), d);
  if (total > limit) {
    throw ExhaustiveRequired("EXHAUSTIVE_REQUIRED: " + std::to_string(static_cast<std::uint64_t>(
                                 total > UINT64_MAX ? UINT64_MAX : total)) +
                             " maximal minors exceed the limit of " + std::to_string(limit));
  }
  return is_unimodular_report(minor_scan(m));
}

bool is_totally_unimodular_bruteforce(const IncidenceMatrix& m, std::size_t max_order,
                                      std::uint64_t limit) {
  const IntMatrix a(m);
  // No k x k submatrix exists beyond min(rows, cols).
  max_order = std::min(max_order, std::min(a.rows(), a.cols()));
  unsigned __int128 total = 0;
  for (std::size_t k = 1; k <= max_order; ++k) {
    total += static_cast<unsigned __int128>(choose(a.rows(), k)) * choose(a.cols(), k);
  }
  if (total > limit) {
    throw SizeLimitExceeded("square submatrix count exceeds the limit of " + std::to_string(limit));
  }

  std::atomic<bool> failed{false};
  for (std::size_t k = 1; k <= max_order && !failed; ++k) {
    const std::uint64_t col_sets = choose(a.cols(), k);
#pragma omp parallel
    {
      const auto threads = static_cast<unsigned __int128>(omp_get_num_threads());
      const auto t = static_cast<unsigned __int128>(omp_get_thread_num());
      const auto begin = static_cast<std::uint64_t>(col_sets * t / threads);
      const auto end = static_cast<std::uint64_t>(col_sets * (t + 1) / threads);
      if (begin < end) {
        MinorEvaluator eval(a, k);
        auto cols = detail::unrank_colex(begin, k);
        for (std::uint64_t i = begin; i < end && !failed.load(std::memory_order_relaxed); ++i) {
          auto rows = first_combination(k);
          do {
            if (eval.abs_det(rows, cols) > 1) {
              failed = true;
              break;
            }
          } while (next_combination_colex(rows, a.rows()));
          next_combination_colex(cols, a.cols());
        }
      }
    }
  }
  return !failed;
}

}  // namespace unimod
