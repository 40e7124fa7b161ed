#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "unimod/toric.hpp"

namespace unimod {

namespace {

using Vec = std::vector<int>;

// Depth-first search over the box [-bound, bound]^m, edge by edge, keeping
// each vertex's running balance reachable by its unassigned edges.
class BoxSearch {
 public:
  BoxSearch(const Graph& g, int bound) : g_(g), bound_(bound), balance_(g.vertex_count(), 0),
                                         remaining_(g.vertex_count(), 0), u_(g.edge_count(), 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) remaining_[v] = g.degree(v);
  }

  // Fixes the first prefix.size() coordinates; returns false if infeasible.
  bool assign_prefix(const Vec& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      if (!place(e, prefix[e])) return false;
    }
    depth_ = prefix.size();
    return true;
  }

  void run(std::vector<Vec>& out) { descend(depth_, out); }

 private:
  bool feasible(VertexId v) const {
    return std::abs(balance_[v]) <= bound_ * remaining_[v];
  }

  bool place(EdgeId e, int x) {
    const Edge& ed = g_.edge(e);
    u_[e] = x;
    balance_[ed.u] += x;
    balance_[ed.v] += x;
    --remaining_[ed.u];
    --remaining_[ed.v];
    return feasible(ed.u) && feasible(ed.v);
  }

  void unplace(EdgeId e) {
    const Edge& ed = g_.edge(e);
    balance_[ed.u] -= u_[e];
    balance_[ed.v] -= u_[e];
    ++remaining_[ed.u];
    ++remaining_[ed.v];
    u_[e] = 0;
  }

  void descend(std::size_t e, std::vector<Vec>& out) {
    if (e == g_.edge_count()) {
      if (std::any_of(u_.begin(), u_.end(), [](int x) { return x != 0; })) out.push_back(u_);
      return;
    }
    for (int x = -bound_; x <= bound_; ++x) {
      if (place(e, x)) descend(e + 1, out);
      unplace(e);
    }
  }

  const Graph& g_;
  int bound_;
  std::vector<int> balance_;
  std::vector<int> remaining_;
  Vec u_;
  std::size_t depth_ = 0;
};

bool conformally_below(const Vec& v, const Vec& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) continue;
    if ((v[i] > 0) != (u[i] > 0) || u[i] == 0 || std::abs(v[i]) > std::abs(u[i])) return false;
  }
  return true;
}

int l1(const Vec& u) {
  int s = 0;
  for (int x : u) s += std::abs(x);
  return s;
}

BasisSet finish(std::vector<Vec> kernel, int bound, const OracleOptions& options) {
  std::stable_sort(kernel.begin(), kernel.end(), [](const Vec& a, const Vec& b) { return l1(a) < l1(b); });
  BasisSet out;
  out.kind = BasisKind::Graver;
  out.degree_cap = static_cast<std::size_t>(bound);
  out.complete = options.bound_certified;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const int norm = l1(kernel[i]);
    bool minimal = true;
    for (std::size_t j = 0; j < i && l1(kernel[j]) < norm; ++j) {
      if (conformally_below(kernel[j], kernel[i])) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<std::int64_t> wide(kernel[i].begin(), kernel[i].end());
    out.elements.push_back(Binomial::from_vector(std::span<const std::int64_t>(wide)).canonical());
  }
  std::sort(out.elements.begin(), out.elements.end(), canonical_less);
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

void check_limits(const Graph& g, int bound, const OracleOptions& options) {
  if (bound < 1) throw std::invalid_argument("coordinate bound must be at least 1");
  const double space = std::pow(2.0 * bound + 1.0, static_cast<double>(g.edge_count()));
  if (space > options.search_limit) {
    throw OracleLimitExceeded("kernel search space (2*" + std::to_string(bound) + "+1)^" +
                              std::to_string(g.edge_count()) + " exceeds the configured limit");
  }
}

}  // namespace

BasisSet kernel_oracle_graver_serial(const Graph& g, int coord_bound, const OracleOptions& options) {
  check_limits(g, coord_bound, options);
  std::vector<Vec> kernel;
  BoxSearch search(g, coord_bound);
  search.run(kernel);
  return finish(std::move(kernel), coord_bound, options);
}

BasisSet kernel_oracle_graver(const Graph& g, int coord_bound, const OracleOptions& options) {
  check_limits(g, coord_bound, options);
  const std::size_t m = g.edge_count();
  const std::size_t depth = std::min<std::size_t>(m, 3);
  const int width = 2 * coord_bound + 1;
  std::size_t prefixes = 1;
  for (std::size_t i = 0; i < depth; ++i) prefixes *= static_cast<std::size_t>(width);

  std::vector<std::vector<Vec>> parts(prefixes);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(prefixes); ++p) {
    Vec prefix(depth);
    std::size_t code = static_cast<std::size_t>(p);
    for (std::size_t i = depth; i-- > 0;) {
      prefix[i] = static_cast<int>(code % width) - coord_bound;
      code /= width;
    }
    BoxSearch search(g, coord_bound);
    if (search.assign_prefix(prefix)) search.run(parts[p]);
  }
  std::vector<Vec> kernel;
  for (auto& part : parts) {
    for (auto& u : part) kernel.push_back(std::move(u));
  }
  return finish(std::move(kernel), coord_bound, options);
}

}  // namespace unimod
