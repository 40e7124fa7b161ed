#include <algorithm>
#include <atomic>
#include <numeric>

#include <boost/integer/common_factor.hpp>

#include "detail/shape.hpp"
#include "unimod/decompose.hpp"
#include "unimod/linalg.hpp"
#include "unimod/toric.hpp"

namespace unimod {

namespace {

std::vector<VertexId> closed_from(std::vector<VertexId> vs, VertexId start) {
  std::rotate(vs.begin(), std::find(vs.begin(), vs.end(), start), vs.end());
  vs.push_back(start);
  return vs;
}

struct OddCycle {
  std::vector<VertexId> vertices;  // without the closing repeat
  VertexMask mask;
};

// Paths leaving cycle i that end on cycle j with interior avoiding both.
class JoiningPaths {
 public:
  JoiningPaths(const Graph& g, const OddCycle& a, const OddCycle& b, std::size_t max_len,
               std::atomic<std::uint64_t>& used, std::uint64_t budget)
      : g_(g), a_(a), b_(b), max_len_(max_len), used_(used), budget_(budget),
        on_path_(g.vertex_count(), 0) {}

  void run() {
    if (max_len_ == 0) {
      truncated = true;
      return;
    }
    for (VertexId s : a_.vertices) {
      path_ = {s};
      on_path_[s] = 1;
      grow();
      on_path_[s] = 0;
      if (stopped_) return;
    }
  }

  std::vector<Binomial> found;
  bool truncated = false;

 private:
  void grow() {
    if (used_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      truncated = stopped_ = true;
      return;
    }
    const VertexId v = path_.back();
    for (const auto& inc : g_.neighbors(v)) {
      const VertexId w = inc.neighbor;
      if (on_path_[w] || a_.mask[w]) continue;
      if (path_.size() > max_len_) {
        truncated = true;
        return;
      }
      if (b_.mask[w]) {
        path_.push_back(w);
        emit();
        path_.pop_back();
        continue;
      }
      path_.push_back(w);
      on_path_[w] = 1;
      grow();
      on_path_[w] = 0;
      path_.pop_back();
      if (stopped_) return;
    }
  }

  void emit() {
    std::vector<VertexId> seq = closed_from(a_.vertices, path_.front());
    seq.insert(seq.end(), path_.begin() + 1, path_.end());
    const auto around = closed_from(b_.vertices, path_.back());
    seq.insert(seq.end(), around.begin() + 1, around.end());
    seq.insert(seq.end(), path_.rbegin() + 1, path_.rend());
    found.push_back(walk_binomial(Walk::from_vertices(g_, std::move(seq))).canonical());
  }

  const Graph& g_;
  const OddCycle& a_;
  const OddCycle& b_;
  std::size_t max_len_;  // edges allowed on the path
  std::atomic<std::uint64_t>& used_;
  std::uint64_t budget_;
  bool stopped_ = false;
  VertexMask on_path_;
  std::vector<VertexId> path_;
};

}  // namespace

BasisSet enumerate_circuits(const Graph& g, const BasisCaps& caps) {
  BasisSet out;
  out.kind = BasisKind::Circuits;
  out.degree_cap = caps.max_subgraph_edges;

  const std::size_t cycle_cap =
      static_cast<std::size_t>(std::min<std::uint64_t>(caps.max_candidates, SIZE_MAX));
  const CycleEnumeration cycles = enumerate_simple_cycles(g, caps.max_subgraph_edges, cycle_cap);
  if (cycles.truncated) out.complete = false;

  std::vector<OddCycle> odd;
  for (const auto& c : cycles.cycles) {
    if (!c.odd) {
      out.elements.push_back(walk_binomial(c.walk).canonical());
      continue;
    }
    OddCycle oc;
    oc.vertices = c.cycle_vertices();
    oc.mask.assign(g.vertex_count(), 0);
    for (VertexId v : oc.vertices) oc.mask[v] = 1;
    odd.push_back(std::move(oc));
  }

  const auto k = static_cast<std::ptrdiff_t>(odd.size());
  std::vector<std::vector<Binomial>> parts(odd.size());
  std::vector<char> truncated(odd.size(), 0);
  std::atomic<std::uint64_t> used{0};

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    for (std::ptrdiff_t j = i + 1; j < k; ++j) {
      const OddCycle& a = odd[i];
      const OddCycle& b = odd[j];
      const std::size_t both = a.vertices.size() + b.vertices.size();
      std::vector<VertexId> shared;
      for (VertexId v : a.vertices) {
        if (b.mask[v]) shared.push_back(v);
      }
      if (shared.size() == 1) {
        if (both > caps.max_subgraph_edges) {
          truncated[i] = 1;
          continue;
        }
        std::vector<VertexId> seq = closed_from(a.vertices, shared[0]);
        const auto around = closed_from(b.vertices, shared[0]);
        seq.insert(seq.end(), around.begin() + 1, around.end());
        parts[i].push_back(walk_binomial(Walk::from_vertices(g, std::move(seq))).canonical());
      } else if (shared.empty()) {
        if (both >= caps.max_subgraph_edges) {
          truncated[i] = 1;
          continue;
        }
        JoiningPaths paths(g, a, b, caps.max_subgraph_edges - both, used, caps.max_candidates);
        paths.run();
        if (paths.truncated) truncated[i] = 1;
        for (auto& x : paths.found) parts[i].push_back(std::move(x));
      }
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (truncated[i]) out.complete = false;
    for (auto& b : parts[i]) out.elements.push_back(std::move(b));
  }
  std::sort(out.elements.begin(), out.elements.end(), canonical_less);
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  if (out.elements.size() > caps.max_elements) {
    out.elements.resize(caps.max_elements);
    out.complete = false;
  }
  return out;
}

BasesVerdict unimodularity_via_bases(const Graph& g, const BasisCaps& caps) {
  const BasisSet circuits = enumerate_circuits(g, caps);
  const BasisSet graver = enumerate_graver(g, caps);
  if (!circuits.complete || !graver.complete) return BasesVerdict::Indeterminate;
  if (circuits.elements != graver.elements) return BasesVerdict::NotUnimodular;
  for (const auto& b : graver.elements) {
    if (!is_square_free(b)) return BasesVerdict::NotUnimodular;
  }
  return BasesVerdict::Unimodular;
}

bool is_circuit(const Graph& g, const Binomial& b) {
  if (!is_homogeneous(g, b)) throw NotHomogeneous("binomial is not in the kernel of the incidence matrix");
  if (b.is_zero()) return false;
  BigInt d = 0;
  for (const auto* side : {&b.plus(), &b.minus()}) {
    for (const auto& [e, x] : *side) d = boost::integer::gcd(d, x);
  }
  if (d != 1) return false;
  const IntMatrix a{IncidenceMatrix(g)};
  const std::vector<EdgeId> supp = b.support();
  for (std::size_t skip = 0; skip < supp.size(); ++skip) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (i != skip) cols.push_back(supp[i]);
    }
    if (exact_rank(a.columns(cols)) != cols.size()) return false;
  }
  return true;
}

std::optional<CircuitForm> circuit_form(const Graph& g, std::span<const EdgeId> edges) {
  const auto shape = detail::analyze_shape(g, edges);
  if (!shape.connected) return std::nullopt;
  const auto& bd = shape.blocks;
  const Graph& w = shape.sub.graph;
  if (bd.blocks.size() == 1) {
    if (shape.is_cycle[0] && bd.blocks[0].size() % 2 == 0) return CircuitForm::EvenCycle;
    return std::nullopt;
  }
  std::size_t cycles = 0;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (shape.is_cycle[b]) {
      if (bd.blocks[b].size() % 2 == 0) return std::nullopt;
      ++cycles;
    } else if (!shape.is_cut_edge[b]) {
      return std::nullopt;
    }
  }
  if (cycles != 2) return std::nullopt;
  std::size_t deg3 = 0;
  std::size_t deg4 = 0;
  for (VertexId v = 0; v < w.vertex_count(); ++v) {
    switch (w.degree(v)) {
      case 2: break;
      case 3: ++deg3; break;
      case 4: ++deg4; break;
      default: return std::nullopt;
    }
  }
  if (bd.blocks.size() == 2 && deg4 == 1 && deg3 == 0) return CircuitForm::OddCyclesSharingVertex;
  if (bd.blocks.size() > 2 && deg4 == 0 && deg3 == 2) return CircuitForm::OddCyclesJoinedByPath;
  return std::nullopt;
}

}  // namespace unimod
