#include <algorithm>

#include "unimod/decompose.hpp"

namespace unimod {

namespace {

struct StartResult {
  std::vector<std::vector<VertexId>> cycles;
  bool truncated = false;
};

// Chordless cycles whose smallest vertex is `s`, in lexicographic order.
class InducedSearch {
 public:
  InducedSearch(const Graph& g, VertexId s, std::size_t cap)
      : g_(g), s_(s), cap_(cap), cnt_(g.vertex_count(), 0), on_path_(g.vertex_count(), 0),
        adj_s_(g.vertex_count(), 0) {
    for (const auto& inc : g.neighbors(s)) adj_s_[inc.neighbor] = 1;
  }

  StartResult run() {
    path_.push_back(s_);
    on_path_[s_] = 1;
    for (const auto& inc : g_.neighbors(s_)) {
      if (inc.neighbor <= s_) continue;
      push(inc.neighbor);
      extend();
      pop();
      if (out_.truncated) break;
    }
    return std::move(out_);
  }

 private:
  void push(VertexId x) {
    path_.push_back(x);
    on_path_[x] = 1;
    for (const auto& inc : g_.neighbors(x)) ++cnt_[inc.neighbor];
  }

  void pop() {
    const VertexId x = path_.back();
    path_.pop_back();
    on_path_[x] = 0;
    for (const auto& inc : g_.neighbors(x)) --cnt_[inc.neighbor];
  }

  void extend() {
    const VertexId last = path_.back();
    for (const auto& inc : g_.neighbors(last)) {
      const VertexId x = inc.neighbor;
      if (x <= s_ || on_path_[x] || cnt_[x] != 1) continue;  // chord to an earlier path vertex
      if (adj_s_[x]) {
        // x closes the cycle s, p1, ..., last, x.
        if ((path_.size() + 1) % 2 == 1 && path_[1] < x) {
          if (out_.cycles.size() == cap_) {
            out_.truncated = true;
            return;
          }
          std::vector<VertexId> cycle(path_);
          cycle.push_back(x);
          out_.cycles.push_back(std::move(cycle));
        }
        continue;
      }
      push(x);
      extend();
      pop();
      if (out_.truncated) return;
    }
  }

  const Graph& g_;
  VertexId s_;
  std::size_t cap_;
  std::vector<std::size_t> cnt_;  // number of path vertices (excluding s) adjacent to v
  std::vector<std::uint8_t> on_path_;
  std::vector<std::uint8_t> adj_s_;
  std::vector<VertexId> path_;
  StartResult out_;
};

// All simple cycles with smallest vertex s and length <= max_length.
class SimpleSearch {
 public:
  SimpleSearch(const Graph& g, VertexId s, std::size_t max_length, std::size_t cap)
      : g_(g), s_(s), max_length_(max_length), cap_(cap), on_path_(g.vertex_count(), 0) {}

  StartResult run() {
    path_.push_back(s_);
    on_path_[s_] = 1;
    extend();
    return std::move(out_);
  }

 private:
  void extend() {
    const VertexId last = path_.back();
    for (const auto& inc : g_.neighbors(last)) {
      const VertexId x = inc.neighbor;
      if (x == s_) {
        if (path_.size() >= 3 && path_[1] < last) {
          if (out_.cycles.size() == cap_) {
            out_.truncated = true;
            return;
          }
          out_.cycles.push_back(path_);
        }
        continue;
      }
      if (x < s_ || on_path_[x]) continue;
      if (path_.size() == max_length_) {
        // A longer cycle through this extension cannot be ruled out cheaply.
        out_.truncated = true;
        continue;
      }
      path_.push_back(x);
      on_path_[x] = 1;
      extend();
      on_path_[x] = 0;
      path_.pop_back();
      if (out_.truncated && out_.cycles.size() == cap_) return;
    }
  }

  const Graph& g_;
  VertexId s_;
  std::size_t max_length_;
  std::size_t cap_;
  std::vector<std::uint8_t> on_path_;
  std::vector<VertexId> path_;
  StartResult out_;
};

CycleEnumeration merge(const Graph& g, std::vector<StartResult>& parts, std::size_t cap) {
  CycleEnumeration out;
  for (auto& part : parts) {
    out.truncated = out.truncated || part.truncated;
    for (auto& cycle : part.cycles) {
      if (out.cycles.size() == cap) {
        out.truncated = true;
        break;
      }
      out.cycles.push_back(CycleWitness::from_vertices(g, std::move(cycle)));
    }
  }
  return out;
}

}  // namespace

CycleEnumeration enumerate_induced_odd_cycles_serial(const Graph& g, std::size_t cap) {
  CycleEnumeration out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    StartResult part = InducedSearch(g, s, cap - out.cycles.size()).run();
    for (auto& cycle : part.cycles) out.cycles.push_back(CycleWitness::from_vertices(g, std::move(cycle)));
    if (part.truncated) {
      out.truncated = true;
      break;
    }
  }
  return out;
}

CycleEnumeration enumerate_induced_odd_cycles(const Graph& g, std::size_t cap) {
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  std::vector<StartResult> parts(g.vertex_count());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    parts[s] = InducedSearch(g, static_cast<VertexId>(s), cap).run();
  }
  return merge(g, parts, cap);
}

CycleEnumeration enumerate_simple_cycles(const Graph& g, std::size_t max_length, std::size_t cap) {
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  std::vector<StartResult> parts(g.vertex_count());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    parts[s] = SimpleSearch(g, static_cast<VertexId>(s), max_length, cap).run();
  }
  return merge(g, parts, cap);
}

}  // namespace unimod
