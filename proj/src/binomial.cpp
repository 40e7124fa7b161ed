#include <algorithm>
#include <sstream>

#include "unimod/graph.hpp"

namespace unimod {

int compare_lex(const Monomial& a, const Monomial& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return 1;
    if (ia == a.end() || ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

Binomial Binomial::reduced(Monomial plus, Monomial minus) {
  for (auto it = plus.begin(); it != plus.end();) {
    auto jt = minus.find(it->first);
    if (jt != minus.end()) {
      const BigInt common = std::min(it->second, jt->second);
      it->second -= common;
      jt->second -= common;
      if (jt->second == 0) minus.erase(jt);
    }
    if (it->second == 0) {
      it = plus.erase(it);
    } else {
      ++it;
    }
  }
  std::erase_if(minus, [](const auto& kv) { return kv.second == 0; });
  Binomial b;
  b.plus_ = std::move(plus);
  b.minus_ = std::move(minus);
  return b;
}

Binomial Binomial::from_vector(std::span<const BigInt> u) {
  Binomial b;
  for (EdgeId e = 0; e < u.size(); ++e) {
    if (u[e] > 0) b.plus_.emplace(e, u[e]);
    if (u[e] < 0) b.minus_.emplace(e, -u[e]);
  }
  return b;
}

Binomial Binomial::from_vector(std::span<const std::int64_t> u) {
  Binomial b;
  for (EdgeId e = 0; e < u.size(); ++e) {
    if (u[e] > 0) b.plus_.emplace(e, BigInt(u[e]));
    if (u[e] < 0) b.minus_.emplace(e, BigInt(-u[e]));
  }
  return b;
}

namespace {

BigInt total(const Monomial& m) {
  BigInt s = 0;
  for (const auto& [e, k] : m) s += k;
  return s;
}

}  // namespace

BigInt Binomial::plus_degree() const { return total(plus_); }
BigInt Binomial::minus_degree() const { return total(minus_); }

BigInt Binomial::max_exponent() const {
  BigInt best = 0;
  for (const auto& [e, k] : plus_) best = std::max(best, k);
  for (const auto& [e, k] : minus_) best = std::max(best, k);
  return best;
}

std::vector<EdgeId> Binomial::support() const {
  std::vector<EdgeId> s;
  for (const auto& [e, k] : plus_) s.push_back(e);
  for (const auto& [e, k] : minus_) s.push_back(e);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<BigInt> Binomial::to_vector(std::size_t edge_count) const {
  std::vector<BigInt> u(edge_count, 0);
  for (const auto& [e, k] : plus_) u.at(e) += k;
  for (const auto& [e, k] : minus_) u.at(e) -= k;
  return u;
}

Binomial Binomial::negated() const {
  Binomial b;
  b.plus_ = minus_;
  b.minus_ = plus_;
  return b;
}

Binomial Binomial::canonical() const { return compare_lex(plus_, minus_) >= 0 ? *this : negated(); }

bool canonical_less(const Binomial& a, const Binomial& b) {
  const BigInt da = a.plus_degree() + a.minus_degree();
  const BigInt db = b.plus_degree() + b.minus_degree();
  if (da != db) return da < db;
  if (int c = compare_lex(a.plus(), b.plus()); c != 0) return c > 0;
  return compare_lex(a.minus(), b.minus()) > 0;
}

Binomial walk_binomial(const Walk& w) {
  if (!w.closed()) throw WalkError("walk is not closed");
  if (!w.even()) throw WalkError("walk has odd length");
  Monomial plus;
  Monomial minus;
  const auto edges = w.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    // Position j+1 in 1-based numbering: odd positions go to the plus side.
    auto& side = (j % 2 == 0) ? plus : minus;
    side[edges[j]] += 1;
  }
  return Binomial::reduced(std::move(plus), std::move(minus));
}

bool is_square_free(const Binomial& b) { return b.max_exponent() <= 1; }

bool is_homogeneous(const Graph& g, const Binomial& b) {
  std::vector<BigInt> balance(g.vertex_count(), 0);
  auto accumulate = [&](const Monomial& m, int sign) {
    for (const auto& [e, k] : m) {
      if (e >= g.edge_count()) return false;
      balance[g.edge(e).u] += sign * k;
      balance[g.edge(e).v] += sign * k;
    }
    return true;
  };
  if (!accumulate(b.plus(), 1) || !accumulate(b.minus(), -1)) return false;
  return std::all_of(balance.begin(), balance.end(), [](const BigInt& x) { return x == 0; });
}

namespace {

std::string render(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, k] : m) {
    if (!first) out << '*';
    first = false;
    out << 'e' << (e + 1);
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(const Binomial& b) {
  if (b.is_zero()) return "0";
  return render(b.plus()) + " - " + render(b.minus());
}

}  // namespace unimod
