#pragma once

#include "ptflab/dyadic.hpp"
#include "ptflab/exactlp.hpp"
#include "ptflab/majority.hpp"
#include "ptflab/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ptflab {

/// Undirected simple graph on vertices 1..n.
class SupportGraph {
 public:
  explicit SupportGraph(int n) : n_(n), adj_(std::size_t(n), 0u) {
    if (n < 1 || n > 32) throw std::invalid_argument("graph order must be in 1..32");
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("graph edges must not be loops");
    if (i > j) std::swap(i, j);
    if (has_edge(i, j)) return;
    edges_.emplace_back(i, j);
    adj_[i - 1] |= 1u << (j - 1);
    adj_[j - 1] |= 1u << (i - 1);
  }

  bool has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[i - 1] >> (j - 1)) & 1;
  }

  /// Edges sorted lexicographically, i < j.
  std::vector<std::pair<int, int>> edges() const {
    auto e = edges_;
    std::sort(e.begin(), e.end());
    return e;
  }

  std::uint32_t neighbors_mask(int i) const {
    check_vertex(i);
    return adj_[i - 1];
  }

  SupportGraph induced(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    for (int v : vertices) check_vertex(v);
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw std::invalid_argument("induced subgraph vertex set has duplicates");
    SupportGraph g(int(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (has_edge(vertices[a], vertices[b])) g.add_edge(int(a) + 1, int(b) + 1);
    return g;
  }

  SupportGraph complement() const {
    SupportGraph g(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (!has_edge(i, j)) g.add_edge(i, j);
    return g;
  }

  bool is_edgeless() const { return edges_.empty(); }

  /// File format: first line "n m", then m lines "i j" with 1 <= i < j <= n.
  static SupportGraph parse(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing header \"n m\"");
    if (n < 1 || n > 32) throw std::invalid_argument("graph file: order out of range");
    if (m < 0) throw std::invalid_argument("graph file: negative edge count");
    SupportGraph g(n);
    for (int e = 0; e < m; ++e) {
      int i, j;
      if (!(in >> i >> j)) throw std::invalid_argument("graph file: truncated edge list");
      if (i < 1 || j < 1 || i >= j || j > n)
        throw std::invalid_argument("graph file: edge endpoints must satisfy 1 <= i < j <= n");
      if (g.has_edge(i, j)) throw std::invalid_argument("graph file: duplicate edge");
      g.add_edge(i, j);
    }
    return g;
  }

  void format(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [i, j] : edges()) out << i << ' ' << j << '\n';
  }

  friend bool operator==(const SupportGraph& a, const SupportGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex out of range");
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct Coloring {
  int colors = 0;
  std::vector<int> color;  // color[v-1] in 0..colors-1
};

namespace detail {
inline bool color_with(const SupportGraph& g, int k, std::vector<int>& color, int v) {
  if (v > g.order()) return true;
  int used = 0;
  for (int u = 1; u < v; ++u) used = std::max(used, color[u - 1] + 1);
  // Break color symmetry: vertex v may only open one fresh color.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    std::uint32_t nb = g.neighbors_mask(v);
    for (int u = 1; u < v && ok; ++u)
      if (((nb >> (u - 1)) & 1) && color[u - 1] == c) ok = false;
    if (!ok) continue;
    color[v - 1] = c;
    if (color_with(g, k, color, v + 1)) return true;
  }
  color[v - 1] = -1;
  return false;
}
}  // namespace detail

/// Exact chromatic number with a witness coloring (n <= 16).
inline Coloring chromatic_number(const SupportGraph& g) {
  if (g.order() > 16) throw std::invalid_argument("chromatic_number: order capped at 16");
  for (int k = 1; k <= g.order(); ++k) {
    Coloring c;
    c.colors = k;
    c.color.assign(g.order(), -1);
    if (detail::color_with(g, k, c.color, 1)) {
      int used = 0;
      for (int v : c.color) used = std::max(used, v + 1);
      c.colors = used;
      return c;
    }
  }
  throw std::logic_error("chromatic search failed");  // unreachable
}

namespace detail {
inline void bron_kerbosch(const std::vector<std::uint32_t>& adj, std::uint32_t r, std::uint32_t p,
                          std::uint32_t x, std::vector<std::uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint32_t px = p | x;
  int pivot = std::countr_zero(px);
  std::uint32_t best = p & ~adj[pivot];
  for (std::uint32_t rest = px; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t cand = p & ~adj[v];
    if (std::popcount(cand) > std::popcount(best)) pivot = v, best = cand;
  }
  std::uint32_t cand = p & ~adj[pivot];
  while (cand) {
    int v = std::countr_zero(cand);
    std::uint32_t bit = std::uint32_t(1) << v;
    cand &= cand - 1;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}
}  // namespace detail

/// All maximal independent sets as vertex bitmasks (bit v-1 <-> vertex v),
/// in ascending mask order (n <= 20).
inline std::vector<std::uint32_t> maximal_independent_sets(const SupportGraph& g) {
  if (g.order() > 20) throw std::invalid_argument("independent set enumeration capped at n = 20");
  // Maximal independent sets of G are maximal cliques of the complement.
  std::vector<std::uint32_t> adj(g.order());
  std::uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
  for (int v = 1; v <= g.order(); ++v)
    adj[v - 1] = all & ~g.neighbors_mask(v) & ~(1u << (v - 1));
  std::vector<std::uint32_t> out;
  detail::bron_kerbosch(adj, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Nonnegative weights over independent sets covering every vertex.
struct FractionalColoring {
  std::vector<std::pair<std::uint32_t, BigRational>> weights;  // set mask -> weight > 0
  BigRational total;
  std::vector<BigRational> coverage;  // per vertex, >= 1

  BigRational vertex_coverage(int v) const { return coverage.at(std::size_t(v) - 1); }
};

/// Exact fractional chromatic number: the covering LP over maximal
/// independent sets (enlarging an independent set never hurts coverage).
inline std::pair<BigRational, FractionalColoring> fractional_chromatic(const SupportGraph& g) {
  auto sets = maximal_independent_sets(g);
  LinearProgram lp(sets.size());
  for (int v = 1; v <= g.order(); ++v) {
    std::vector<BigRational> row(sets.size(), BigRational(0));
    for (std::size_t s = 0; s < sets.size(); ++s)
      if ((sets[s] >> (v - 1)) & 1) row[s] = 1;
    lp.add_constraint(std::move(row), BigRational(1));
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<BigRational> row(sets.size(), BigRational(0));
    row[s] = 1;
    lp.add_constraint(std::move(row), BigRational(0));
  }
  lp.set_objective(std::vector<BigRational>(sets.size(), BigRational(1)));
  LPOutcome out = solve_min(lp);
  if (out.status != LPStatus::Optimal)
    throw std::logic_error("fractional chromatic LP must have an optimum");

  FractionalColoring fc;
  fc.total = out.value;
  fc.coverage.assign(g.order(), BigRational(0));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (out.witness[s].is_zero()) continue;
    fc.weights.emplace_back(sets[s], out.witness[s]);
    for (int v = 1; v <= g.order(); ++v)
      if ((sets[s] >> (v - 1)) & 1) fc.coverage[v - 1] += out.witness[s];
  }
  return {out.value, std::move(fc)};
}

/// A bound of the form sqrt(radicand) with the exact radicand attached.
struct RadicalBound {
  BigRational radicand;
  double value;
};

/// Theorem bound sqrt(chi_f(G)) * sqrt(n).
inline RadicalBound fracch_bound(const SupportGraph& g) {
  BigRational chi_f = fractional_chromatic(g).first;
  BigRational radicand = chi_f * g.order();
  return {radicand, std::sqrt(to_double(radicand))};
}

/// Theorem bound sqrt(n + sqrt(2 |E| n)).
struct EdgeBound {
  long long n;
  long long edge_count;
  double value;
};

inline EdgeBound edge_bound(const SupportGraph& g) {
  long long n = g.order();
  long long e = (long long)g.edge_count();
  return {n, e, std::sqrt(double(n) + std::sqrt(2.0 * double(e) * double(n)))};
}

/// Exact test of I <= sqrt(chi_f) sqrt(n), via I^2 <= chi_f * n.
inline bool influence_within_fracch_bound(const BigRational& influence, const BigRational& chi_f,
                                          int n) {
  return influence * influence <= chi_f * n;
}

/// Exact test of I <= sqrt(n + sqrt(2 E n)), via (I^2 - n)^2 <= 2 E n.
inline bool influence_within_edge_bound(const BigRational& influence, int n, long long edges) {
  BigRational s = influence * influence - n;
  if (s <= 0) return true;
  return s * s <= BigRational(2 * edges) * n;
}

/// Covering Lemma value: the sum of per-part bounds over a disjoint cover of
/// V. Parts inducing edgeless subgraphs default to the LTF maximum.
inline BigRational covering_bound(const SupportGraph& g, const std::vector<std::vector<int>>& parts,
                                  const std::vector<std::optional<BigRational>>& part_bounds = {}) {
  if (!part_bounds.empty() && part_bounds.size() != parts.size())
    throw std::invalid_argument("covering_bound: one bound per part expected");
  std::uint32_t covered = 0;
  BigRational total = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int v : parts[p]) {
      std::uint32_t bit = 1u << (v - 1);
      if (covered & bit) throw std::invalid_argument("covering_bound: parts must be disjoint");
      covered |= bit;
    }
    if (!part_bounds.empty() && part_bounds[p]) {
      total += *part_bounds[p];
    } else {
      SupportGraph sub = g.induced(parts[p]);
      if (!sub.is_edgeless())
        throw std::invalid_argument("covering_bound: non-edgeless part needs an explicit bound");
      total += maj_influence(sub.order()).to_rational();
    }
  }
  if (covered != (g.order() == 32 ? ~0u : (1u << g.order()) - 1))
    throw std::invalid_argument("covering_bound: parts do not cover the vertex set");
  return total;
}

/// min(edge bound, fractional-chromatic bound) on G \ H plus a bound on H.
/// `exact_h_bound(H)` may supply the exact maximal QTF influence of the
/// excised part; otherwise the trivial bound |H| is used.
struct ExcisionBound {
  double remainder_bound;  // min of the two radical bounds on G \ H
  BigRational h_bound;
  double value;
};

inline ExcisionBound excision_bound(
    const SupportGraph& g, const std::vector<int>& h,
    const std::function<std::optional<BigRational>(const SupportGraph&)>& exact_h_bound = {}) {
  std::vector<bool> in_h(std::size_t(g.order()) + 1, false);
  for (int v : h) {
    if (v < 1 || v > g.order()) throw std::out_of_range("excision vertex out of range");
    in_h[v] = true;
  }
  std::vector<int> rest;
  for (int v = 1; v <= g.order(); ++v)
    if (!in_h[v]) rest.push_back(v);

  ExcisionBound out;
  if (rest.empty()) {
    out.remainder_bound = 0.0;
  } else {
    SupportGraph remainder = g.induced(rest);
    out.remainder_bound = std::min(edge_bound(remainder).value, fracch_bound(remainder).value);
  }
  if (h.empty()) {
    out.h_bound = 0;
  } else {
    std::optional<BigRational> exact;
    SupportGraph sub = g.induced(h);
    if (exact_h_bound) exact = exact_h_bound(sub);
    out.h_bound = exact ? *exact : BigRational(sub.order());
  }
  out.value = out.remainder_bound + to_double(out.h_bound);
  return out;
}

/// The randomized-cover distribution from the fractional coloring: weights
/// normalized to probabilities p_S, and per-vertex thinning q_v with
/// p_v (1 - q_v) = 1/chi_f.
struct CoverDistribution {
  std::vector<std::pair<std::uint32_t, BigRational>> probabilities;  // set mask -> p_S
  std::vector<BigRational> vertex_probability;                       // p_v
  std::vector<BigRational> thinning;                                 // q_v
  BigRational chi_f;
  BigRational expected_thinned_size;  // n / chi_f
};

inline CoverDistribution thinned_distribution(const SupportGraph& g) {
  auto [chi_f, coloring] = fractional_chromatic(g);
  CoverDistribution dist;
  dist.chi_f = chi_f;
  dist.vertex_probability.assign(g.order(), BigRational(0));
  BigRational total_p = 0;
  for (const auto& [mask, w] : coloring.weights) {
    BigRational p = w / chi_f;
    dist.probabilities.emplace_back(mask, p);
    total_p += p;
    for (int v = 1; v <= g.order(); ++v)
      if ((mask >> (v - 1)) & 1) dist.vertex_probability[v - 1] += p;
  }
  if (total_p != 1) throw std::logic_error("cover distribution does not sum to 1");
  dist.thinning.assign(g.order(), BigRational(0));
  BigRational inv_chi = BigRational(1) / chi_f;
  for (int v = 0; v < g.order(); ++v) {
    const BigRational& pv = dist.vertex_probability[v];
    if (pv < inv_chi) throw std::logic_error("LP witness undercovers a vertex");
    dist.thinning[v] = (pv - inv_chi) / pv;  // solves p_v (1 - q_v) = 1/chi_f
  }
  dist.expected_thinned_size = BigRational(g.order()) / chi_f;
  return dist;
}

}  // namespace ptflab
