#pragma once

#include "ptflab/boolean_function.hpp"
#include "ptflab/dyadic.hpp"
#include "ptflab/graphs.hpp"
#include "ptflab/qtf.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace ptflab {

struct CounterexampleRecord {
  std::uint32_t table;  // packed truth table
  DyadicRational influence;
  QuadraticPolynomial witness;
};

struct SearchReport {
  std::string description;
  std::uint64_t scanned = 0;
  DyadicRational threshold;
  std::uint64_t survivors = 0;  // tables passing the influence screen
  std::uint64_t lp_calls = 0;
  std::vector<CounterexampleRecord> confirmed;
  int workers = 1;
};

namespace detail {

// Table with index bit b flipped, over packed 32-bit truth tables (n <= 5).
inline std::uint32_t flip_index_bit32(std::uint32_t t, int b) {
  static constexpr std::uint32_t hi[5] = {0xaaaaaaaau, 0xccccccccu, 0xf0f0f0f0u, 0xff00ff00u,
                                          0xffff0000u};
  int s = 1 << b;
  return ((t & hi[b]) >> s) | ((t & ~hi[b]) << s);
}

inline std::uint32_t table_mask(int n) {
  return n == 5 ? 0xffffffffu : (1u << (1 << n)) - 1;
}

/// 2^n * I[f] for a packed table.
inline std::uint32_t influence_numerator32(std::uint32_t t, int n) {
  std::uint32_t mask = table_mask(n);
  std::uint32_t total = 0;
  for (int b = 0; b < n; ++b) total += std::popcount((t ^ flip_index_bit32(t, b)) & mask);
  return total;
}

inline BooleanFunction to_function(int n, std::uint32_t table) {
  BooleanFunction f(n);
  for (std::uint32_t k = 0; k < (std::uint32_t(1) << n); ++k)
    if ((table >> k) & 1) f.set_bit(k, true);
  return f;
}

inline std::uint32_t to_table32(const BooleanFunction& f) {
  std::uint32_t t = 0;
  for (std::uint32_t k = 0; k < f.size(); ++k)
    if (f.bit(k)) t |= 1u << k;
  return t;
}

// Index maps for the group generated by coordinate permutations and
// coordinate sign flips: transformed table bit k = old bit map[k].
inline std::vector<std::vector<std::uint8_t>> index_maps(int n,
                                                         const std::vector<std::vector<int>>& perms) {
  std::uint32_t size = 1u << n;
  std::vector<std::vector<std::uint8_t>> maps;
  maps.reserve(perms.size() << n);
  for (const auto& p : perms)
    for (std::uint32_t xorm = 0; xorm < size; ++xorm) {
      std::vector<std::uint8_t> map(size);
      for (std::uint32_t k = 0; k < size; ++k) {
        std::uint32_t permuted = 0;
        for (int i = 0; i < n; ++i)
          if ((k >> i) & 1) permuted |= 1u << (p[i] - 1);
        map[k] = std::uint8_t(permuted ^ xorm);
      }
      maps.push_back(std::move(map));
    }
  return maps;
}

inline std::uint32_t apply_index_map(std::uint32_t t, const std::vector<std::uint8_t>& map) {
  std::uint32_t out = 0;
  for (std::uint32_t k = 0; k < map.size(); ++k)
    if ((t >> map[k]) & 1) out |= 1u << k;
  return out;
}

// Least table in the orbit of t under the maps, complement included.
inline std::uint32_t canonical_table(std::uint32_t t, int n,
                                     const std::vector<std::vector<std::uint8_t>>& maps) {
  std::uint32_t mask = table_mask(n);
  std::uint32_t best = t;
  for (const auto& map : maps) {
    std::uint32_t u = apply_index_map(t, map);
    best = std::min({best, u, ~u & mask});
  }
  return best;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> graph_automorphisms(const SupportGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& p : all_permutations(g.order())) {
    bool ok = true;
    for (int i = 1; i <= g.order() && ok; ++i)
      for (int j = i + 1; j <= g.order() && ok; ++j)
        if (g.has_edge(i, j) != g.has_edge(p[i - 1], p[j - 1])) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace detail

/// Exact maximal QTF influence I[G] for a graph on at most 4 vertices, with
/// a witness. Tables are scanned in descending influence order, one LP per
/// orbit under Aut(G), coordinate sign flips and negation.
struct SupportMaximum {
  DyadicRational influence;
  std::uint32_t witness_table;
  QuadraticPolynomial witness;
  std::uint64_t lp_calls;
};

inline SupportMaximum max_influence_with_support(const SupportGraph& g) {
  int n = g.order();
  if (n > 4) throw std::invalid_argument("exhaustive support maximum capped at 4 vertices");
  auto maps = detail::index_maps(n, detail::graph_automorphisms(g));
  std::uint32_t tables = detail::table_mask(n);  // 2^(2^n) - 1

  // Bucket canonical representatives by influence numerator.
  std::map<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> buckets;
  for (std::uint64_t t = 0; t <= tables; ++t) {
    auto tt = std::uint32_t(t);
    if (detail::canonical_table(tt, n, maps) != tt) continue;
    buckets[detail::influence_numerator32(tt, n)].push_back(tt);
  }

  std::uint64_t lp_calls = 0;
  for (const auto& [numerator, reps] : buckets) {
    for (std::uint32_t t : reps) {
      ++lp_calls;
      QtfResult res = qtf_representable(detail::to_function(n, t), g);
      if (res.feasible)
        return {DyadicRational(BigInt(numerator), unsigned(n)), t, *res.witness, lp_calls};
    }
  }
  throw std::logic_error("every support admits some QTF");  // unreachable: constants qualify
}

/// The 11 isomorphism classes of graphs on 4 vertices (canonical
/// representatives, ordered by edge count).
inline std::vector<SupportGraph> four_vertex_classes() {
  auto perms = detail::all_permutations(4);
  std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  auto edge_bit = [&](int i, int j) {
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (pairs[e] == std::make_pair(std::min(i, j), std::max(i, j))) return int(e);
    return -1;
  };
  std::vector<std::uint32_t> canon;
  for (std::uint32_t em = 0; em < 64; ++em) {
    std::uint32_t best = em;
    for (const auto& p : perms) {
      std::uint32_t im = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((em >> e) & 1) im |= 1u << edge_bit(p[pairs[e].first - 1], p[pairs[e].second - 1]);
      best = std::min(best, im);
    }
    if (best == em && std::find(canon.begin(), canon.end(), em) == canon.end())
      canon.push_back(em);
  }
  std::sort(canon.begin(), canon.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
  });
  std::vector<SupportGraph> out;
  for (std::uint32_t em : canon) {
    SupportGraph g(4);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((em >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(std::move(g));
  }
  return out;
}

struct SupportInfluenceEntry {
  SupportGraph graph;
  SupportMaximum maximum;
};

/// Table of maximal QTF influences over all 4-vertex isomorphism classes.
inline std::vector<SupportInfluenceEntry> max_influence_per_support(int n = 4) {
  if (n != 4) throw std::invalid_argument("support table implemented for n = 4");
  std::vector<SupportInfluenceEntry> out;
  for (const auto& g : four_vertex_classes()) out.push_back({g, max_influence_with_support(g)});
  return out;
}

/// Exhaustive conjecture check for n <= 4: every truth table with influence
/// exceeding I_GL(n,2) is LP-tested for QTF-ness; violators are returned.
inline SearchReport verify_conjecture_small(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("exhaustive verification limited to 2 <= n <= 4");
  SearchReport report;
  report.description = "all " + std::to_string(1ull << (1 << n)) + " functions on " +
                       std::to_string(n) + " variables vs I_GL(" + std::to_string(n) + ",2)";
  report.threshold = igl(n, 2);

  // Strict threshold on the influence numerator: I > threshold.
  std::uint32_t cutoff;
  {
    BigInt lhs = report.threshold.numerator() * pow2(unsigned(n));
    BigInt num = lhs / report.threshold.denominator();
    cutoff = num.convert_to<std::uint32_t>();  // numerator must exceed this
  }

  auto maps = detail::index_maps(n, detail::all_permutations(n));
  std::unordered_map<std::uint32_t, bool> verdict;  // canonical table -> feasible
  std::uint64_t tables = std::uint64_t(detail::table_mask(n)) + 1;
  for (std::uint64_t t = 0; t < tables; ++t) {
    auto tt = std::uint32_t(t);
    ++report.scanned;
    std::uint32_t num = detail::influence_numerator32(tt, n);
    if (num <= cutoff) continue;
    ++report.survivors;
    std::uint32_t canon = detail::canonical_table(tt, n, maps);
    auto it = verdict.find(canon);
    bool feasible;
    if (it != verdict.end()) {
      feasible = it->second;
    } else {
      ++report.lp_calls;
      feasible = qtf_representable(detail::to_function(n, canon)).feasible;
      verdict.emplace(canon, feasible);
    }
    if (feasible) {
      QtfResult res = qtf_representable(detail::to_function(n, tt));
      report.confirmed.push_back(
          {tt, DyadicRational(BigInt(num), unsigned(n)), *res.witness});
    }
  }
  return report;
}

namespace detail {

/// Expand a 24-bit class index (8 sign patterns of x_1..x_3 times the three
/// values of x_4 + x_5) into a full 32-entry truth table symmetric in the
/// last two coordinates.
inline std::uint32_t expand_symmetric_class(std::uint32_t c) {
  std::uint32_t table = 0;
  for (std::uint32_t k = 0; k < 32; ++k) {
    std::uint32_t u_idx = std::popcount(k >> 3);  // 0, 1, 2 for u = -2, 0, 2
    if ((c >> ((k & 7) + 8 * u_idx)) & 1) table |= 1u << k;
  }
  return table;
}

// Class-index permutations for the subgroup preserving the symmetric form:
// permutations and sign flips of x_1..x_3, and joint sign flip of (x_4,x_5).
inline std::vector<std::array<std::uint8_t, 24>> class_index_maps() {
  std::vector<std::array<std::uint8_t, 24>> maps;
  for (const auto& p : all_permutations(3))
    for (std::uint32_t xorm = 0; xorm < 8; ++xorm)
      for (int uflip = 0; uflip < 2; ++uflip) {
        std::array<std::uint8_t, 24> map{};
        for (std::uint32_t pos = 0; pos < 24; ++pos) {
          std::uint32_t abc = pos & 7, u = pos >> 3;
          std::uint32_t pabc = 0;
          for (int i = 0; i < 3; ++i)
            if ((abc >> i) & 1) pabc |= 1u << (p[i] - 1);
          map[pos] = std::uint8_t((pabc ^ xorm) + 8 * (uflip ? 2 - u : u));
        }
        maps.push_back(map);
      }
  return maps;
}

inline std::uint32_t canonical_class(std::uint32_t c,
                                     const std::vector<std::array<std::uint8_t, 24>>& maps) {
  std::uint32_t best = c;
  for (const auto& map : maps) {
    std::uint32_t u = 0;
    for (std::uint32_t pos = 0; pos < 24; ++pos)
      if ((c >> map[pos]) & 1) u |= 1u << pos;
    best = std::min({best, u, ~u & 0xffffffu});
  }
  return best;
}

/// Reduced representability LP for 5-variable functions symmetric in
/// (x_4, x_5): a witness exists iff a witness with b_4 = b_5, a_{i4} = a_{i5}
/// exists (average any witness over the transposition), so the LP has 12
/// variables and one constraint per (x_1,x_2,x_3,u) class.
inline bool symmetric_qtf_feasible(std::uint32_t class_bits, const SimplexOptions& opts = {}) {
  LinearProgram lp(12);
  for (std::uint32_t pos = 0; pos < 24; ++pos) {
    int fx = ((class_bits >> pos) & 1) ? 1 : -1;
    std::uint32_t abc = pos & 7;
    long long u = 2 * (long long)(pos >> 3) - 2;
    int x1 = (abc & 1) ? 1 : -1, x2 = (abc & 2) ? 1 : -1, x3 = (abc & 4) ? 1 : -1;
    // vars: c, b1, b2, b3, b45, a12, a13, a23, a14, a24, a34, a45
    std::vector<BigRational> row = {
        BigRational(fx),
        BigRational(fx * x1),
        BigRational(fx * x2),
        BigRational(fx * x3),
        BigRational(fx * u),
        BigRational(fx * x1 * x2),
        BigRational(fx * x1 * x3),
        BigRational(fx * x2 * x3),
        BigRational(fx * x1 * u),
        BigRational(fx * x2 * u),
        BigRational(fx * x3 * u),
        BigRational(fx * (u * u / 2 - 1)),  // x4 x5 as a function of u
    };
    lp.add_constraint(std::move(row), BigRational(1));
  }
  return solve_feasibility(lp, opts).status == LPStatus::Feasible;
}

}  // namespace detail

/// The n = 5 counterexample hunt: all 2^24 truth tables symmetric in the
/// last two coordinates, screened for influence > threshold, survivors
/// LP-tested. Deterministic regardless of worker count.
inline SearchReport hunt_n5(const DyadicRational& threshold = DyadicRational(BigInt(25), 3),
                            int workers = 1) {
  SearchReport report;
  report.description = "2^24 truth tables on 5 variables symmetric in (x4,x5)";
  report.threshold = threshold;
  report.workers = std::max(1, workers);
  report.scanned = 1u << 24;

  // Influence screen: numerator over 2^5 must exceed threshold strictly.
  BigInt cut = threshold.numerator() * 32 / threshold.denominator();
  auto cutoff = cut.convert_to<std::uint32_t>();

  std::vector<std::uint32_t> survivors;
  {
    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    std::uint32_t chunk = (1u << 24) / std::uint32_t(report.workers);
    std::vector<std::vector<std::uint32_t>> partial(report.workers);
    for (int w = 0; w < report.workers; ++w) {
      std::uint32_t lo = w * chunk;
      std::uint32_t hi = (w + 1 == report.workers) ? (1u << 24) : lo + chunk;
      pool.emplace_back([&, w, lo, hi] {
        std::vector<std::uint32_t> local;
        for (std::uint32_t c = lo; c < hi; ++c) {
          std::uint32_t table = detail::expand_symmetric_class(c);
          if (detail::influence_numerator32(table, 5) > cutoff) local.push_back(c);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        partial[w] = std::move(local);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) survivors.insert(survivors.end(), part.begin(), part.end());
  }
  report.survivors = survivors.size();

  // LP phase, deduplicated by canonical class form; verdicts are shared
  // across workers and the confirmed list is merged in index order.
  auto maps = detail::class_index_maps();
  std::unordered_map<std::uint32_t, bool> verdict;
  std::mutex verdict_mutex;
  std::atomic<std::uint64_t> lp_calls{0};
  std::vector<std::optional<CounterexampleRecord>> slots(survivors.size());
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < report.workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t idx = next.fetch_add(1);
          if (idx >= survivors.size()) return;
          std::uint32_t c = survivors[idx];
          std::uint32_t canon = detail::canonical_class(c, maps);
          bool feasible;
          bool known = false;
          {
            std::lock_guard<std::mutex> lock(verdict_mutex);
            auto it = verdict.find(canon);
            if (it != verdict.end()) feasible = it->second, known = true;
          }
          if (!known) {
            ++lp_calls;
            feasible = detail::symmetric_qtf_feasible(canon);
            std::lock_guard<std::mutex> lock(verdict_mutex);
            verdict.emplace(canon, feasible);
          }
          if (!feasible) continue;
          std::uint32_t table = detail::expand_symmetric_class(c);
          QtfResult res = qtf_representable(detail::to_function(5, table));
          if (!res.feasible)
            throw std::logic_error("symmetric LP and full LP disagree on feasibility");
          slots[idx] = CounterexampleRecord{
              table,
              DyadicRational(BigInt(detail::influence_numerator32(table, 5)), 5),
              *res.witness};
        }
      });
    for (auto& th : pool) th.join();
  }
  report.lp_calls = lp_calls.load();
  for (auto& slot : slots)
    if (slot) report.confirmed.push_back(std::move(*slot));
  return report;
}

/// Influences of every 5-ish-variable symmetric function sgn(p(sum x_i))
/// with quadratic p: one entry per sign pattern over the attainable sums
/// with at most two alternations (odd n).
inline std::vector<DyadicRational> symmetric_quadratic_influences(int n) {
  if (n % 2 == 0 || n < 1) throw std::invalid_argument("odd n expected");
  int points = n + 1;  // attainable sums -n, -n+2, ..., n
  std::vector<DyadicRational> out;
  for (std::uint32_t pattern = 0; pattern < (1u << points); ++pattern) {
    int changes = 0;
    for (int t = 1; t < points; ++t)
      if (((pattern >> t) & 1) != ((pattern >> (t - 1)) & 1)) ++changes;
    if (changes > 2) continue;  // not the sign pattern of a quadratic
    // Inf_1 by counting; total is n * Inf_1 by symmetry.
    BigInt flips = 0;
    for (int j = 0; j + 1 < points; ++j) {
      // s = -(n-1) + 2j is the sum of the remaining n-1 coordinates; the
      // coordinate flip moves between pattern positions j and j+1.
      if (((pattern >> j) & 1) != ((pattern >> (j + 1)) & 1)) flips += binomial(n - 1, j);
    }
    DyadicRational inf1(flips, unsigned(n - 1));
    out.push_back(DyadicRational(BigInt(n), 0u) * inf1);
  }
  return out;
}

}  // namespace ptflab
