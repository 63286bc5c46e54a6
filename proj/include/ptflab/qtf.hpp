#pragma once

#include "ptflab/boolean_function.hpp"
#include "ptflab/exactlp.hpp"
#include "ptflab/graphs.hpp"
#include "ptflab/majority.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ptflab {

/// Multilinear polynomial of degree <= 2:
///   q(x) = c + sum_i b_i x_i + sum_{i<j} a_{ij} x_i x_j.
class QuadraticPolynomial {
 public:
  explicit QuadraticPolynomial(int arity)
      : n_(arity), c_(0), b_(std::size_t(arity), BigRational(0)),
        a_(std::size_t(arity) * (arity - 1) / 2, BigRational(0)) {
    if (arity < 1 || arity > 32) throw std::invalid_argument("polynomial arity must be in 1..32");
  }

  int arity() const { return n_; }

  BigRational& constant() { return c_; }
  const BigRational& constant() const { return c_; }

  BigRational& linear(int i) { return b_.at(check(i) - 1); }
  const BigRational& linear(int i) const { return b_.at(check(i) - 1); }

  BigRational& quadratic(int i, int j) { return a_.at(pair_index(i, j)); }
  const BigRational& quadratic(int i, int j) const { return a_.at(pair_index(i, j)); }

  /// x_i = +1 iff bit (i-1) of k is set.
  BigRational evaluate(std::uint32_t k) const {
    BigRational v = c_;
    for (int i = 1; i <= n_; ++i) {
      if (b_[i - 1].is_zero()) continue;
      v += sign_of(k, i) * b_[i - 1];
    }
    std::size_t e = 0;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j, ++e)
        if (!a_[e].is_zero()) v += sign_of(k, i) * sign_of(k, j) * a_[e];
    return v;
  }

  int sign_at(std::uint32_t k) const {
    BigRational v = evaluate(k);
    if (v.is_zero()) return 0;
    return v < 0 ? -1 : 1;
  }

  /// [c, b_1..b_n, a_{ij} in lexicographic (i,j) order].
  std::vector<BigRational> coefficient_vector() const {
    std::vector<BigRational> v;
    v.reserve(1 + b_.size() + a_.size());
    v.push_back(c_);
    v.insert(v.end(), b_.begin(), b_.end());
    v.insert(v.end(), a_.begin(), a_.end());
    return v;
  }

  /// Coefficients scaled to coprime integers (order as coefficient_vector).
  std::vector<BigInt> integer_coefficients() const {
    auto v = coefficient_vector();
    BigInt lcm = 1;
    for (const auto& q : v) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(q)));
    std::vector<BigInt> out;
    BigInt gcd = 0;
    for (const auto& q : v) {
      out.push_back(BigInt(numerator(q)) * (lcm / BigInt(denominator(q))));
      gcd = boost::multiprecision::gcd(gcd, out.back());
    }
    if (gcd > 1)
      for (auto& z : out) z /= gcd;
    return out;
  }

 private:
  int check(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("coefficient index out of range");
    return i;
  }
  std::size_t pair_index(int i, int j) const {
    check(i);
    check(j);
    if (i > j) std::swap(i, j);
    if (i == j) throw std::invalid_argument("no squared terms in a multilinear polynomial");
    // position of (i,j) in lexicographic order over 1 <= i < j <= n
    std::size_t before = std::size_t(i - 1) * n_ - std::size_t(i - 1) * i / 2;
    return before + std::size_t(j - i - 1);
  }
  static int sign_of(std::uint32_t k, int i) { return (k >> (i - 1)) & 1 ? 1 : -1; }

  int n_;
  BigRational c_;
  std::vector<BigRational> b_;
  std::vector<BigRational> a_;
};

/// Graph with an edge per nonzero quadratic coefficient.
inline SupportGraph support_of(const QuadraticPolynomial& q) {
  SupportGraph g(q.arity());
  for (int i = 1; i <= q.arity(); ++i)
    for (int j = i + 1; j <= q.arity(); ++j)
      if (!q.quadratic(i, j).is_zero()) g.add_edge(i, j);
  return g;
}

struct QtfResult {
  bool feasible;
  std::optional<QuadraticPolynomial> witness;
  std::vector<BigRational> certificate;  // Farkas multipliers, one per input index
};

/// Tests whether f = sgn(q) for some quadratic q, via feasibility of
/// f_x q(x) >= 1 over all inputs. With a support graph, quadratic
/// coefficients outside its edges are fixed to zero.
inline QtfResult qtf_representable(const BooleanFunction& f,
                                   const std::optional<SupportGraph>& support = {},
                                   const SimplexOptions& opts = {}) {
  int n = f.arity();
  if (n > 20) throw std::invalid_argument("qtf_representable: arity capped at 20");
  if (support && support->order() != n)
    throw std::invalid_argument("support graph order does not match function arity");

  std::vector<std::pair<int, int>> edges;
  if (support) {
    edges = support->edges();
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }

  std::size_t dim = 1 + std::size_t(n) + edges.size();
  LinearProgram lp(dim);
  for (std::uint32_t k = 0; k < f.size(); ++k) {
    int fx = f.evaluate(k);
    std::vector<BigRational> row(dim);
    row[0] = fx;
    for (int i = 1; i <= n; ++i) row[i] = fx * (((k >> (i - 1)) & 1) ? 1 : -1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int xi = ((k >> (edges[e].first - 1)) & 1) ? 1 : -1;
      int xj = ((k >> (edges[e].second - 1)) & 1) ? 1 : -1;
      row[1 + n + e] = fx * xi * xj;
    }
    lp.add_constraint(std::move(row), BigRational(1));
  }

  LPOutcome out = solve_feasibility(lp, opts);
  QtfResult res;
  res.feasible = out.status == LPStatus::Feasible;
  if (res.feasible) {
    QuadraticPolynomial q(n);
    q.constant() = out.witness[0];
    for (int i = 1; i <= n; ++i) q.linear(i) = out.witness[i];
    for (std::size_t e = 0; e < edges.size(); ++e)
      q.quadratic(edges[e].first, edges[e].second) = out.witness[1 + n + e];
    for (std::uint32_t k = 0; k < f.size(); ++k)
      if (q.sign_at(k) != f.evaluate(k))
        throw std::logic_error("QTF witness does not reproduce the truth table");
    res.witness = std::move(q);
  } else {
    res.certificate = std::move(out.certificate);
  }
  return res;
}

namespace detail {
// p_d(t) = t (t-2)(t+2)(t-4)(t+4)... truncated to d factors; sign alternates
// at the d+1 central attainable values of t.
inline BigInt central_root_polynomial(int d, long long t) {
  BigInt v = t;
  long long root = 2;
  int sign = 1;
  for (int factor = 1; factor < d; ++factor) {
    v *= t - sign * root;
    if (sign == -1) root += 2;
    sign = -sign;
  }
  return v;
}
}  // namespace detail

/// Symmetric degree-d PTF: sgn(p_d(sum x_i)) for odd n, sgn(p_d(sum x_i + 1))
/// for even n (d <= 4).
inline BooleanFunction symmetric_ptf(int n, int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("symmetric_ptf: degree must be in 1..4");
  if (d > n) throw std::invalid_argument("symmetric_ptf: degree exceeds arity");
  return BooleanFunction::from_predicate(n, [n, d](std::uint64_t k) {
    long long t = 2 * std::popcount(k) - n;
    if (n % 2 == 0) t += 1;
    BigInt v = detail::central_root_polynomial(d, t);
    if (v == 0) throw std::logic_error("symmetric_ptf hit a root at an attainable sum");
    return v > 0;
  });
}

/// The conjectured maximum influence of a degree-d PTF, from the binomial-sum
/// display: floor branch for even n, ceiling branch for odd n (d >= 2).
inline DyadicRational igl(int n, int d) {
  if (d < 2) throw std::invalid_argument("igl: stated for degree d >= 2 only");
  if (d > n) throw std::invalid_argument("igl: degree exceeds arity");
  BigInt sum = 0;
  for (int k = 0; k < d; ++k) {
    long h = (n % 2 == 0) ? (n - k) / 2 : (n - k + 1) / 2;  // floor / ceiling
    sum += binomial(n, h) * (n - h);
  }
  return DyadicRational(sum, unsigned(n - 1));
}

/// Closed form for d = 2: n 2^{-n+1} C(n,(n-1)/2) for odd n and
/// n 2^{-n} [2 C(n-1,(n-2)/2) + C(n,n/2)] for even n.
inline DyadicRational igl2_closed(int n) {
  if (n < 2) throw std::invalid_argument("igl2_closed: requires n >= 2");
  if (n % 2 == 1) return DyadicRational(BigInt(n) * binomial(n, (n - 1) / 2), unsigned(n - 1));
  return DyadicRational(BigInt(n) * (2 * binomial(n - 1, (n - 2) / 2) + binomial(n, n / 2)),
                        unsigned(n));
}

/// The even-n closed form misapplied at odd n (half-integer binomial indices
/// rounded to the central column). At n = 5 this yields 55/16 = 3.4375, the
/// value the parity split corrects.
inline DyadicRational igl2_even_form_misread(int n) {
  if (n < 2 || n % 2 == 0) throw std::invalid_argument("misread variant applies to odd n");
  return DyadicRational(
      BigInt(n) * (2 * binomial(n - 1, (n - 1) / 2) + binomial(n, (n - 1) / 2)), unsigned(n));
}

}  // namespace ptflab
