#pragma once

#include "ptflab/boolean_function.hpp"
#include "ptflab/dyadic.hpp"
#include "ptflab/qtf.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ptflab {

/// The fixed trivariate polynomial behind the counterexample family.
inline long long family_polynomial(long long x, long long y, long long z) {
  return 2 * x * (1 - 7 * y + z) + 4 * y - 7 * y * y + 4 * y * z + 6 * z + 3 * z * z;
}

namespace detail {
inline int family_sign(long long x, long long y, long long z) {
  long long v = family_polynomial(x, y, z);
  if (v == 0) throw std::logic_error("family polynomial vanishes at an attainable point");
  return v > 0 ? 1 : -1;
}

inline void check_family_arity(int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("counterexample family requires odd n >= 5");
}
}  // namespace detail

/// Symbolic form of f_n: per-class signs and weights over
/// (x_1, s = sum of the middle block, u = x_{n-1} + x_n).
class FamilyInstance {
 public:
  explicit FamilyInstance(int n) : n_(n), m_(n - 3) {
    detail::check_family_arity(n);
    // The construction needs the polynomial to be nonzero everywhere.
    for (int x1 = -1; x1 <= 1; x1 += 2)
      for (long long s = -m_; s <= m_; s += 2)
        for (long long u = -2; u <= 2; u += 2) detail::family_sign(x1, s, u);
  }

  int arity() const { return n_; }
  int middle_size() const { return m_; }

  int sign(int x1, long long s, long long u) const { return detail::family_sign(x1, s, u); }

  /// Number of inputs in the class (x_1, s, u): C(m, (m+s)/2) * w(u), w(0) = 2.
  BigInt class_weight(long long s, long long u) const {
    return binomial(m_, long((m_ + s) / 2)) * (u == 0 ? 2 : 1);
  }

 private:
  int n_;
  int m_;
};

/// Explicit truth table of f_n = sgn(p(x_1, x_2 + ... + x_{n-2}, x_{n-1} + x_n)).
inline BooleanFunction build_family(int n) {
  detail::check_family_arity(n);
  if (n > 25) throw std::invalid_argument("explicit family table capped at n = 25");
  int m = n - 3;
  return BooleanFunction::from_predicate(n, [n, m](std::uint64_t k) {
    long long x1 = (k & 1) ? 1 : -1;
    long long mid = std::popcount((k >> 1) & ((std::uint64_t(1) << m) - 1));
    long long s = 2 * mid - m;
    long long u = 2 * (long long)std::popcount(k >> (n - 2)) - 2;
    return detail::family_sign(int(x1), s, u) > 0;
  });
}

struct FamilyInfluenceBlocks {
  DyadicRational first;        // Inf_1
  DyadicRational middle_each;  // Inf_i, 2 <= i <= n-2 (all equal)
  DyadicRational last_each;    // Inf_{n-1} = Inf_n
  DyadicRational total;
};

/// Exact total influence of f_n in time polynomial in n, by summing flip
/// probabilities over the (x_1, s, u) classes; the three coordinate blocks
/// are computed separately.
inline FamilyInfluenceBlocks family_influence_blocks(int n) {
  FamilyInstance inst(n);
  int m = inst.middle_size();

  BigInt first = 0;  // count over the 2^{n-1} assignments of the other coordinates
  for (long long s = -m; s <= m; s += 2)
    for (long long u = -2; u <= 2; u += 2)
      if (inst.sign(1, s, u) != inst.sign(-1, s, u)) first += inst.class_weight(s, u);

  BigInt middle = 0;  // count over all 2^n inputs
  for (int x1 = -1; x1 <= 1; x1 += 2)
    for (long long s2 = -(m - 1); s2 <= m - 1; s2 += 2)  // sum of the other m-1 middle coords
      for (long long u = -2; u <= 2; u += 2)
        if (inst.sign(x1, s2 + 1, u) != inst.sign(x1, s2 - 1, u))
          middle += 2 * binomial(m - 1, long((m - 1 + s2) / 2)) * (u == 0 ? 2 : 1);

  BigInt last = 0;  // flipping x_{n-1} moves u between x_n - 1 and x_n + 1
  for (int x1 = -1; x1 <= 1; x1 += 2)
    for (long long s = -m; s <= m; s += 2)
      for (int xn = -1; xn <= 1; xn += 2)
        if (inst.sign(x1, s, xn + 1) != inst.sign(x1, s, xn - 1))
          last += 2 * binomial(m, long((m + s) / 2));

  FamilyInfluenceBlocks blocks;
  blocks.first = DyadicRational(first, unsigned(n - 1));
  blocks.middle_each = DyadicRational(middle, unsigned(n));
  blocks.last_each = DyadicRational(last, unsigned(n));
  blocks.total = blocks.first;
  for (int i = 0; i < m; ++i) blocks.total += blocks.middle_each;
  blocks.total += blocks.last_each;
  blocks.total += blocks.last_each;
  return blocks;
}

inline DyadicRational family_influence_fast(int n) { return family_influence_blocks(n).total; }

/// The closed-form binomial sum for I[f_n] (m = n - 3; C(m,k) = 0 for k < 0):
///   2^{-m-4} [ C(m,m/2)(11m+36) + C(m,m/2-1)(15m+58)
///            + C(m,m/2-2)(5m+24) + C(m,m/2-3)(m+6) ].
inline DyadicRational family_influence_closed(int n) {
  detail::check_family_arity(n);
  long m = n - 3;
  BigInt sum = binomial(m, m / 2) * (11 * m + 36) + binomial(m, m / 2 - 1) * (15 * m + 58) +
               binomial(m, m / 2 - 2) * (5 * m + 24) + binomial(m, m / 2 - 3) * (m + 6);
  return DyadicRational(sum, unsigned(m + 4));
}

/// The middle-block sum as displayed, with the final term's denominator left
/// as a parameter so both readings (15 and 16) can be compared against the
/// exact count.
inline BigRational family_middle_display(int n, int last_denominator) {
  detail::check_family_arity(n);
  long m = n - 3;
  BigRational sum = BigRational(binomial(m, m / 2)) * BigRational(11 * m, 16) +
                    BigRational(binomial(m, m / 2 - 1)) * (BigRational(15 * m, 16) + BigRational(7, 8)) +
                    BigRational(binomial(m, m / 2 - 2)) * (BigRational(5 * m, 16) + BigRational(3, 4)) +
                    BigRational(binomial(m, m / 2 - 3)) * BigRational(m + 6, last_denominator);
  return sum / BigRational(pow2(unsigned(m)));
}

/// I_GL(n,2) in the proof's m-form: 2^{-m} C(m+3, m/2+1) (m+3)/4.
inline DyadicRational igl2_mform(int n) {
  detail::check_family_arity(n);
  long m = n - 3;
  return DyadicRational(binomial(m + 3, m / 2 + 1) * (m + 3), unsigned(m + 2));
}

struct FamilyRatio {
  BigRational exact;    // I[f_n] / I_GL(n,2)
  BigRational formula;  // 1 + 7/(32n) - 3/(32(n-2)) + 3/(16 n^2)
};

inline FamilyRatio family_ratio(int n) {
  detail::check_family_arity(n);
  DyadicRational igl_value = igl2_mform(n);
  if (igl_value != igl(n, 2))
    throw std::logic_error("m-form of I_GL(n,2) disagrees with the binomial sum");
  FamilyRatio r;
  r.exact = family_influence_fast(n).to_rational() / igl_value.to_rational();
  r.formula = BigRational(1) + BigRational(7, 32 * BigInt(n)) -
              BigRational(3, 32 * (BigInt(n) - 2)) + BigRational(3, 16 * BigInt(n) * n);
  return r;
}

}  // namespace ptflab
