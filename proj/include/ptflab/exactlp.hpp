#pragma once

#include "ptflab/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ptflab {

/// Constraints are rows "a . q >= rhs" over free variables q; the optional
/// objective c is minimized.
struct LinearProgram {
  std::vector<std::vector<BigRational>> rows;
  std::vector<BigRational> rhs;
  std::optional<std::vector<BigRational>> objective;

  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw std::invalid_argument("LP needs at least one variable");
  }

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows.size(); }

  void add_constraint(std::vector<BigRational> row, BigRational r) {
    if (row.size() != num_vars_) throw std::invalid_argument("LP constraint dimension mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }

  void set_objective(std::vector<BigRational> c) {
    if (c.size() != num_vars_) throw std::invalid_argument("LP objective dimension mismatch");
    objective = std::move(c);
  }

 private:
  std::size_t num_vars_;
};

enum class LPStatus { Feasible, Infeasible, Optimal, Unbounded };

struct LPOutcome {
  LPStatus status;
  std::vector<BigRational> witness;      // Feasible / Optimal
  std::vector<BigRational> certificate;  // Infeasible: Farkas y >= 0, y^T A = 0, y^T r > 0
  BigRational value;                     // Optimal
  std::uint64_t pivots = 0;
};

struct SimplexOptions {
  std::uint64_t max_pivots = 1u << 22;
};

class PivotLimitError : public std::runtime_error {
 public:
  explicit PivotLimitError(std::uint64_t limit)
      : std::runtime_error("simplex exceeded pivot ceiling " + std::to_string(limit)) {}
};

namespace detail {

// Two-phase primal simplex with Bland's rule on the standard form
//   A q+ - A q- - s = r,  q+, q-, s >= 0,
// rows flipped so the right-hand side is nonnegative.
class SimplexSolver {
 public:
  SimplexSolver(const LinearProgram& lp, const SimplexOptions& opts) : lp_(lp), opts_(opts) {
    if (lp.num_rows() == 0) throw std::invalid_argument("LP needs at least one constraint");
    m_ = lp.num_rows();
    d_ = lp.num_vars();
    slack_ = 2 * d_;
    art_ = 2 * d_ + m_;
    cols_ = 2 * d_ + 2 * m_;

    tab_.assign(m_, std::vector<BigRational>(cols_));
    b_.assign(m_, BigRational(0));
    basis_.resize(m_);
    flip_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      flip_[i] = lp.rhs[i] < 0;
      BigRational sign = flip_[i] ? -1 : 1;
      for (std::size_t j = 0; j < d_; ++j) {
        tab_[i][j] = sign * lp.rows[i][j];
        tab_[i][d_ + j] = -tab_[i][j];
      }
      tab_[i][slack_ + i] = -sign;
      tab_[i][art_ + i] = 1;
      b_[i] = sign * lp.rhs[i];
      basis_[i] = art_ + i;
    }
  }

  LPOutcome solve(bool feasibility_only) {
    // Phase 1: minimize the sum of artificials.
    red_.assign(cols_, BigRational(0));
    for (std::size_t j = 0; j < art_; ++j)
      for (std::size_t i = 0; i < m_; ++i) red_[j] -= tab_[i][j];
    run(art_);

    BigRational phase1 = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= art_) phase1 += b_[i];

    LPOutcome out;
    out.pivots = pivots_;
    if (phase1 > 0) {
      out.status = LPStatus::Infeasible;
      out.certificate = farkas_certificate();
      verify_certificate(out.certificate);
      return out;
    }

    if (feasibility_only && !lp_.objective) {
      out.status = LPStatus::Feasible;
      out.witness = extract_witness();
      verify_witness(out.witness);
      return out;
    }

    drive_out_artificials();

    // Phase 2.
    const auto& c = *lp_.objective;
    std::vector<BigRational> cost(cols_, BigRational(0));
    for (std::size_t j = 0; j < d_; ++j) {
      cost[j] = c[j];
      cost[d_ + j] = -c[j];
    }
    red_.assign(cols_, BigRational(0));
    for (std::size_t j = 0; j < art_; ++j) {
      red_[j] = cost[j];
      for (std::size_t i = 0; i < m_; ++i)
        if (!cost[basis_[i]].is_zero()) red_[j] -= cost[basis_[i]] * tab_[i][j];
    }
    bool bounded = run(art_);
    out.pivots = pivots_;
    if (!bounded) {
      out.status = LPStatus::Unbounded;
      return out;
    }
    out.status = LPStatus::Optimal;
    out.witness = extract_witness();
    verify_witness(out.witness);
    out.value = 0;
    for (std::size_t j = 0; j < d_; ++j) out.value += c[j] * out.witness[j];
    return out;
  }

 private:
  // Bland's rule over columns [0, limit). Returns false iff unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (red_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;

      std::size_t leave = m_;
      BigRational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        BigRational ratio = b_[i] / tab_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave]))
          leave = i, best = ratio;
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    if (++pivots_ > opts_.max_pivots) throw PivotLimitError(opts_.max_pivots);
    BigRational inv = tab_[p][q];
    for (auto& v : tab_[p]) v /= inv;
    b_[p] /= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || tab_[i][q].is_zero()) continue;
      BigRational factor = tab_[i][q];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!tab_[p][j].is_zero()) tab_[i][j] -= factor * tab_[p][j];
      b_[i] -= factor * b_[p];
    }
    if (!red_[q].is_zero()) {
      BigRational factor = red_[q];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!tab_[p][j].is_zero()) red_[j] -= factor * tab_[p][j];
    }
    basis_[p] = q;
  }

  // Artificials still basic at level 0 are pivoted out; rows with no
  // remaining structural entry are redundant and dropped.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < art_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      for (; j < art_; ++j)
        if (!tab_[i][j].is_zero()) break;
      if (j < art_) {
        pivot(i, j);
        ++i;
      } else {
        tab_.erase(tab_.begin() + i);
        b_.erase(b_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
  }

  std::vector<BigRational> extract_witness() const {
    std::vector<BigRational> x(cols_, BigRational(0));
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = b_[i];
    std::vector<BigRational> q(d_);
    for (std::size_t j = 0; j < d_; ++j) q[j] = x[j] - x[d_ + j];
    return q;
  }

  // y_i = c_B B^-1 read off the artificial columns, mapped back through the
  // row flips so the certificate applies to the original "A q >= r" rows.
  std::vector<BigRational> farkas_certificate() const {
    std::vector<BigRational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      // Phase-1 reduced cost of artificial i is 1 - y_i.
      y[i] = BigRational(1) - red_[art_ + i];
      if (flip_[i]) y[i] = -y[i];
    }
    return y;
  }

  void verify_witness(const std::vector<BigRational>& q) const {
    for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
      BigRational lhs = 0;
      for (std::size_t j = 0; j < d_; ++j) lhs += lp_.rows[i][j] * q[j];
      if (lhs < lp_.rhs[i]) throw std::logic_error("simplex witness fails a constraint");
    }
  }

  void verify_certificate(const std::vector<BigRational>& y) const {
    BigRational ytr = 0;
    for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
      if (y[i] < 0) throw std::logic_error("Farkas certificate has a negative multiplier");
      ytr += y[i] * lp_.rhs[i];
    }
    if (ytr <= 0) throw std::logic_error("Farkas certificate has nonpositive value");
    for (std::size_t j = 0; j < d_; ++j) {
      BigRational dot = 0;
      for (std::size_t i = 0; i < lp_.num_rows(); ++i) dot += y[i] * lp_.rows[i][j];
      if (!dot.is_zero()) throw std::logic_error("Farkas certificate does not annihilate A");
    }
  }

  const LinearProgram& lp_;
  SimplexOptions opts_;
  std::size_t m_, d_, slack_, art_, cols_;
  std::vector<std::vector<BigRational>> tab_;
  std::vector<BigRational> b_;
  std::vector<BigRational> red_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flip_;
  std::uint64_t pivots_ = 0;
};

}  // namespace detail

inline LPOutcome solve_feasibility(const LinearProgram& lp, const SimplexOptions& opts = {}) {
  detail::SimplexSolver solver(lp, opts);
  return solver.solve(/*feasibility_only=*/true);
}

inline LPOutcome solve_min(const LinearProgram& lp, const SimplexOptions& opts = {}) {
  if (!lp.objective) throw std::invalid_argument("solve_min requires an objective");
  detail::SimplexSolver solver(lp, opts);
  return solver.solve(/*feasibility_only=*/false);
}

}  // namespace ptflab
