#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sigfrac/errors.hpp"
#include "sigfrac/rational.hpp"

namespace sigfrac::lp {

enum class Sense { GreaterEqual, LessEqual, Equal };
enum class Status { Optimal, Infeasible, Unbounded };

inline const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Optimal: return "Optimal";
    case Status::Infeasible: return "Infeasible";
    case Status::Unbounded: return "Unbounded";
  }
  return "?";
}

/// minimize objective · x  subject to  rows[i] · x (sense[i]) rhs[i],
/// x >= lower_bounds (all zero when lower_bounds is empty).
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<Rational> lower_bounds;

  std::size_t variable_count() const noexcept { return objective.size(); }
  std::size_t constraint_count() const noexcept { return rows.size(); }

  Rational lower_bound(std::size_t j) const {
    return lower_bounds.empty() ? Rational(0) : lower_bounds[j];
  }
};

struct LpSolution {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> primal;
  /// One multiplier per constraint, read from the final basis. For a
  /// minimization, >= rows get y >= 0 and <= rows get y <= 0.
  std::vector<Rational> dual;
  /// Standard-form variable indices of the final basis, by row.
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

inline void check_dimensions(const LpProblem& p) {
  const std::size_t nv = p.variable_count();
  if (p.senses.size() != p.rows.size() || p.rhs.size() != p.rows.size()) {
    throw Error(Errc::DimensionMismatch, "rows, senses and rhs differ in length");
  }
  if (!p.lower_bounds.empty() && p.lower_bounds.size() != nv) {
    throw Error(Errc::DimensionMismatch, "lower bounds do not match variable count");
  }
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i].size() != nv) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                               std::to_string(p.rows[i].size()) + " entries, expected " +
                                               std::to_string(nv));
    }
  }
}

namespace detail {

// Sparse column with integer entries over a shared positive denominator, so
// pricing reduces to integer dot products.
struct SparseColumn {
  std::vector<std::size_t> index;
  std::vector<Integer> num;
  Integer den = 1;
};

inline SparseColumn make_column(const std::vector<std::pair<std::size_t, Rational>>& entries) {
  SparseColumn c;
  for (const auto& [i, v] : entries) mpz_lcm(c.den.get_mpz_t(), c.den.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& [i, v] : entries) {
    c.index.push_back(i);
    c.num.push_back(v.get_num() * (c.den / v.get_den()));
  }
  return c;
}

// Revised two-phase primal simplex over the rationals with Bland's rule.
// Standard form: [structural | slack/surplus | artificial] x = b, x >= 0,
// with every row scaled so that b >= 0.
class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : problem_(p) {
    check_dimensions(p);
    m_ = p.constraint_count();
    nv_ = p.variable_count();
    build();
  }

  LpSolution solve() {
    LpSolution sol;
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(cols_.size());
    for (std::size_t j = first_artificial_; j < cols_.size(); ++j) phase1[j] = 1;
    run(phase1, /*allow_artificial=*/true);
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= first_artificial_) infeasibility += xb_[r];
    sol.pivots = pivots_;
    if (infeasibility > 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    drive_out_artificials();

    std::vector<Rational> phase2(cols_.size());
    for (std::size_t j = 0; j < nv_; ++j) phase2[j] = problem_.objective[j];
    bool bounded = run(phase2, /*allow_artificial=*/false);
    sol.pivots = pivots_;
    if (!bounded) {
      sol.status = Status::Unbounded;
      return sol;
    }

    sol.status = Status::Optimal;
    sol.primal.assign(nv_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < nv_) sol.primal[basis_[r]] = xb_[r];
    sol.objective = 0;
    for (std::size_t j = 0; j < nv_; ++j) {
      sol.primal[j] += problem_.lower_bound(j);
      sol.objective += problem_.objective[j] * sol.primal[j];
    }
    auto y = duals(phase2);
    sol.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) sol.dual[i] = flipped_[i] ? Rational(-y[i]) : y[i];
    sol.basis = basis_;
    return sol;
  }

 private:
  void build() {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(nv_);
    b_.resize(m_);
    flipped_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational rhs = problem_.rhs[i];
      for (std::size_t j = 0; j < nv_; ++j) rhs -= problem_.rows[i][j] * problem_.lower_bound(j);
      flipped_[i] = rhs < 0;
      b_[i] = flipped_[i] ? Rational(-rhs) : rhs;
      for (std::size_t j = 0; j < nv_; ++j) {
        const Rational& a = problem_.rows[i][j];
        if (a != 0) entries[j].emplace_back(i, flipped_[i] ? Rational(-a) : a);
      }
    }
    for (auto& e : entries) cols_.push_back(make_column(e));

    basis_.assign(m_, 0);
    std::vector<bool> covered(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (problem_.senses[i] == Sense::Equal) continue;
      Rational coef = problem_.senses[i] == Sense::LessEqual ? 1 : -1;
      if (flipped_[i]) coef = -coef;
      if (coef > 0) {
        basis_[i] = cols_.size();
        covered[i] = true;
      }
      cols_.push_back(make_column({{i, coef}}));
    }
    first_artificial_ = cols_.size();
    for (std::size_t i = 0; i < m_; ++i) {
      if (covered[i]) continue;
      basis_[i] = cols_.size();
      cols_.push_back(make_column({{i, Rational(1)}}));
    }
    binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    for (std::size_t i = 0; i < m_; ++i) binv_[i][i] = 1;
    xb_ = b_;
  }

  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < m_; ++k)
        if (binv_[r][k] != 0) y[k] += cb * binv_[r][k];
    }
    return y;
  }

  std::vector<Rational> ftran(const SparseColumn& col) const {
    std::vector<Rational> u(m_, Rational(0));
    for (std::size_t t = 0; t < col.index.size(); ++t) {
      const std::size_t k = col.index[t];
      Rational a(col.num[t], col.den);
      a.canonicalize();
      for (std::size_t r = 0; r < m_; ++r)
        if (binv_[r][k] != 0) u[r] += binv_[r][k] * a;
    }
    return u;
  }

  // Returns false on unboundedness.
  bool run(const std::vector<Rational>& cost, bool allow_artificial) {
    std::vector<bool> in_basis(cols_.size(), false);
    for (std::size_t r = 0; r < m_; ++r) in_basis[basis_[r]] = true;
    const std::size_t limit = allow_artificial ? cols_.size() : first_artificial_;
    for (;;) {
      // Bland: the lowest-index column with negative reduced cost enters.
      auto y = duals(cost);
      Integer scale = 1;
      for (const auto& v : y) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
      std::vector<Integer> yi(m_);
      for (std::size_t k = 0; k < m_; ++k) yi[k] = y[k].get_num() * (scale / y[k].get_den());
      std::size_t entering = limit;
      Integer dot, lhs;
      for (std::size_t j = 0; j < limit; ++j) {
        if (in_basis[j]) continue;
        const SparseColumn& col = cols_[j];
        dot = 0;
        for (std::size_t t = 0; t < col.index.size(); ++t) dot += yi[col.index[t]] * col.num[t];
        // c_j - dot / (scale * den) < 0
        lhs = cost[j].get_num() * scale * col.den;
        if (lhs < cost[j].get_den() * dot) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;

      auto u = ftran(cols_[entering]);
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (u[r] <= 0) continue;
        Rational ratio = xb_[r] / u[r];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      in_basis[basis_[leave]] = false;
      in_basis[entering] = true;
      pivot(leave, entering, u);
    }
  }

  void pivot(std::size_t row, std::size_t entering, const std::vector<Rational>& u) {
    const Rational piv = u[row];
    for (auto& v : binv_[row]) v /= piv;
    xb_[row] /= piv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || u[r] == 0) continue;
      const Rational f = u[r];
      for (std::size_t k = 0; k < m_; ++k)
        if (binv_[row][k] != 0) binv_[r][k] -= f * binv_[row][k];
      xb_[r] -= f * xb_[row];
    }
    basis_[row] = entering;
    ++pivots_;
  }

  // Artificials still basic after a feasible phase 1 sit at zero. Pivot each
  // onto any non-artificial column with a nonzero entry in its row; if none
  // exists the row is redundant and the artificial stays, pinned at zero.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < first_artificial_) continue;
      std::vector<bool> in_basis(cols_.size(), false);
      for (std::size_t q = 0; q < m_; ++q) in_basis[basis_[q]] = true;
      const auto& row = binv_[r];
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (in_basis[j]) continue;
        const SparseColumn& col = cols_[j];
        Rational entry = 0;
        for (std::size_t t = 0; t < col.index.size(); ++t) entry += row[col.index[t]] * col.num[t];
        if (entry != 0) {
          pivot(r, j, ftran(col));
          break;
        }
      }
    }
  }

  const LpProblem& problem_;
  std::size_t m_ = 0;
  std::size_t nv_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<SparseColumn> cols_;
  std::vector<Rational> b_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Exact optimum of a minimization LP with duals from the final basis.
/// Deterministic: pivoting follows Bland's rule throughout.
inline LpSolution solve(const LpProblem& problem) { return detail::Simplex(problem).solve(); }

/// Rechecks an Optimal solution by arithmetic alone: primal feasibility,
/// dual sign and reduced-cost feasibility, and equal objectives.
inline bool verify_certificate(const LpProblem& p, const LpSolution& s) {
  if (s.status != Status::Optimal) return false;
  const std::size_t nv = p.variable_count();
  const std::size_t m = p.constraint_count();
  if (s.primal.size() != nv || s.dual.size() != m) return false;

  Rational primal_obj = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    if (s.primal[j] < p.lower_bound(j)) return false;
    primal_obj += p.objective[j] * s.primal[j];
  }
  if (primal_obj != s.objective) return false;

  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < nv; ++j) lhs += p.rows[i][j] * s.primal[j];
    switch (p.senses[i]) {
      case Sense::GreaterEqual:
        if (lhs < p.rhs[i] || s.dual[i] < 0) return false;
        break;
      case Sense::LessEqual:
        if (lhs > p.rhs[i] || s.dual[i] > 0) return false;
        break;
      case Sense::Equal:
        if (lhs != p.rhs[i]) return false;
        break;
    }
  }

  Rational dual_obj = 0;
  for (std::size_t i = 0; i < m; ++i) dual_obj += p.rhs[i] * s.dual[i];
  for (std::size_t j = 0; j < nv; ++j) {
    Rational reduced = p.objective[j];
    for (std::size_t i = 0; i < m; ++i) reduced -= s.dual[i] * p.rows[i][j];
    if (reduced < 0) return false;
    dual_obj += reduced * p.lower_bound(j);
  }
  return dual_obj == primal_obj;
}

/// Debug dump; not a stable interchange format.
inline std::string to_text(const LpProblem& p) {
  std::ostringstream out;
  out << "min";
  for (const auto& c : p.objective) out << ' ' << sigfrac::to_string(c);
  out << "\nst\n";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) out << (j ? " " : "") << sigfrac::to_string(p.rows[i][j]);
    out << (p.senses[i] == Sense::GreaterEqual ? " >= " : p.senses[i] == Sense::LessEqual ? " <= " : " = ")
        << sigfrac::to_string(p.rhs[i]) << "\n";
  }
  if (!p.lower_bounds.empty()) {
    out << "lb";
    for (const auto& l : p.lower_bounds) out << ' ' << sigfrac::to_string(l);
    out << "\n";
  }
  return out.str();
}

}  // namespace sigfrac::lp
