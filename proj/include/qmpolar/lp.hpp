#pragma once

// Dense two-phase simplex with Bland's rule over free variables.
//
// Each free variable x_k is split into x_k = x_k^+ - x_k^-. Inequality rows
// get a slack; rows whose slack cannot start in the basis get an artificial
// variable. Instances here are tiny, so the tableau is a plain dense matrix.

#include "qmpolar/scalar.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qmpolar {

enum class Sense { LessEq, Equal };

template <Field F>
struct LinearConstraint {
  Vec<F> normal;
  Scalar<F> rhs;
  Sense sense = Sense::LessEq;
};

template <Field F>
struct LPProblem {
  F field{};
  std::size_t dim = 0;
  std::vector<LinearConstraint<F>> constraints;
  std::optional<Vec<F>> objective;  // maximised when present

  LPProblem& less_eq(Vec<F> normal, Scalar<F> rhs) {
    constraints.push_back({std::move(normal), std::move(rhs), Sense::LessEq});
    return *this;
  }
  LPProblem& equal(Vec<F> normal, Scalar<F> rhs) {
    constraints.push_back({std::move(normal), std::move(rhs), Sense::Equal});
    return *this;
  }
};

enum class LPStatus { Infeasible, Optimal, Unbounded };

/// Without an objective a feasible problem reports Optimal with value 0.
template <Field F>
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vec<F> point;  // feasible point (Optimal and Unbounded)
  Scalar<F> value{};
  Vec<F> ray;  // improving direction (Unbounded)

  [[nodiscard]] bool feasible() const { return status != LPStatus::Infeasible; }
};

namespace detail {

template <Field F>
class SimplexTableau {
 public:
  using S = Scalar<F>;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  SimplexTableau(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), a_(rows, std::vector<S>(cols, S(0))), b_(rows, S(0)), basis_(rows, npos),
        cost_(cols, S(0)) {}

  S& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  S& rhs(std::size_t r) { return b_[r]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  [[nodiscard]] std::size_t rows() const { return a_.size(); }
  [[nodiscard]] std::size_t cols() const { return cost_.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const S inv = S(1) / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    b_[r] *= inv;
    a_[r][c] = S(1);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const S factor = a_[i][c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= factor * a_[r][j];
      }
      b_[i] -= factor * b_[r];
      a_[i][c] = S(0);
    }
    const S dc = reduced_[c];
    if (dc != 0) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) reduced_[j] -= dc * a_[r][j];
      }
      reduced_[c] = S(0);
    }
    basis_[r] = c;
  }

  /// Installs a minimisation cost vector and prices out the basis.
  void set_cost(std::vector<S> cost) {
    cost_ = std::move(cost);
    reduced_ = cost_;
    for (std::size_t i = 0; i < rows(); ++i) {
      const S cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) reduced_[j] -= cb * a_[i][j];
    }
  }

  /// Runs Bland's rule to optimality. Returns the entering column that
  /// proved unboundedness, or npos on optimality.
  std::size_t minimise(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && field_.sign(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return npos;
      std::size_t leave = npos;
      S best{};
      for (std::size_t i = 0; i < rows(); ++i) {
        if (field_.sign(a_[i][enter]) <= 0) continue;
        S ratio = b_[i] / a_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) return enter;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  [[nodiscard]] std::vector<S> values() const {
    std::vector<S> v(cols(), S(0));
    for (std::size_t i = 0; i < rows(); ++i) v[basis_[i]] = b_[i];
    return v;
  }

  [[nodiscard]] const F& field() const { return field_; }

 private:
  F field_;
  std::vector<std::vector<S>> a_;
  std::vector<S> b_;
  std::vector<std::size_t> basis_;
  std::vector<S> cost_;
  std::vector<S> reduced_;
};

}  // namespace detail

template <Field F>
void validate(const LPProblem<F>& problem) {
  if (problem.dim == 0) throw std::invalid_argument("LP dimension must be positive");
  if (problem.constraints.empty() && !problem.objective) {
    throw std::invalid_argument("LP needs at least one constraint or an objective");
  }
  for (const auto& c : problem.constraints) require_dim(c.normal.size(), problem.dim, "LP constraint");
  if (problem.objective) require_dim(problem.objective->size(), problem.dim, "LP objective");
}

/// Decides feasibility and, when an objective is present, classifies the
/// maximisation as Optimal or Unbounded.
template <Field F>
LPResult<F> lp_feasible(const LPProblem<F>& problem) {
  using S = Scalar<F>;
  validate(problem);
  const F& field = problem.field;
  const std::size_t n = problem.dim;
  const std::size_t m = problem.constraints.size();
  constexpr std::size_t npos = detail::SimplexTableau<F>::npos;

  std::vector<std::size_t> slack(m, npos), artificial(m, npos);
  std::size_t cols = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.constraints[i].sense == Sense::LessEq) slack[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    if (c.sense == Sense::Equal || c.rhs < 0) artificial[i] = cols++;
  }

  detail::SimplexTableau<F> tab(field, m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    const S coef = c.rhs < 0 ? S(-1) : S(1);
    for (std::size_t k = 0; k < n; ++k) {
      tab.at(i, k) = coef * c.normal[k];
      tab.at(i, n + k) = -(coef * c.normal[k]);
    }
    if (slack[i] != npos) tab.at(i, slack[i]) = coef;
    tab.rhs(i) = coef * c.rhs;
    if (artificial[i] != npos) {
      tab.at(i, artificial[i]) = S(1);
      tab.basic(i) = artificial[i];
    } else {
      tab.basic(i) = slack[i];
    }
  }

  std::vector<bool> allowed(cols, true);
  if (first_artificial < cols) {
    std::vector<S> phase1(cols, S(0));
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = S(1);
    tab.set_cost(std::move(phase1));
    tab.minimise(allowed);
    S infeasibility = 0;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (tab.basic(i) >= first_artificial) infeasibility += tab.rhs(i);
    }
    if (field.sign(infeasibility) > 0) return {};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = npos;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (field.sign(tab.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == npos) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  std::size_t unbounded_col = npos;
  if (problem.objective) {
    std::vector<S> cost(cols, S(0));
    for (std::size_t k = 0; k < n; ++k) {
      cost[k] = -(*problem.objective)[k];
      cost[n + k] = (*problem.objective)[k];
    }
    tab.set_cost(std::move(cost));
    unbounded_col = tab.minimise(allowed);
  }

  const auto vals = tab.values();
  LPResult<F> result;
  result.point.assign(n, S(0));
  for (std::size_t k = 0; k < n; ++k) result.point[k] = vals[k] - vals[n + k];
  if (unbounded_col != npos) {
    std::vector<S> dir(cols, S(0));
    dir[unbounded_col] = S(1);
    for (std::size_t i = 0; i < tab.rows(); ++i) dir[tab.basic(i)] = -tab.at(i, unbounded_col);
    result.status = LPStatus::Unbounded;
    result.ray.assign(n, S(0));
    for (std::size_t k = 0; k < n; ++k) result.ray[k] = dir[k] - dir[n + k];
  } else {
    result.status = LPStatus::Optimal;
  }
  result.value = problem.objective ? dot(*problem.objective, result.point) : S(0);
  return result;
}

}  // namespace qmpolar
