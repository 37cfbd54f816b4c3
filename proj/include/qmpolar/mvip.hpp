#pragma once

// Minty variational inequalities over finite constraint sets:
//   M(T, K) = {x in K : <x - y, y*> <= 0 for all (y, y*) in T with y in K}.

#include "qmpolar/cones.hpp"
#include "qmpolar/operator.hpp"
#include "qmpolar/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qmpolar {

template <Field F>
struct ConstraintSet {
  std::size_t dim = 0;
  std::vector<Vec<F>> points;

  void validate() const {
    if (dim == 0 || points.empty()) throw std::invalid_argument("constraint set must be nonempty");
    for (const auto& p : points) require_dim(p.size(), dim, "constraint point");
  }
  [[nodiscard]] bool contains(const Vec<F>& x) const {
    return std::find(points.begin(), points.end(), x) != points.end();
  }
};

/// M(T, K) from the definition. The result is cross-checked against the
/// equivalent description {x in K : V_T(x) and K are disjoint}.
template <Field F>
std::vector<Vec<F>> minty_solve(const OperatorGraph<F>& t, const ConstraintSet<F>& k) {
  k.validate();
  require_dim(k.dim, t.dim(), "constraint set");
  std::vector<Vec<F>> direct, via_v;
  for (const auto& x : k.points) {
    const bool ok = std::all_of(t.pairs().begin(), t.pairs().end(), [&](const Pair<F>& p) {
      return !k.contains(p.x) || t.field().sign(dot(x - p.x, p.xstar)) <= 0;
    });
    if (ok) direct.push_back(x);
    const auto active = v_set(t, x);
    if (std::none_of(active.begin(), active.end(), [&](const Vec<F>& y) { return k.contains(y); })) {
      via_v.push_back(x);
    }
  }
  if (direct != via_v) throw std::logic_error("minty_solve: definition and V_T description disagree");
  return direct;
}

/// M(T^nu, K): x survives when <x - y, .> <= 0 on the whole polar fibre at
/// every y in K, i.e. {w in fibre(y), <x - y, w> = 1} is infeasible.
template <Field F>
std::vector<Vec<F>> minty_solve_polar(const OperatorGraph<F>& t, const ConstraintSet<F>& k) {
  k.validate();
  require_dim(k.dim, t.dim(), "constraint set");
  std::vector<HCone<F>> fibers;
  fibers.reserve(k.points.size());
  for (const auto& y : k.points) fibers.push_back(polar_fiber(t, y));
  std::vector<Vec<F>> out;
  for (const auto& x : k.points) {
    bool ok = true;
    for (std::size_t j = 0; j < k.points.size() && ok; ++j) {
      if (strictly_positive_point(fibers[j], x - k.points[j])) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

template <Field F>
struct MintyGlobal {
  PolyhedronKind kind = PolyhedronKind::Empty;
  Vec<F> point;             // Singleton
  HPolyhedron<F> polyhedron;  // always the full description of M(T, X) = E_T
};

/// M(T, X) = E_T, classified as empty, a single point, or larger.
template <Field F>
MintyGlobal<F> minty_global(const OperatorGraph<F>& t) {
  auto e = e_polyhedron(t);
  auto cls = polyhedron_classify(e);
  return {cls.kind, std::move(cls.point), std::move(e)};
}

}  // namespace qmpolar
