#pragma once

// Polyhedral cones and polyhedra.
//
//   HCone        {v : <a_i, v> <= 0 for all i}          (no normals: whole space)
//   VCone        {sum_j t_j g_j : t_j >= 0}              (no generators: {0})
//   HPolyhedron  {x : <a_i, x> <= b_i for all i}
//
// H -> V conversion uses the double-description method and is limited to
// small ambient dimension; every other operation is LP based and works in
// any dimension.

#include "qmpolar/lp.hpp"
#include "qmpolar/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmpolar {

inline constexpr std::size_t kMaxDoubleDescriptionDim = 4;

class DimensionGuardError : public std::runtime_error {
 public:
  explicit DimensionGuardError(std::size_t dim)
      : std::runtime_error("double-description conversion limited to dimension " +
                           std::to_string(kMaxDoubleDescriptionDim) + ", got " +
                           std::to_string(dim)) {}
};

template <Field F>
struct HCone {
  F field{};
  std::size_t dim = 0;
  std::vector<Vec<F>> normals;

  static HCone full(const F& field, std::size_t dim) { return {field, dim, {}}; }
};

template <Field F>
struct VCone {
  F field{};
  std::size_t dim = 0;
  std::vector<Vec<F>> generators;

  /// Canonical form: zero generators dropped, rays scaled canonically,
  /// duplicates removed, lexicographic order.
  static VCone make(const F& field, std::size_t dim, const std::vector<Vec<F>>& gens) {
    VCone c{field, dim, {}};
    for (const auto& g : gens) {
      require_dim(g.size(), dim, "cone generator");
      if (auto d = canonical_direction(field, g)) c.generators.push_back(std::move(*d));
    }
    std::sort(c.generators.begin(), c.generators.end());
    c.generators.erase(std::unique(c.generators.begin(), c.generators.end(),
                                   [&](const Vec<F>& a, const Vec<F>& b) {
                                     return approx_equal(field, a, b);
                                   }),
                       c.generators.end());
    return c;
  }
  static VCone zero(const F& field, std::size_t dim) { return {field, dim, {}}; }
};

template <Field F>
struct Halfspace {
  Vec<F> normal;
  Scalar<F> rhs;
};

template <Field F>
struct HPolyhedron {
  F field{};
  std::size_t dim = 0;
  std::vector<Halfspace<F>> constraints;
};

// ---------------------------------------------------------------------------
// Membership

template <Field F>
bool hcone_member(const HCone<F>& c, const Vec<F>& v) {
  require_dim(v.size(), c.dim, "hcone_member");
  return std::all_of(c.normals.begin(), c.normals.end(),
                     [&](const Vec<F>& a) { return c.field.sign(dot(a, v)) <= 0; });
}

template <Field F>
bool hpolyhedron_member(const HPolyhedron<F>& p, const Vec<F>& x) {
  require_dim(x.size(), p.dim, "hpolyhedron_member");
  return std::all_of(p.constraints.begin(), p.constraints.end(), [&](const Halfspace<F>& h) {
    return p.field.sign(dot(h.normal, x) - h.rhs) <= 0;
  });
}

/// Nonnegative multipliers t with sum_j t_j g_j = v, if any.
template <Field F>
std::optional<Vec<F>> vcone_multipliers(const VCone<F>& c, const Vec<F>& v) {
  require_dim(v.size(), c.dim, "vcone_member");
  const std::size_t m = c.generators.size();
  if (m == 0) {
    if (is_zero(c.field, v)) return Vec<F>{};
    return std::nullopt;
  }
  LPProblem<F> lp{c.field, m, {}, std::nullopt};
  for (std::size_t j = 0; j < m; ++j) lp.less_eq(unit_vector<F>(m, j, -1), Scalar<F>(0));
  for (std::size_t k = 0; k < c.dim; ++k) {
    Vec<F> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = c.generators[j][k];
    lp.equal(std::move(row), v[k]);
  }
  auto res = lp_feasible(lp);
  if (!res.feasible()) return std::nullopt;
  return res.point;
}

template <Field F>
bool vcone_member(const VCone<F>& c, const Vec<F>& v) {
  return vcone_multipliers(c, v).has_value();
}

/// A member v of the cone with <d, v> = 1, i.e. a witness that <d, .> > 0 is
/// attainable on the cone. Cones are homogeneous, so the normalisation loses
/// nothing.
template <Field F>
std::optional<Vec<F>> strictly_positive_point(const HCone<F>& c, const Vec<F>& d) {
  require_dim(d.size(), c.dim, "strictly_positive_point");
  if (is_zero(c.field, d)) return std::nullopt;
  LPProblem<F> lp{c.field, c.dim, {}, std::nullopt};
  for (const auto& a : c.normals) lp.less_eq(a, Scalar<F>(0));
  lp.equal(d, Scalar<F>(1));
  auto res = lp_feasible(lp);
  if (!res.feasible()) return std::nullopt;
  return res.point;
}

template <Field F>
std::optional<Vec<F>> strictly_positive_point(const VCone<F>& c, const Vec<F>& d) {
  require_dim(d.size(), c.dim, "strictly_positive_point");
  const std::size_t m = c.generators.size();
  if (m == 0 || is_zero(c.field, d)) return std::nullopt;
  LPProblem<F> lp{c.field, m, {}, std::nullopt};
  Vec<F> row(m);
  for (std::size_t j = 0; j < m; ++j) {
    lp.less_eq(unit_vector<F>(m, j, -1), Scalar<F>(0));
    row[j] = dot(d, c.generators[j]);
  }
  lp.equal(std::move(row), Scalar<F>(1));
  auto res = lp_feasible(lp);
  if (!res.feasible()) return std::nullopt;
  Vec<F> v(c.dim, Scalar<F>(0));
  for (std::size_t j = 0; j < m; ++j) v = v + res.point[j] * c.generators[j];
  return v;
}

/// Covector h with <h, g> <= 0 on every generator and <h, w> = 1; exists
/// exactly when w lies outside the cone (Farkas).
template <Field F>
std::optional<Vec<F>> separating_covector(const VCone<F>& c, const Vec<F>& w) {
  return strictly_positive_point(HCone<F>{c.field, c.dim, c.generators}, w);
}

// ---------------------------------------------------------------------------
// Canonical H-representations

/// Scales normals canonically, removes duplicates, then drops every normal
/// implied by the remaining ones (one LP per normal).
template <Field F>
HCone<F> remove_redundant(const HCone<F>& c) {
  std::vector<Vec<F>> normals;
  for (const auto& a : c.normals) {
    require_dim(a.size(), c.dim, "cone normal");
    if (auto d = canonical_direction(c.field, a)) normals.push_back(std::move(*d));
  }
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end(),
                            [&](const Vec<F>& a, const Vec<F>& b) {
                              return approx_equal(c.field, a, b);
                            }),
                normals.end());
  for (std::size_t i = 0; i < normals.size();) {
    HCone<F> others{c.field, c.dim, {}};
    others.normals.reserve(normals.size() - 1);
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (j != i) others.normals.push_back(normals[j]);
    }
    if (strictly_positive_point(others, normals[i])) {
      ++i;
    } else {
      normals.erase(normals.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return {c.field, c.dim, std::move(normals)};
}

/// N_C(x) for a finite point set C: one normal y - x per point y != x. C need
/// not be convex and x need not lie in C; over a finite set the normal cone
/// coincides with that of its convex hull.
template <Field F>
HCone<F> normal_cone_of_points(const F& field, const std::vector<Vec<F>>& points, const Vec<F>& x) {
  HCone<F> c{field, x.size(), {}};
  for (const auto& y : points) {
    require_dim(y.size(), x.size(), "normal_cone_of_points");
    Vec<F> d = y - x;
    if (!is_zero(field, d)) c.normals.push_back(std::move(d));
  }
  return remove_redundant(c);
}

// ---------------------------------------------------------------------------
// Double description

namespace detail {

template <Field F>
struct DDRay {
  Vec<F> v;
  std::vector<bool> tight;  // per processed constraint
};

template <Field F>
Vec<F> rescale(const F& field, Vec<F> v) {
  if (auto d = canonical_direction(field, v)) return std::move(*d);
  return v;
}

}  // namespace detail

/// Generators (extreme rays plus a +/- lineality basis) of an H-cone.
template <Field F>
VCone<F> hcone_extreme_rays(const HCone<F>& c) {
  using S = Scalar<F>;
  if (c.dim > kMaxDoubleDescriptionDim) throw DimensionGuardError(c.dim);
  const F& field = c.field;

  std::vector<Vec<F>> lineality;
  for (std::size_t k = 0; k < c.dim; ++k) lineality.push_back(unit_vector<F>(c.dim, k));
  std::vector<detail::DDRay<F>> rays;
  std::size_t processed = 0;

  for (const auto& a : c.normals) {
    require_dim(a.size(), c.dim, "cone normal");
    if (is_zero(field, a)) continue;

    auto lit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const Vec<F>& l) { return field.sign(dot(a, l)) != 0; });
    if (lit != lineality.end()) {
      Vec<F> l0 = *lit;
      lineality.erase(lit);
      S s = dot(a, l0);
      if (s > 0) {
        l0 = -l0;
        s = -s;
      }
      for (auto& l : lineality) {
        const S t = dot(a, l) / s;
        if (t != 0) l = l - t * l0;
      }
      for (auto& r : rays) {
        const S t = dot(a, r.v) / s;
        if (t != 0) r.v = detail::rescale(field, r.v - t * l0);
        r.tight.push_back(true);
      }
      // l0 was a lineality direction, so every earlier constraint is tight on it.
      detail::DDRay<F> fresh{detail::rescale(field, l0), std::vector<bool>(processed, true)};
      fresh.tight.push_back(false);
      rays.push_back(std::move(fresh));
      ++processed;
      continue;
    }

    std::vector<S> value(rays.size());
    std::vector<int> sgn(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      sgn[i] = field.sign(value[i]);
    }
    std::vector<detail::DDRay<F>> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn[i] > 0) continue;
      auto r = rays[i];
      r.tight.push_back(sgn[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sgn[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sgn[q] >= 0) continue;
        const auto& tp = rays[p].tight;
        const auto& tq = rays[q].tight;
        std::vector<bool> common(tp.size());
        for (std::size_t t = 0; t < tp.size(); ++t) common[t] = tp[t] && tq[t];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t t = 0; t < common.size(); ++t) {
            if (common[t] && !rays[r].tight[t]) {
              covers = false;
              break;
            }
          }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        Vec<F> v = value[p] * rays[q].v - value[q] * rays[p].v;
        common.push_back(true);
        next.push_back({detail::rescale(field, std::move(v)), std::move(common)});
      }
    }
    rays = std::move(next);
    ++processed;
  }

  std::vector<Vec<F>> gens;
  for (const auto& r : rays) gens.push_back(r.v);
  for (const auto& l : lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return VCone<F>::make(field, c.dim, gens);
}

// ---------------------------------------------------------------------------
// Containment and equality

template <Field F>
bool cone_contains(const HCone<F>& outer, const VCone<F>& inner) {
  require_same_field(outer.field, inner.field);
  require_dim(inner.dim, outer.dim, "cone_contains");
  return std::all_of(inner.generators.begin(), inner.generators.end(),
                     [&](const Vec<F>& g) { return hcone_member(outer, g); });
}

template <Field F>
bool cone_contains(const VCone<F>& outer, const VCone<F>& inner) {
  require_same_field(outer.field, inner.field);
  require_dim(inner.dim, outer.dim, "cone_contains");
  return std::all_of(inner.generators.begin(), inner.generators.end(),
                     [&](const Vec<F>& g) { return vcone_member(outer, g); });
}

/// inner is contained in outer iff no outer normal is strictly positive
/// somewhere on inner; one LP per outer normal, no conversion needed.
template <Field F>
bool cone_contains(const HCone<F>& outer, const HCone<F>& inner) {
  require_same_field(outer.field, inner.field);
  require_dim(inner.dim, outer.dim, "cone_contains");
  return std::none_of(outer.normals.begin(), outer.normals.end(), [&](const Vec<F>& a) {
    return strictly_positive_point(inner, a).has_value();
  });
}

template <Field F>
bool cone_contains(const VCone<F>& outer, const HCone<F>& inner) {
  require_same_field(outer.field, inner.field);
  require_dim(inner.dim, outer.dim, "cone_contains");
  return cone_contains(outer, hcone_extreme_rays(inner));
}

template <class A, class B>
bool cone_equal(const A& a, const B& b) {
  return cone_contains(a, b) && cone_contains(b, a);
}

// ---------------------------------------------------------------------------
// Polyhedra

enum class PolyhedronKind { Empty, Singleton, Larger };

template <Field F>
struct PolyhedronClass {
  PolyhedronKind kind = PolyhedronKind::Empty;
  Vec<F> point;  // the single point (Singleton) or some member (Larger)
};

/// Empty, a single point, or anything larger; 1 + 2*dim LPs.
template <Field F>
PolyhedronClass<F> polyhedron_classify(const HPolyhedron<F>& p) {
  LPProblem<F> lp{p.field, p.dim, {}, std::nullopt};
  for (const auto& h : p.constraints) lp.less_eq(h.normal, h.rhs);
  if (lp.constraints.empty()) return {PolyhedronKind::Larger, Vec<F>(p.dim, Scalar<F>(0))};
  auto base = lp_feasible(lp);
  if (!base.feasible()) return {PolyhedronKind::Empty, {}};
  for (std::size_t k = 0; k < p.dim; ++k) {
    lp.objective = unit_vector<F>(p.dim, k);
    auto hi = lp_feasible(lp);
    lp.objective = unit_vector<F>(p.dim, k, -1);
    auto lo = lp_feasible(lp);
    if (hi.status != LPStatus::Optimal || lo.status != LPStatus::Optimal ||
        p.field.sign(hi.value + lo.value) != 0) {
      return {PolyhedronKind::Larger, base.point};
    }
    base.point[k] = hi.value;
  }
  return {PolyhedronKind::Singleton, base.point};
}

}  // namespace qmpolar
