#pragma once

// Finite multivalued operators T : R^d => R^d, identified with their graphs.
//
// The quasimonotone polar of T is the set of pairs p with
//     min{<y - p.x, p.xstar>, <p.x - y, y*>} <= 0   for every (y, y*) in T.
// Its fibre at x is the whole dual space when V_T(x) is empty and the normal
// cone N_{V_T(x)}(x) otherwise, where
//     V_T(x) = {y : <x - y, y*> > 0 for some y* in T(y)}.
// Because T is finite, V_T(x) is a finite point set and the fibre is an
// exactly computable polyhedral cone.

#include "qmpolar/cones.hpp"
#include "qmpolar/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qmpolar {

template <Field F>
struct Pair {
  Vec<F> x;
  Vec<F> xstar;

  bool operator==(const Pair&) const = default;
  bool operator<(const Pair& o) const {
    if (x != o.x) return x < o.x;
    return xstar < o.xstar;
  }
};

template <Field F>
class OperatorGraph {
 public:
  OperatorGraph() = default;

  /// Duplicate pairs are dropped (first occurrence kept); pairs that differ
  /// only by a positive covector scaling are distinct and kept.
  OperatorGraph(F field, std::size_t dim, std::vector<Pair<F>> pairs)
      : field_(std::move(field)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("operator dimension must be positive");
    for (auto& p : pairs) {
      require_dim(p.x.size(), dim_, "pair point");
      require_dim(p.xstar.size(), dim_, "pair covector");
      if (std::find(pairs_.begin(), pairs_.end(), p) == pairs_.end()) pairs_.push_back(std::move(p));
    }
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Pair<F>>& pairs() const { return pairs_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }

  [[nodiscard]] bool contains(const Pair<F>& p) const {
    return std::find(pairs_.begin(), pairs_.end(), p) != pairs_.end();
  }

  /// Distinct base points, sorted.
  [[nodiscard]] std::vector<Vec<F>> domain() const {
    std::vector<Vec<F>> d;
    for (const auto& p : pairs_) d.push_back(p.x);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }

  /// Base points carrying a nonzero covector.
  [[nodiscard]] std::vector<Vec<F>> effective_domain() const {
    std::vector<Vec<F>> d;
    for (const auto& p : pairs_) {
      if (!is_zero(field_, p.xstar)) d.push_back(p.x);
    }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }

  /// Covectors of T(x), in graph order.
  [[nodiscard]] std::vector<Vec<F>> image(const Vec<F>& x) const {
    std::vector<Vec<F>> out;
    for (const auto& p : pairs_) {
      if (p.x == x) out.push_back(p.xstar);
    }
    return out;
  }

 private:
  F field_{};
  std::size_t dim_ = 0;
  std::vector<Pair<F>> pairs_;
};

template <Field F>
OperatorGraph<F> graph_union(const OperatorGraph<F>& t, const OperatorGraph<F>& s) {
  require_same_field(t.field(), s.field());
  require_dim(s.dim(), t.dim(), "graph_union");
  auto pairs = t.pairs();
  pairs.insert(pairs.end(), s.pairs().begin(), s.pairs().end());
  return {t.field(), t.dim(), std::move(pairs)};
}

template <Field F>
OperatorGraph<F> with_pair(const OperatorGraph<F>& t, const Pair<F>& p) {
  auto pairs = t.pairs();
  pairs.push_back(p);
  return {t.field(), t.dim(), std::move(pairs)};
}

// ---------------------------------------------------------------------------
// Relations

/// (p.x, p.xstar) ~q (q.x, q.xstar): min{<q.x - p.x, p.xstar>, <p.x - q.x, q.xstar>} <= 0.
template <Field F>
bool qm_related(const F& field, const Pair<F>& p, const Pair<F>& q) {
  require_dim(q.x.size(), p.x.size(), "qm_related");
  const Vec<F> d = q.x - p.x;
  if (field.sign(dot(d, p.xstar)) <= 0) return true;
  return field.sign(-dot(d, q.xstar)) <= 0;
}

/// <p.x - q.x, p.xstar - q.xstar> >= 0.
template <Field F>
bool mono_related(const F& field, const Pair<F>& p, const Pair<F>& q) {
  require_dim(q.x.size(), p.x.size(), "mono_related");
  return field.sign(dot(p.x - q.x, p.xstar - q.xstar)) >= 0;
}

template <Field F>
struct RelationCheck {
  bool holds = true;
  std::optional<std::pair<Pair<F>, Pair<F>>> witness;  // first violating pair

  explicit operator bool() const { return holds; }
};

template <Field F, class Related>
RelationCheck<F> all_pairs_check(const OperatorGraph<F>& t, Related related) {
  const auto& ps = t.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!related(t.field(), ps[i], ps[j])) return {false, std::make_pair(ps[i], ps[j])};
    }
  }
  return {};
}

template <Field F>
RelationCheck<F> is_quasimonotone(const OperatorGraph<F>& t) {
  return all_pairs_check(t, [](const F& f, const Pair<F>& p, const Pair<F>& q) {
    return qm_related(f, p, q);
  });
}

template <Field F>
RelationCheck<F> is_monotone(const OperatorGraph<F>& t) {
  return all_pairs_check(t, [](const F& f, const Pair<F>& p, const Pair<F>& q) {
    return mono_related(f, p, q);
  });
}

template <Field F>
struct PolarCheck {
  bool member = true;
  std::optional<Pair<F>> witness;  // graph pair the probe fails to relate to

  explicit operator bool() const { return member; }
};

/// Membership of p in the quasimonotone polar of T.
template <Field F>
PolarCheck<F> polar_member(const OperatorGraph<F>& t, const Pair<F>& p) {
  require_dim(p.x.size(), t.dim(), "polar_member point");
  require_dim(p.xstar.size(), t.dim(), "polar_member covector");
  for (const auto& q : t.pairs()) {
    if (!qm_related(t.field(), p, q)) return {false, q};
  }
  return {};
}

/// Membership of p in the monotone polar of T.
template <Field F>
PolarCheck<F> mono_polar_member(const OperatorGraph<F>& t, const Pair<F>& p) {
  require_dim(p.x.size(), t.dim(), "mono_polar_member point");
  require_dim(p.xstar.size(), t.dim(), "mono_polar_member covector");
  for (const auto& q : t.pairs()) {
    if (!mono_related(t.field(), p, q)) return {false, q};
  }
  return {};
}

// ---------------------------------------------------------------------------
// V_T, fibres of the polar, E_T

/// Base points y with some y* in T(y) such that <x - y, y*> > 0; sorted, unique.
template <Field F>
std::vector<Vec<F>> v_set(const OperatorGraph<F>& t, const Vec<F>& x) {
  require_dim(x.size(), t.dim(), "v_set");
  std::vector<Vec<F>> out;
  for (const auto& p : t.pairs()) {
    if (t.field().sign(dot(x - p.x, p.xstar)) > 0) out.push_back(p.x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Fibre of the quasimonotone polar at x as an H-cone.
template <Field F>
HCone<F> polar_fiber(const OperatorGraph<F>& t, const Vec<F>& x) {
  const auto active = v_set(t, x);
  if (active.empty()) return HCone<F>::full(t.field(), t.dim());
  return normal_cone_of_points(t.field(), active, x);
}

/// E_T = {x : V_T(x) empty} = {x : <y*, x> <= <y*, y> for all (y, y*) in T}.
template <Field F>
HPolyhedron<F> e_polyhedron(const OperatorGraph<F>& t) {
  HPolyhedron<F> e{t.field(), t.dim(), {}};
  for (const auto& p : t.pairs()) {
    if (is_zero(t.field(), p.xstar)) continue;
    e.constraints.push_back({p.xstar, dot(p.xstar, p.x)});
  }
  return e;
}

// ---------------------------------------------------------------------------
// Conic hulls

/// cone(T), optionally united with the zero section X x {0}.
template <Field F>
struct ConicOperator {
  F field{};
  std::size_t dim = 0;
  std::map<Vec<F>, VCone<F>> fibers;
  bool includes_zero_section = false;

  /// Fibre at x; off the domain it is {0} with the zero section and empty
  /// (nullopt) without it.
  [[nodiscard]] std::optional<VCone<F>> fiber(const Vec<F>& x) const {
    if (auto it = fibers.find(x); it != fibers.end()) return it->second;
    if (includes_zero_section) return VCone<F>::zero(field, dim);
    return std::nullopt;
  }

  [[nodiscard]] std::vector<Vec<F>> effective_domain() const {
    std::vector<Vec<F>> out;
    for (const auto& [x, c] : fibers) {
      if (!c.generators.empty()) out.push_back(x);
    }
    return out;
  }

  /// The finite graph {(x, g)} over all fibre generators, plus (x, 0) at each
  /// listed extra point when the zero section is present.
  [[nodiscard]] OperatorGraph<F> generator_graph(const std::vector<Vec<F>>& extra = {}) const {
    std::vector<Pair<F>> pairs;
    for (const auto& [x, c] : fibers) {
      for (const auto& g : c.generators) pairs.push_back({x, g});
      if (c.generators.empty() || includes_zero_section) pairs.push_back({x, Vec<F>(dim, Scalar<F>(0))});
    }
    if (includes_zero_section) {
      for (const auto& x : extra) pairs.push_back({x, Vec<F>(dim, Scalar<F>(0))});
    }
    return {field, dim, std::move(pairs)};
  }
};

template <Field F>
ConicOperator<F> conic_hull(const OperatorGraph<F>& t, bool with_zero_section) {
  ConicOperator<F> c{t.field(), t.dim(), {}, with_zero_section};
  for (const auto& x : t.domain()) c.fibers.emplace(x, VCone<F>::make(t.field(), t.dim(), t.image(x)));
  return c;
}

/// Quasimonotonicity of a conic operator: no two base points x, y admit
/// x* in C(x) with <y - x, x*> > 0 and y* in C(y) with <x - y, y*> > 0.
/// The zero section never produces a violation.
template <Field F>
RelationCheck<F> conic_qm_check(const ConicOperator<F>& c) {
  std::vector<std::pair<Vec<F>, const VCone<F>*>> entries;
  for (const auto& [x, cone] : c.fibers) entries.emplace_back(x, &cone);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const auto& x = entries[i].first;
      const auto& y = entries[j].first;
      auto u = strictly_positive_point(*entries[i].second, y - x);
      if (!u) continue;
      auto w = strictly_positive_point(*entries[j].second, x - y);
      if (!w) continue;
      return {false, std::make_pair(Pair<F>{x, *u}, Pair<F>{y, *w})};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Translations and perturbations

/// Lateral translation: every pair shifted by (x0, 0).
template <Field F>
OperatorGraph<F> translate(const OperatorGraph<F>& t, const Vec<F>& x0) {
  require_dim(x0.size(), t.dim(), "translate");
  std::vector<Pair<F>> pairs;
  for (const auto& p : t.pairs()) pairs.push_back({p.x + x0, p.xstar});
  return {t.field(), t.dim(), std::move(pairs)};
}

/// Linear perturbation T + alpha: every pair shifted by (0, alpha).
template <Field F>
OperatorGraph<F> perturb(const OperatorGraph<F>& t, const Vec<F>& alpha) {
  require_dim(alpha.size(), t.dim(), "perturb");
  std::vector<Pair<F>> pairs;
  for (const auto& p : t.pairs()) pairs.push_back({p.x, p.xstar + alpha});
  return {t.field(), t.dim(), std::move(pairs)};
}

}  // namespace qmpolar
