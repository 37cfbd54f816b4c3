#pragma once

// Maximality certificates for finite quasimonotone operators.
//
// Maximality, pre-maximality and AE-maximality are statements quantified
// over all of R^d x R^d. On a finite grid they can be refuted by an explicit
// witness but never proved, so a clean run is reported as ConsistentOnGrid.
// Every witness carries enough data to be re-checked by evaluating the
// defining relations directly (see replay()), without trusting the LP.

#include "qmpolar/cones.hpp"
#include "qmpolar/operator.hpp"
#include "qmpolar/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmpolar {

class NotQuasimonotone : public std::invalid_argument {
 public:
  explicit NotQuasimonotone(const std::string& what)
      : std::invalid_argument("operator is not quasimonotone: " + what) {}
};

/// Finite scaffold of base points and probe covectors.
template <Field F>
struct Grid {
  std::size_t dim = 0;
  std::vector<Vec<F>> base_points;
  std::vector<Vec<F>> probe_covectors;

  void validate() const {
    if (dim == 0 || base_points.empty()) throw std::invalid_argument("grid must be nonempty");
    for (const auto& x : base_points) require_dim(x.size(), dim, "grid base point");
    for (const auto& v : probe_covectors) require_dim(v.size(), dim, "grid probe covector");
  }

  [[nodiscard]] Grid translated(const Vec<F>& x0) const {
    Grid g = *this;
    for (auto& x : g.base_points) x = x + x0;
    return g;
  }
};

/// Graph base points, midpoints of every two of them, and one point on each
/// side of the bounding box at a distance of one graph diameter. Probes are
/// the signed coordinate axes.
template <Field F>
Grid<F> default_grid(const OperatorGraph<F>& t) {
  using S = Scalar<F>;
  Grid<F> g{t.dim(), {}, {}};
  const auto dom = t.domain();
  std::vector<Vec<F>> pts = dom;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) pts.push_back(from_ratio<F>(1, 2) * (dom[i] + dom[j]));
  }
  if (!dom.empty()) {
    Vec<F> lo = dom.front(), hi = dom.front();
    for (const auto& x : dom) {
      for (std::size_t k = 0; k < t.dim(); ++k) {
        lo[k] = std::min(lo[k], x[k]);
        hi[k] = std::max(hi[k], x[k]);
      }
    }
    S diam = 0;
    for (std::size_t k = 0; k < t.dim(); ++k) diam = std::max(diam, S(hi[k] - lo[k]));
    if (t.field().sign(diam) == 0) diam = 1;
    const Vec<F> shift(t.dim(), diam);
    pts.push_back(lo - shift);
    pts.push_back(hi + shift);
  } else {
    pts.push_back(Vec<F>(t.dim(), S(0)));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  g.base_points = std::move(pts);
  for (std::size_t k = 0; k < t.dim(); ++k) {
    g.probe_covectors.push_back(unit_vector<F>(t.dim(), k, -1));
    g.probe_covectors.push_back(unit_vector<F>(t.dim(), k, 1));
  }
  return g;
}

/// FNV-1a over the textual form of the grid; stable across platforms.
template <Field F>
std::string grid_digest(const Grid<F>& g) {
  std::string text = std::to_string(g.dim) + "|";
  for (const auto& x : g.base_points) text += to_string(x) + ";";
  text += "|";
  for (const auto& v : g.probe_covectors) text += to_string(v) + ";";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

enum class Claim { Maximal, PreMaximal, AEMaximal, BipolarMember };

inline std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::Maximal: return "maximal";
    case Claim::PreMaximal: return "premaximal";
    case Claim::AEMaximal: return "ae-maximal";
    case Claim::BipolarMember: return "bipolar-member";
  }
  return "unknown";
}

enum class Verdict { ExactlyTrue, ExactlyFalse, RefutedWithWitness, ConsistentOnGrid };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExactlyTrue: return "ExactlyTrue";
    case Verdict::ExactlyFalse: return "ExactlyFalse";
    case Verdict::RefutedWithWitness: return "RefutedWithWitness";
    case Verdict::ConsistentOnGrid: return "ConsistentOnGrid";
  }
  return "unknown";
}

template <Field F>
struct Certificate {
  Claim claim = Claim::Maximal;
  Verdict verdict = Verdict::ConsistentOnGrid;
  // maximal / ae-maximal: one pair; premaximal: two pairs of the polar that
  // are not quasimonotonically related; bipolar-member: the probe and the
  // polar pair it fails to relate to.
  std::vector<Pair<F>> witness;
  // ae-maximal only: h with <h, g> <= 0 on the conic fibre and <h, w> > 0.
  std::optional<Vec<F>> separator;
  std::string grid_digest;
  std::size_t points_checked = 0;

  [[nodiscard]] bool refuted() const {
    return verdict == Verdict::ExactlyFalse || verdict == Verdict::RefutedWithWitness;
  }
};

namespace detail {

template <Field F>
void require_quasimonotone(const OperatorGraph<F>& t) {
  if (auto qm = is_quasimonotone(t); !qm) {
    throw NotQuasimonotone("pairs " + to_string(qm.witness->first.x) + "->" +
                           to_string(qm.witness->first.xstar) + " and " +
                           to_string(qm.witness->second.x) + "->" +
                           to_string(qm.witness->second.xstar) + " are not related");
  }
}

template <Field F>
std::vector<Vec<F>> sorted_unique(std::vector<Vec<F>> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Looks for a pair outside T that lies in the polar. One such pair proves T
/// is not maximal, since adding it keeps the graph quasimonotone. Candidates
/// at each base point: probe covectors and extreme rays of the polar fibre
/// in lexicographic order, then the zero covector.
template <Field F>
Certificate<F> certify_maximal(const OperatorGraph<F>& t, const Grid<F>& g) {
  g.validate();
  require_dim(g.dim, t.dim(), "grid");
  detail::require_quasimonotone(t);
  Certificate<F> cert{Claim::Maximal, Verdict::ConsistentOnGrid, {}, std::nullopt, grid_digest(g), 0};
  for (const auto& x : g.base_points) {
    ++cert.points_checked;
    std::vector<Vec<F>> candidates = g.probe_covectors;
    if (t.dim() <= kMaxDoubleDescriptionDim) {
      const auto rays = hcone_extreme_rays(polar_fiber(t, x));
      candidates.insert(candidates.end(), rays.generators.begin(), rays.generators.end());
    }
    candidates = detail::sorted_unique<F>(std::move(candidates));
    candidates.push_back(Vec<F>(t.dim(), Scalar<F>(0)));
    for (const auto& v : candidates) {
      Pair<F> p{x, v};
      if (!t.contains(p) && polar_member(t, p)) {
        cert.verdict = Verdict::ExactlyFalse;
        cert.witness = {std::move(p)};
        return cert;
      }
    }
  }
  return cert;
}

/// Searches the polar for a quasimonotonicity violation between fibres at
/// two grid points.
template <Field F>
Certificate<F> certify_premaximal(const OperatorGraph<F>& t, const Grid<F>& g) {
  g.validate();
  require_dim(g.dim, t.dim(), "grid");
  detail::require_quasimonotone(t);
  Certificate<F> cert{Claim::PreMaximal, Verdict::ConsistentOnGrid, {}, std::nullopt, grid_digest(g), 0};
  const auto& pts = g.base_points;
  std::vector<HCone<F>> fibers;
  fibers.reserve(pts.size());
  for (const auto& x : pts) fibers.push_back(polar_fiber(t, x));
  cert.points_checked = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      auto u = strictly_positive_point(fibers[i], pts[j] - pts[i]);
      if (!u) continue;
      auto w = strictly_positive_point(fibers[j], pts[i] - pts[j]);
      if (!w) continue;
      cert.verdict = Verdict::RefutedWithWitness;
      cert.witness = {Pair<F>{pts[i], std::move(*u)}, Pair<F>{pts[j], std::move(*w)}};
      return cert;
    }
  }
  return cert;
}

/// Compares cone(T)(x) united with the zero section against the polar fibre
/// at every grid point. A gap exhibits an extreme ray of the fibre outside
/// the conic fibre, with a separating covector.
template <Field F>
Certificate<F> certify_ae_maximal(const OperatorGraph<F>& t, const Grid<F>& g) {
  g.validate();
  require_dim(g.dim, t.dim(), "grid");
  detail::require_quasimonotone(t);
  Certificate<F> cert{Claim::AEMaximal, Verdict::ConsistentOnGrid, {}, std::nullopt, grid_digest(g), 0};
  const auto hull = conic_hull(t, true);
  for (const auto& x : g.base_points) {
    ++cert.points_checked;
    const auto fiber = polar_fiber(t, x);
    const auto conic = *hull.fiber(x);
    if (!cone_contains(fiber, conic)) {
      throw std::logic_error("conic fibre escapes the polar of a quasimonotone operator");
    }
    const auto rays = hcone_extreme_rays(fiber);
    for (const auto& w : rays.generators) {
      if (vcone_member(conic, w)) continue;
      cert.verdict = Verdict::ExactlyFalse;
      cert.witness = {Pair<F>{x, w}};
      cert.separator = separating_covector(conic, w);
      return cert;
    }
  }
  return cert;
}

/// Tries to show p is outside the bipolar by finding a polar pair at a grid
/// point that p fails to relate to.
template <Field F>
Certificate<F> bipolar_member_falsify(const OperatorGraph<F>& t, const Pair<F>& p, const Grid<F>& g) {
  g.validate();
  require_dim(g.dim, t.dim(), "grid");
  require_dim(p.x.size(), t.dim(), "probe point");
  require_dim(p.xstar.size(), t.dim(), "probe covector");
  Certificate<F> cert{Claim::BipolarMember, Verdict::ConsistentOnGrid, {}, std::nullopt, grid_digest(g), 0};
  for (const auto& y : g.base_points) {
    ++cert.points_checked;
    if (t.field().sign(dot(y - p.x, p.xstar)) <= 0) continue;
    auto w = strictly_positive_point(polar_fiber(t, y), p.x - y);
    if (!w) continue;
    cert.verdict = Verdict::RefutedWithWitness;
    cert.witness = {p, Pair<F>{y, std::move(*w)}};
    return cert;
  }
  return cert;
}

/// Re-verifies a certificate's witness by direct relation evaluation.
/// Certificates without a witness replay trivially.
template <Field F>
bool replay(const OperatorGraph<F>& t, const Certificate<F>& c) {
  if (!c.refuted()) return c.witness.empty();
  const F& f = t.field();
  switch (c.claim) {
    case Claim::Maximal: {
      if (c.witness.size() != 1) return false;
      const auto& p = c.witness[0];
      return !t.contains(p) && polar_member(t, p) && is_quasimonotone(with_pair(t, p));
    }
    case Claim::PreMaximal: {
      if (c.witness.size() != 2) return false;
      const auto& [p, q] = std::tie(c.witness[0], c.witness[1]);
      return polar_member(t, p) && polar_member(t, q) && !qm_related(f, p, q);
    }
    case Claim::AEMaximal: {
      if (c.witness.size() != 1 || !c.separator) return false;
      const auto& p = c.witness[0];
      const auto& h = *c.separator;
      if (!polar_member(t, p) || f.sign(dot(h, p.xstar)) <= 0) return false;
      const auto image = t.image(p.x);
      return std::all_of(image.begin(), image.end(),
                         [&](const Vec<F>& ystar) { return f.sign(dot(h, ystar)) <= 0; });
    }
    case Claim::BipolarMember: {
      if (c.witness.size() != 2) return false;
      return polar_member(t, c.witness[1]) && !qm_related(f, c.witness[0], c.witness[1]);
    }
  }
  return false;
}

}  // namespace qmpolar
