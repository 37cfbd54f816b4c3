#pragma once

// Built-in example operators and their expected-claims tables.
//
// Sampling rules (all deterministic):
//   zero      (k e1, 0) for integers k in [-m, m], in dimension `dim`
//   identity  (y, y) for y on concentric circles; see identity_points()
//   z-slice   (k, 1) for integers k in [-m, m]
//   step      fixed list {(-1,-1), (-1/2,-2), (0,5), (0,-5), (1,0), (2,0)}
//   sign      (k, sign k) for integers 0 < |k| <= m, plus (0, -1) and (0, 1)

#include "qmpolar/certify.hpp"
#include "qmpolar/cones.hpp"
#include "qmpolar/mvip.hpp"
#include "qmpolar/operator.hpp"
#include "qmpolar/scalar.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmpolar {

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioParams {
  std::size_t dim = 2;        // zero, identity
  long m = 2;                 // zero, z-slice, sign
  std::size_t n = 8;          // identity: points per circle
  std::string r = "1";        // identity: outer radius
  std::size_t rings = 1;      // identity: number of circles
  long max_denominator = 1'000'000;  // identity in exact mode
};

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"identity", "sign", "step", "z-slice", "zero"};
  return names;
}

template <Field F>
struct Scenario {
  std::string name;
  OperatorGraph<F> graph;
  std::optional<ConstraintSet<F>> constraints;
};

/// Identity sample points. Circle j (j = 1..rings-1) has radius r (1 - 2^-j)
/// and the last circle has radius r; each carries n points at angles 2 pi k / n.
/// In dimension 1 a circle is the pair {-rho, rho}. Exact mode snaps the
/// trigonometric values to rationals with the given denominator bound.
template <Field F>
std::vector<Vec<F>> identity_points(const F& field, const ScenarioParams& p) {
  (void)field;
  if (p.dim != 1 && p.dim != 2) throw std::invalid_argument("identity scenario supports dim 1 or 2");
  if (p.rings == 0) throw std::invalid_argument("identity scenario needs rings >= 1");
  if (p.dim == 2 && p.n < 3) throw std::invalid_argument("identity scenario needs n >= 3");
  const mpq_class r = parse_rational(p.r);
  if (sgn(r) <= 0) throw std::invalid_argument("identity radius must be positive");
  std::vector<mpq_class> radii;
  for (std::size_t j = 1; j < p.rings; ++j) {
    mpq_class shrink(1);
    mpz_mul_2exp(shrink.get_den_mpz_t(), shrink.get_den_mpz_t(), j);
    radii.push_back(r * (1 - shrink));
  }
  radii.push_back(r);

  std::vector<Vec<F>> pts;
  for (const auto& rho : radii) {
    if (p.dim == 1) {
      pts.push_back({from_rational<F>(-rho)});
      pts.push_back({from_rational<F>(rho)});
      continue;
    }
    for (std::size_t k = 0; k < p.n; ++k) {
      const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p.n);
      const double c = std::cos(theta), s = std::sin(theta);
      if constexpr (F::is_exact) {
        pts.push_back({rho * snap_to_rational(c, p.max_denominator), rho * snap_to_rational(s, p.max_denominator)});
      } else {
        pts.push_back({rho.get_d() * c, rho.get_d() * s});
      }
    }
  }
  return pts;
}

template <Field F>
Scenario<F> make_scenario(std::string_view name, const ScenarioParams& p, const F& field) {
  auto q = [](long num, long den = 1) { return from_ratio<F>(num, den); };
  std::vector<Pair<F>> pairs;
  if (name == "zero") {
    if (p.dim == 0 || p.m < 0) throw std::invalid_argument("zero scenario needs dim >= 1 and m >= 0");
    for (long k = -p.m; k <= p.m; ++k) {
      Vec<F> x(p.dim, q(0));
      x[0] = q(k);
      pairs.push_back({x, Vec<F>(p.dim, q(0))});
    }
    return {std::string(name), {field, p.dim, pairs}, {}};
  }
  if (name == "identity") {
    for (auto& y : identity_points(field, p)) pairs.push_back({y, y});
    return {std::string(name), {field, p.dim, pairs}, {}};
  }
  if (name == "z-slice") {
    if (p.m < 0) throw std::invalid_argument("z-slice scenario needs m >= 0");
    for (long k = -p.m; k <= p.m; ++k) pairs.push_back({{q(k)}, {q(1)}});
    return {std::string(name), {field, 1, pairs}, {}};
  }
  if (name == "step") {
    pairs = {{{q(-1)}, {q(-1)}}, {{q(-1, 2)}, {q(-2)}}, {{q(0)}, {q(5)}},
             {{q(0)}, {q(-5)}},  {{q(1)}, {q(0)}},      {{q(2)}, {q(0)}}};
    ConstraintSet<F> k{1, {{q(1)}, {q(5, 4)}, {q(3, 2)}, {q(7, 4)}, {q(2)}}};
    return {std::string(name), {field, 1, pairs}, k};
  }
  if (name == "sign") {
    if (p.m < 1) throw std::invalid_argument("sign scenario needs m >= 1");
    for (long k = -p.m; k <= p.m; ++k) {
      if (k == 0) continue;
      pairs.push_back({{q(k)}, {q(k > 0 ? 1 : -1)}});
    }
    pairs.push_back({{q(0)}, {q(-1)}});
    pairs.push_back({{q(0)}, {q(1)}});
    return {std::string(name), {field, 1, pairs}, {}};
  }
  throw UnknownScenario("unknown scenario \"" + std::string(name) + "\"");
}

/// Regular 1-D grid lo, lo + step, ..., hi (hi included when reached exactly).
template <Field F>
std::vector<Vec<F>> line_grid(const Scalar<F>& lo, const Scalar<F>& hi, const Scalar<F>& step) {
  if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
  std::vector<Vec<F>> out;
  for (Scalar<F> x = lo; x <= hi; x += step) out.push_back({x});
  return out;
}

/// Angle spanned by a cone in the plane: 0 for a ray, 2 pi for the whole
/// plane, and pi or more when the cone contains a line.
inline double angular_width(const HCone<ApproxField>& c) {
  if (c.dim != 2) throw std::invalid_argument("angular_width needs a planar cone");
  const auto rays = hcone_extreme_rays(c).generators;
  if (rays.empty()) {
    return strictly_positive_point(c, Vec<ApproxField>{1.0, 0.0}) ||
                   strictly_positive_point(c, Vec<ApproxField>{0.0, 1.0})
               ? 2 * std::numbers::pi
               : 0.0;
  }
  if (rays.size() == 1) return 0.0;
  if (rays.size() == 2) {
    const auto& a = rays[0];
    const auto& b = rays[1];
    const double cosang = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
    return std::acos(std::clamp(cosang, -1.0, 1.0));
  }
  return std::numbers::pi;  // a line plus a ray, or a halfplane
}

// ---------------------------------------------------------------------------
// Expected-claims tables

struct ClaimResult {
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

template <Field F>
std::string pair_text(const Pair<F>& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.xstar) + ")";
}

template <Field F>
std::string certificate_text(const Certificate<F>& c) {
  std::string s(verdict_name(c.verdict));
  for (const auto& p : c.witness) s += " " + pair_text(p);
  return s;
}

template <Field F>
std::string points_text(const std::vector<Vec<F>>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + to_string(pts[i]);
  return s + "}";
}

inline std::string kind_text(PolyhedronKind k) {
  switch (k) {
    case PolyhedronKind::Empty: return "empty";
    case PolyhedronKind::Singleton: return "singleton";
    case PolyhedronKind::Larger: return "larger";
  }
  return "?";
}

struct Table {
  std::vector<ClaimResult> rows;
  void add(std::string claim, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    rows.push_back({std::move(claim), std::move(expected), std::move(actual), ok});
  }
  void add_bool(std::string claim, bool expected, bool actual) {
    add(std::move(claim), bool_text(expected), bool_text(actual));
  }
};

template <Field F>
bool fibers_full_on(const OperatorGraph<F>& t, const std::vector<Vec<F>>& pts) {
  const auto full = HCone<F>::full(t.field(), t.dim());
  for (const auto& x : pts) {
    if (!cone_contains(polar_fiber(t, x), full)) return false;
  }
  return true;
}

inline std::vector<ClaimResult> verify_zero() {
  using F = ExactField;
  const F f;
  Table tb;
  const auto zero = make_scenario("zero", ScenarioParams{.dim = 2}, f).graph;
  const auto grid = default_grid(zero).base_points;
  tb.add_bool("zero section: polar fibre is the whole space on the grid", true, fibers_full_on(zero, grid));

  const OperatorGraph<F> single(f, 2, {{{mpq_class(1), mpq_class(-2)}, {mpq_class(0), mpq_class(0)}}});
  tb.add_bool("single zero pair: polar fibre is the whole space on the grid", true, fibers_full_on(single, grid));

  const auto zs = make_scenario("z-slice", {}, f).graph;
  const auto half = line_grid<F>(mpq_class(-7, 2), mpq_class(7, 2), mpq_class(1, 2));
  bool zero_in_polar = true;
  for (const auto& x : half) zero_in_polar = zero_in_polar && polar_member(zs, {x, {mpq_class(0)}}).member;
  tb.add_bool("z-slice: (x, 0) lies in the polar for every grid x", true, zero_in_polar);

  const auto zero1 = make_scenario("zero", ScenarioParams{.dim = 1, .m = 3}, f).graph;
  bool absorbed = true;
  const auto merged = graph_union(zs, zero1);
  for (const auto& x : half) absorbed = absorbed && cone_equal(polar_fiber(merged, x), polar_fiber(zs, x));
  tb.add_bool("z-slice: adding zero-covector pairs leaves the polar unchanged", true, absorbed);
  return tb.rows;
}

inline std::vector<ClaimResult> verify_identity() {
  Table tb;
  {
    using F = ExactField;
    const F f;
    const auto circle = make_scenario("identity", {}, f).graph;
    const Vec<F> e1{mpq_class(1), mpq_class(0)};
    tb.add_bool("unit circle sample is monotone", true, is_monotone(circle).holds);
    tb.add("unit circle sample: V at (1,0)", "{}", points_text<F>(v_set(circle, e1)));
    tb.add_bool("polar fibre at 0 is the whole space", true,
                fibers_full_on(circle, {Vec<F>{mpq_class(0), mpq_class(0)}}));
  }
  {
    using F = ApproxField;
    const F f{1e-9};
    const Vec<F> x{1.0, 0.0};
    double prev = 0;
    for (std::size_t n : {64, 128}) {
      const auto t = make_scenario("identity", ScenarioParams{.dim = 2, .n = n, .rings = 11}, f).graph;
      const auto fib = polar_fiber(t, x);
      const std::string tag = "n=" + std::to_string(n) + ": ";
      tb.add_bool(tag + "fibre at (1,0) contains (1,0)", true, hcone_member(fib, x));
      tb.add_bool(tag + "fibre at (1,0) contains (0,1)", false, hcone_member(fib, {0.0, 1.0}));
      tb.add_bool(tag + "fibre at (1,0) contains (-1,0)", false, hcone_member(fib, {-1.0, 0.0}));
      const double w = angular_width(fib);
      if (n == 128) {
        tb.add_bool("fibre width does not grow from n=64 to n=128", true, w <= prev);
        tb.add_bool("fibre width at n=128 is below 0.2 rad", true, w < 0.2);
      }
      prev = w;
    }
  }
  {
    using F = ExactField;
    const F f;
    std::vector<Pair<F>> pairs;
    for (long k = -2; k <= 2; ++k) pairs.push_back({{mpq_class(k)}, {mpq_class(k)}});
    const OperatorGraph<F> id1(f, 1, pairs);
    const auto grid = default_grid(id1);
    for (long a : {0L, 1L, -1L}) {
      const auto t = perturb(id1, Vec<F>{mpq_class(a)});
      const auto c = certify_ae_maximal(t, grid);
      tb.add("line identity + " + std::to_string(a) + ": ae-maximal verdict", "ExactlyFalse",
             std::string(verdict_name(c.verdict)));
      tb.add_bool("line identity + " + std::to_string(a) + ": witness replays", true, replay(t, c));
    }
  }
  return tb.rows;
}

inline std::vector<ClaimResult> verify_zslice() {
  using F = ExactField;
  const F f;
  Table tb;
  const auto t = make_scenario("z-slice", {}, f).graph;
  const Vec<F> half{mpq_class(1, 2)};
  tb.add_bool("monotone", true, is_monotone(t).holds);
  tb.add_bool("quasimonotone", true, is_quasimonotone(t).holds);
  tb.add("V at 1/2", "{(-2), (-1), (0)}", points_text<F>(v_set(t, half)));
  tb.add_bool("polar fibre at 1/2 equals cone{1}", true,
              cone_equal(polar_fiber(t, half), VCone<F>::make(f, 1, {{mpq_class(1)}})));
  tb.add_bool("(1/2, 1) in polar", true, polar_member(t, {half, {mpq_class(1)}}).member);

  const Grid<F> half_grid{1, line_grid<F>(mpq_class(-5, 2), mpq_class(5, 2), mpq_class(1)), {}};
  tb.add("premaximal on half-integer grid", "ConsistentOnGrid",
         certificate_text(certify_premaximal(t, half_grid)));

  const Grid<F> at_half{1, {half}, {{mpq_class(-1)}, {mpq_class(1)}}};
  const auto ae = certify_ae_maximal(t, at_half);
  tb.add("ae-maximal on grid {1/2}", "ExactlyFalse ((1/2), (1))", certificate_text(ae));
  tb.add_bool("ae-maximal witness replays", true, replay(t, ae));

  const auto mx = certify_maximal(t, default_grid(t));
  tb.add("maximal on default grid", "ExactlyFalse", std::string(verdict_name(mx.verdict)));
  tb.add_bool("maximal witness replays", true, replay(t, mx));
  const auto mx_half = certify_maximal(t, at_half);
  tb.add("maximal on grid {1/2}", "ExactlyFalse ((1/2), (1))", certificate_text(mx_half));

  const auto bp = bipolar_member_falsify(t, {{mpq_class(0)}, {mpq_class(-1)}}, half_grid);
  tb.add("(0, -1) against the polar", "RefutedWithWitness",
         std::string(verdict_name(bp.verdict)));
  tb.add_bool("bipolar witness replays", true, replay(t, bp));

  const auto e = minty_global(t);
  tb.add("E classification", "larger", kind_text(e.kind));
  LPProblem<F> sup{f, 1, {}, Vec<F>{mpq_class(1)}};
  for (const auto& h : e.polyhedron.constraints) sup.less_eq(h.normal, h.rhs);
  const auto r = lp_feasible(sup);
  tb.add("sup of E", "-2", r.status == LPStatus::Optimal ? to_string(r.value) : "unbounded");
  return tb.rows;
}

inline std::vector<ClaimResult> verify_step() {
  using F = ExactField;
  const F f;
  Table tb;
  const auto sc = make_scenario("step", {}, f);
  const auto& t = sc.graph;
  tb.add_bool("quasimonotone", true, is_quasimonotone(t).holds);

  const auto grid_pts = line_grid<F>(mpq_class(-2), mpq_class(2), mpq_class(1, 2));
  bool closed_form = true;
  for (const auto& x : grid_pts) {
    const int s = sgn(x[0]);
    const auto fib = polar_fiber(t, x);
    const bool ok = s == 0 ? cone_contains(fib, HCone<F>::full(f, 1))
                           : cone_equal(fib, VCone<F>::make(f, 1, {{mpq_class(s)}}));
    closed_form = closed_form && ok;
  }
  tb.add_bool("polar fibres match x x* >= 0 on [-2, 2]", true, closed_form);

  const Grid<F> grid{1, grid_pts, {{mpq_class(-1)}, {mpq_class(1)}}};
  tb.add("premaximal on [-2, 2]", "ConsistentOnGrid", certificate_text(certify_premaximal(t, grid)));

  const auto& k = *sc.constraints;
  const auto mt = minty_solve(t, k);
  const auto mp = minty_solve_polar(t, k);
  tb.add("M(T, K)", points_text<F>(k.points), points_text<F>(mt));
  tb.add("M(polar, K)", "{(1)}", points_text<F>(mp));
  tb.add_bool("M(polar, K) is a proper subset of M(T, K)", true,
              mp.size() < mt.size() && std::includes(mt.begin(), mt.end(), mp.begin(), mp.end()));

  const auto e = minty_global(t);
  tb.add("E classification", "singleton (0)", kind_text(e.kind) + " " + to_string(e.point));
  tb.add("E from the polar side on [-2, 2]", "{(0)}",
         points_text<F>(minty_solve_polar(t, ConstraintSet<F>{1, grid_pts})));
  return tb.rows;
}

inline std::vector<ClaimResult> verify_sign() {
  using F = ExactField;
  const F f;
  Table tb;
  const auto t = make_scenario("sign", {}, f).graph;
  const Grid<F> grid{1, line_grid<F>(mpq_class(-2), mpq_class(2), mpq_class(1)), {{mpq_class(-1)}, {mpq_class(1)}}};
  tb.add_bool("monotone", true, is_monotone(t).holds);
  tb.add("ae-maximal on integers in [-2, 2]", "ConsistentOnGrid", certificate_text(certify_ae_maximal(t, grid)));
  tb.add("premaximal on integers in [-2, 2]", "ConsistentOnGrid", certificate_text(certify_premaximal(t, grid)));
  const auto t1 = perturb(t, Vec<F>{mpq_class(1)});
  tb.add_bool("sign + 1 is quasimonotone", true, is_quasimonotone(t1).holds);
  const auto c = certify_ae_maximal(t1, grid);
  tb.add("sign + 1: ae-maximal verdict", "ExactlyFalse", std::string(verdict_name(c.verdict)));
  tb.add_bool("sign + 1: witness replays", true, replay(t1, c));
  return tb.rows;
}

}  // namespace detail

inline std::vector<ClaimResult> verify_scenario(std::string_view name) {
  if (name == "zero") return detail::verify_zero();
  if (name == "identity") return detail::verify_identity();
  if (name == "z-slice") return detail::verify_zslice();
  if (name == "step") return detail::verify_step();
  if (name == "sign") return detail::verify_sign();
  throw UnknownScenario("unknown scenario \"" + std::string(name) + "\"");
}

}  // namespace qmpolar
