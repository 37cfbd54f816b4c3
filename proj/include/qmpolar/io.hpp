#pragma once

// JSON encodings.
//
//   operator        {"dim": d, "mode": "exact"|"float", "pairs": [{"x": [..], "xstar": [..]}, ...]}
//   h-cone          {"dim": d, "normals": [[..], ...]}
//   v-cone          {"dim": d, "generators": [[..], ...]}
//   h-polyhedron    {"dim": d, "constraints": [{"normal": [..], "rhs": ..}, ...]}
//   constraint set  {"dim": d, "points": [[..], ...]}
//   grid            {"dim": d, "base_points": [[..], ...], "probe_covectors": [[..], ...]}
//
// Exact values are written as "p/q" strings (or "p" for integers); float
// values as JSON numbers. Either spelling is accepted on input.

#include "qmpolar/certify.hpp"
#include "qmpolar/cones.hpp"
#include "qmpolar/mvip.hpp"
#include "qmpolar/operator.hpp"
#include "qmpolar/scalar.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qmpolar {

using json = nlohmann::json;

enum class Mode { Exact, Float };

struct LoadOptions {
  std::optional<Mode> mode;   // overrides the file's "mode" field
  double eps = 1e-9;
  long max_denominator = 0;   // > 0 snaps decimal inputs to nearby rationals
};

using AnyOperator = std::variant<OperatorGraph<ExactField>, OperatorGraph<ApproxField>>;

// ---------------------------------------------------------------------------
// Scalars and vectors

inline json scalar_to_json(const mpq_class& v) { return v.get_str(); }
inline json scalar_to_json(double v) { return v; }

template <Field F>
Scalar<F> scalar_from_json(const json& j, const LoadOptions& opts) {
  if (j.is_string()) return parse_scalar<F>(j.get<std::string>());
  if (j.is_number_integer()) return from_int<F>(j.get<long>());
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if constexpr (F::is_exact) {
      if (opts.max_denominator > 0) return snap_to_rational(v, opts.max_denominator);
      // the shortest round-trip decimal spelling, read exactly
      return parse_rational(j.dump());
    } else {
      return v;
    }
  }
  throw ParseError("expected a number, got " + j.dump());
}

template <class S>
json vec_to_json(const std::vector<S>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <Field F>
Vec<F> vec_from_json(const json& j, std::size_t dim, const LoadOptions& opts) {
  if (!j.is_array()) throw ParseError("expected an array of numbers, got " + j.dump());
  if (j.size() != dim) throw DimensionMismatch("vector of length " + std::to_string(j.size()) +
                                               " in dimension " + std::to_string(dim));
  Vec<F> v;
  for (const auto& x : j) v.push_back(scalar_from_json<F>(x, opts));
  return v;
}

template <class S>
json vec_list_to_json(const std::vector<std::vector<S>>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

template <Field F>
std::vector<Vec<F>> vec_list_from_json(const json& j, std::size_t dim, const LoadOptions& opts) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Vec<F>> out;
  for (const auto& v : j) out.push_back(vec_from_json<F>(v, dim, opts));
  return out;
}

inline std::size_t dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() <= 0) {
    throw ParseError("missing or invalid \"dim\"");
  }
  return j["dim"].get<std::size_t>();
}

inline const json& field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return j[key];
}

// ---------------------------------------------------------------------------
// Operators

template <Field F>
json pair_to_json(const Pair<F>& p) {
  return json{{"x", vec_to_json(p.x)}, {"xstar", vec_to_json(p.xstar)}};
}

template <Field F>
json to_json(const OperatorGraph<F>& t) {
  json pairs = json::array();
  for (const auto& p : t.pairs()) pairs.push_back(pair_to_json(p));
  return json{{"dim", t.dim()}, {"mode", std::string(F::name)}, {"pairs", std::move(pairs)}};
}

template <Field F>
OperatorGraph<F> operator_from_json(const json& j, const F& field, const LoadOptions& opts) {
  const std::size_t dim = dim_from_json(j);
  const auto& pairs = field_of(j, "pairs");
  if (!pairs.is_array()) throw ParseError("\"pairs\" must be an array");
  std::vector<Pair<F>> ps;
  for (const auto& p : pairs) {
    if (!p.is_object()) throw ParseError("pair must be an object");
    ps.push_back({vec_from_json<F>(field_of(p, "x"), dim, opts),
                  vec_from_json<F>(field_of(p, "xstar"), dim, opts)});
  }
  return {field, dim, std::move(ps)};
}

namespace detail {
inline bool has_decimal(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array() || j.is_object()) {
    for (const auto& x : j) {
      if (has_decimal(x)) return true;
    }
  }
  return false;
}
}  // namespace detail

/// Exact mode unless requested otherwise, declared otherwise, or the file
/// holds decimal floats and snapping is disabled.
inline Mode resolve_mode(const json& j, const LoadOptions& opts) {
  if (opts.mode) return *opts.mode;
  if (j.is_object() && j.contains("mode")) {
    const auto m = j["mode"].get<std::string>();
    if (m == "exact") return Mode::Exact;
    if (m == "float") return Mode::Float;
    throw ParseError("unknown mode \"" + m + "\"");
  }
  if (opts.max_denominator == 0 && detail::has_decimal(j)) return Mode::Float;
  return Mode::Exact;
}

inline AnyOperator load_operator(const json& j, const LoadOptions& opts = {}) {
  if (resolve_mode(j, opts) == Mode::Exact) return operator_from_json(j, ExactField{}, opts);
  return operator_from_json(j, ApproxField{opts.eps}, opts);
}

inline AnyOperator load_operator(const std::string& text, const LoadOptions& opts = {}) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return load_operator(j, opts);
}

/// Canonical file text: two-space indentation and a trailing newline.
template <Field F>
std::string serialize(const OperatorGraph<F>& t) {
  return to_json(t).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Cones, polyhedra, constraint sets, grids

template <Field F>
json to_json(const HCone<F>& c) {
  return json{{"dim", c.dim}, {"normals", vec_list_to_json(c.normals)}};
}

template <Field F>
json to_json(const VCone<F>& c) {
  return json{{"dim", c.dim}, {"generators", vec_list_to_json(c.generators)}};
}

template <Field F>
json to_json(const HPolyhedron<F>& p) {
  json cs = json::array();
  for (const auto& h : p.constraints) {
    cs.push_back(json{{"normal", vec_to_json(h.normal)}, {"rhs", scalar_to_json(h.rhs)}});
  }
  return json{{"dim", p.dim}, {"constraints", std::move(cs)}};
}

template <Field F>
HCone<F> hcone_from_json(const json& j, const F& field, const LoadOptions& opts = {}) {
  const auto dim = dim_from_json(j);
  return {field, dim, vec_list_from_json<F>(field_of(j, "normals"), dim, opts)};
}

template <Field F>
VCone<F> vcone_from_json(const json& j, const F& field, const LoadOptions& opts = {}) {
  const auto dim = dim_from_json(j);
  return VCone<F>::make(field, dim, vec_list_from_json<F>(field_of(j, "generators"), dim, opts));
}

template <Field F>
HPolyhedron<F> hpolyhedron_from_json(const json& j, const F& field, const LoadOptions& opts = {}) {
  const auto dim = dim_from_json(j);
  HPolyhedron<F> p{field, dim, {}};
  for (const auto& c : field_of(j, "constraints")) {
    p.constraints.push_back({vec_from_json<F>(field_of(c, "normal"), dim, opts),
                             scalar_from_json<F>(field_of(c, "rhs"), opts)});
  }
  return p;
}

template <Field F>
json to_json(const ConstraintSet<F>& k) {
  return json{{"dim", k.dim}, {"points", vec_list_to_json(k.points)}};
}

template <Field F>
ConstraintSet<F> constraint_set_from_json(const json& j, const LoadOptions& opts = {}) {
  const auto dim = dim_from_json(j);
  ConstraintSet<F> k{dim, vec_list_from_json<F>(field_of(j, "points"), dim, opts)};
  k.validate();
  return k;
}

template <Field F>
json to_json(const Grid<F>& g) {
  return json{{"dim", g.dim},
              {"base_points", vec_list_to_json(g.base_points)},
              {"probe_covectors", vec_list_to_json(g.probe_covectors)}};
}

template <Field F>
Grid<F> grid_from_json(const json& j, const LoadOptions& opts = {}) {
  const auto dim = dim_from_json(j);
  Grid<F> g{dim, vec_list_from_json<F>(field_of(j, "base_points"), dim, opts), {}};
  if (j.contains("probe_covectors")) g.probe_covectors = vec_list_from_json<F>(j["probe_covectors"], dim, opts);
  g.validate();
  return g;
}

template <Field F>
json to_json(const Certificate<F>& c) {
  json w = json::array();
  for (const auto& p : c.witness) w.push_back(pair_to_json(p));
  json out{{"claim", std::string(claim_name(c.claim))},
           {"verdict", std::string(verdict_name(c.verdict))},
           {"witness", std::move(w)},
           {"grid_digest", c.grid_digest},
           {"points_checked", c.points_checked}};
  if (c.separator) out["separator"] = vec_to_json(*c.separator);
  return out;
}

}  // namespace qmpolar
