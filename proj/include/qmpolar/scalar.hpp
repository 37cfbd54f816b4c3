#pragma once

// Scalar fields and small dense vector helpers.
//
// Every geometric object in the library is parameterised by a field policy:
// ExactField (GMP rationals, the default) or ApproxField (doubles compared
// against a tolerance). Objects carry their field value so that two objects
// built with different tolerances are detected at run time; objects of
// different field types cannot be mixed at all.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmpolar {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

class ModeMismatch : public std::invalid_argument {
 public:
  explicit ModeMismatch(const std::string& what)
      : std::invalid_argument("scalar mode mismatch: " + what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rationals. Values are kept in lowest terms.
struct ExactField {
  using value_type = mpq_class;
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "exact";

  [[nodiscard]] int sign(const mpq_class& v) const { return sgn(v); }
  bool operator==(const ExactField&) const = default;
};

/// Doubles with tolerance. "> 0" means "> eps"; (-eps, eps] counts as <= 0.
struct ApproxField {
  using value_type = double;
  static constexpr bool is_exact = false;
  static constexpr std::string_view name = "float";

  double eps = 1e-9;

  [[nodiscard]] int sign(double v) const {
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
  }
  bool operator==(const ApproxField&) const = default;
};

template <class F>
concept Field = requires(const F f, const typename F::value_type v) {
  { f.sign(v) } -> std::convertible_to<int>;
  { F::is_exact } -> std::convertible_to<bool>;
};

template <Field F>
using Scalar = typename F::value_type;

/// A point in R^d or a covector in (R^d)^*; both are plain coordinate lists.
template <Field F>
using Vec = std::vector<Scalar<F>>;

template <Field F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) throw ModeMismatch("objects built with different tolerances");
}

inline void require_dim(std::size_t got, std::size_t want,
                        std::string_view what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": got " + std::to_string(got) +
                            ", expected " + std::to_string(want));
  }
}

// ---------------------------------------------------------------------------
// Conversions

template <Field F>
Scalar<F> from_int(long v) {
  if constexpr (F::is_exact) {
    return mpq_class(v);
  } else {
    return static_cast<double>(v);
  }
}

template <Field F>
Scalar<F> from_ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if constexpr (F::is_exact) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <Field F>
Scalar<F> from_rational(const mpq_class& q) {
  if constexpr (F::is_exact) {
    return q;
  } else {
    return q.get_d();
  }
}

inline double to_double(const mpq_class& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

inline mpq_class to_rational(const mpq_class& v) { return v; }
inline mpq_class to_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  return mpq_class(v);
}

/// Best rational approximation of v with denominator <= max_denominator.
/// Walks the continued-fraction convergents of the exact binary value of v
/// and finishes with the best admissible semiconvergent.
inline mpq_class snap_to_rational(double v, long max_denominator) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot snap non-finite value");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  const mpq_class x(v);
  const mpz_class limit(max_denominator);
  if (x.get_den() <= limit) return x;

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > limit) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  const mpz_class k = (limit - q0) / q1;
  mpq_class semi(p0 + k * p1, q0 + k * q1);
  mpq_class conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(conv - x) <= abs(semi - x) ? conv : semi;
}

/// Parses "p/q", integers and plain decimal / scientific notation exactly.
inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class num = parse_rational(std::string_view(s).substr(0, slash));
    mpq_class den = parse_rational(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q = num / den;
    return q;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("malformed number '" + s + "'");
    }
  }
  if (digits.empty()) throw ParseError("malformed number '" + s + "'");
  long exponent = 0;
  if (pos < s.size()) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(pos + 1), &used);
      if (used != s.size() - pos - 1) throw ParseError("malformed exponent in '" + s + "'");
    } catch (const std::logic_error&) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
  }
  mpz_class mant(digits, 10);
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(mant, scale) : mpq_class(mant * scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

template <Field F>
Scalar<F> parse_scalar(std::string_view text) {
  if constexpr (F::is_exact) {
    return parse_rational(text);
  } else {
    if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
    try {
      std::size_t used = 0;
      const std::string s(text);
      const double v = std::stod(s, &used);
      if (used != s.size()) throw ParseError("malformed number '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
  }
}

inline std::string to_string(const mpq_class& v) { return v.get_str(); }
inline std::string to_string(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

template <class S>
std::string to_string(const std::vector<S>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Vector arithmetic

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  require_dim(b.size(), a.size(), "dot product");
  S acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
std::vector<S> operator-(const std::vector<S>& a, const std::vector<S>& b) {
  require_dim(b.size(), a.size(), "vector difference");
  std::vector<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
std::vector<S> operator+(const std::vector<S>& a, const std::vector<S>& b) {
  require_dim(b.size(), a.size(), "vector sum");
  std::vector<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S>
std::vector<S> operator*(const S& t, const std::vector<S>& a) {
  std::vector<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

template <class S>
std::vector<S> operator-(const std::vector<S>& a) {
  std::vector<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <Field F>
bool is_zero(const F& field, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar<F>& x) { return field.sign(x) == 0; });
}

template <Field F>
bool approx_equal(const F& field, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.sign(a[i] - b[i]) != 0) return false;
  }
  return true;
}

template <Field F>
Vec<F> unit_vector(std::size_t dim, std::size_t axis, int sign = 1) {
  Vec<F> e(dim, from_int<F>(0));
  e[axis] = from_int<F>(sign);
  return e;
}

/// Canonical representative of the ray through v: primitive integer vector
/// in exact mode, unit Euclidean norm in approximate mode. nullopt for 0.
template <Field F>
std::optional<Vec<F>> canonical_direction(const F& field, const Vec<F>& v) {
  if (is_zero(field, v)) return std::nullopt;
  if constexpr (F::is_exact) {
    mpz_class l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    mpz_class g = 0;
    for (const auto& x : v) {
      mpq_class y = x * l;
      g = gcd(g, y.get_num());
    }
    Vec<F> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = v[i] * l;
      r[i] /= g;
    }
    return r;
  } else {
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    Vec<F> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = v[i] / norm;
      if (std::abs(r[i]) <= field.eps) r[i] = 0.0;
    }
    return r;
  }
}

}  // namespace qmpolar
