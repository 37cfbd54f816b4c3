#pragma once

// Fuzz corpus and brute-force oracles shared by the test binaries.

#include "qmpolar/qmpolar.hpp"

#include <random>
#include <vector>

namespace qmtest {

using namespace qmpolar;
using Q = ExactField;
using QVec = Vec<Q>;
using QPair = Pair<Q>;
using QGraph = OperatorGraph<Q>;

inline mpq_class q(long n, long d = 1) { return from_ratio<Q>(n, d); }

inline QVec random_int_vec(std::mt19937_64& rng, std::size_t dim, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> u(lo, hi);
  QVec v(dim);
  for (auto& c : v) c = u(rng);
  return v;
}

inline QGraph random_graph(std::mt19937_64& rng, std::size_t dim, std::size_t max_pairs = 8) {
  std::uniform_int_distribution<std::size_t> count(1, max_pairs);
  std::vector<QPair> pairs;
  const auto n = count(rng);
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({random_int_vec(rng, dim), random_int_vec(rng, dim)});
  return {Q{}, dim, pairs};
}

/// The fixed fuzz corpus: graphs in dimension 1 to 3 with up to 8 pairs and
/// integer coordinates in [-3, 3].
inline std::vector<QGraph> fuzz_corpus(std::size_t count = 500, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::vector<QGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, dim(rng)));
  return out;
}

/// Probe points: base points are half-integers in [-4, 4] so that they fall
/// both on and between graph points.
inline QVec random_probe_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> u(-8, 8);
  QVec v(dim);
  for (auto& c : v) c = q(u(rng), 2);
  return v;
}

// Oracles written straight from the definitions, without LPs or cones.

inline bool literal_related(const QPair& p, const QPair& r) {
  const mpq_class a = dot(r.x - p.x, p.xstar);
  const mpq_class b = dot(p.x - r.x, r.xstar);
  return std::min(a, b) <= 0;
}

inline bool literal_quasimonotone(const QGraph& t) {
  for (const auto& p : t.pairs()) {
    for (const auto& r : t.pairs()) {
      if (!literal_related(p, r)) return false;
    }
  }
  return true;
}

inline bool literal_polar_member(const QGraph& t, const QPair& p) {
  for (const auto& r : t.pairs()) {
    if (!literal_related(p, r)) return false;
  }
  return true;
}

inline std::vector<QVec> brute_minty(const QGraph& t, const std::vector<QVec>& k) {
  std::vector<QVec> out;
  for (const auto& x : k) {
    bool ok = true;
    for (const auto& p : t.pairs()) {
      const bool y_in_k = std::find(k.begin(), k.end(), p.x) != k.end();
      if (y_in_k && dot(x - p.x, p.xstar) > 0) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace qmtest
