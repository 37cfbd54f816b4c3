#pragma once

// Polarity-law checks over the fuzz corpus. Each law is evaluated on probe
// pairs (x, x*) and every disagreement is counted as a violation.

#include "support.hpp"

#include <map>
#include <string>

namespace qmtest {

struct LawReport {
  std::size_t graphs = 0;
  std::size_t probes = 0;
  std::map<std::string, std::size_t> violations;

  [[nodiscard]] std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [law, count] : violations) n += count;
    return n;
  }
};

inline void check_laws(const QGraph& t, std::mt19937_64& rng, LawReport& rep, std::size_t bases = 10,
                       std::size_t covectors = 10) {
  const std::size_t d = t.dim();
  const auto& pairs = t.pairs();
  const std::size_t half = (pairs.size() + 1) / 2;
  const QGraph a(Q{}, d, {pairs.begin(), pairs.begin() + static_cast<long>(half)});
  const QGraph b(Q{}, d, {pairs.begin() + static_cast<long>(half), pairs.end()});

  std::vector<QPair> zeros;
  for (int i = 0; i < 3; ++i) zeros.push_back({random_probe_point(rng, d), QVec(d, q(0))});
  const auto with_zeros = graph_union(t, QGraph(Q{}, d, zeros));

  std::uniform_int_distribution<long> pos(1, 5);
  std::vector<QPair> scaled_pairs;
  for (const auto& p : pairs) scaled_pairs.push_back({p.x, q(pos(rng), pos(rng)) * p.xstar});
  const QGraph scaled(Q{}, d, scaled_pairs);

  const auto x0 = random_int_vec(rng, d);
  const auto shifted = translate(t, x0);
  const auto dom = t.domain();

  auto fail = [&](const char* law) { ++rep.violations[law]; };
  for (const char* law : {"union", "antitone", "zero-section", "monotone-polar", "scaling", "translation",
                          "fibre-vs-pairwise", "literal"}) {
    rep.violations.try_emplace(law, 0);
  }

  ++rep.graphs;
  for (std::size_t i = 0; i < bases; ++i) {
    const QVec x = i < bases / 2 ? dom[i % dom.size()] : random_probe_point(rng, d);
    const auto fiber = polar_fiber(t, x);
    const auto fiber_shifted = polar_fiber(shifted, x + x0);
    for (std::size_t j = 0; j < covectors; ++j) {
      ++rep.probes;
      const QVec v = random_int_vec(rng, d);
      const QPair p{x, v};
      const bool in_t = polar_member(t, p).member;

      if (in_t != literal_polar_member(t, p)) fail("literal");
      if (in_t != (polar_member(a, p).member && polar_member(b, p).member)) fail("union");
      if (in_t && !polar_member(a, p).member) fail("antitone");
      if (polar_member(with_zeros, p).member != in_t) fail("zero-section");
      if (mono_polar_member(t, p).member && !in_t) fail("monotone-polar");
      if (polar_member(scaled, p).member != in_t ||
          polar_member(t, {x, q(pos(rng), pos(rng)) * v}).member != in_t) {
        fail("scaling");
      }
      if (polar_member(shifted, {x + x0, v}).member != in_t || hcone_member(fiber_shifted, v) != in_t) {
        fail("translation");
      }
      if (hcone_member(fiber, v) != in_t) fail("fibre-vs-pairwise");
    }
  }
}

}  // namespace qmtest
