#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qmtest;

namespace {

// Brute-force best rational approximation: try every denominator.
mpq_class best_rational_oracle(double v, long max_den) {
  const mpq_class x(v);
  mpq_class best(static_cast<long>(std::floor(v)));
  for (long d = 1; d <= max_den; ++d) {
    const mpq_class scaled = x * d;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    for (mpz_class n : {fl, mpz_class(fl + 1)}) {
      mpq_class c(n, d);
      c.canonicalize();
      if (abs(c - x) < abs(best - x)) best = c;
    }
  }
  return best;
}

// Vertex enumeration oracle for bounded 2-D LPs: max c.x over {a_i . x <= b_i}.
std::optional<mpq_class> vertex_oracle(const std::vector<std::pair<QVec, mpq_class>>& rows, const QVec& c) {
  std::optional<mpq_class> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& [a, b] = rows[i];
      const auto& [e, f] = rows[j];
      const mpq_class det = a[0] * e[1] - a[1] * e[0];
      if (det == 0) continue;
      const QVec v{(b * e[1] - a[1] * f) / det, (a[0] * f - b * e[0]) / det};
      const bool feasible =
          std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return dot(r.first, v) <= r.second; });
      if (!feasible) continue;
      const mpq_class val = dot(c, v);
      if (!best || val > *best) best = val;
    }
  }
  return best;
}

}  // namespace

TEST(Scalar, ParsesRationalSpellingsExactly) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-0.125"), q(-1, 8));
  EXPECT_EQ(parse_rational("1e-3"), q(1, 1000));
  EXPECT_EQ(parse_rational("2.5e1"), q(25));
  EXPECT_EQ(parse_rational(" 6/-4 "), q(-3, 2));
  EXPECT_EQ(parse_rational("0.1"), q(1, 10));
}

TEST(Scalar, RejectsMalformedNumbers) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1e", "3/"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_scalar<ApproxField>("1.5x"), ParseError);
}

TEST(Scalar, SnapMatchesBruteForceBestApproximation) {
  EXPECT_EQ(snap_to_rational(std::numbers::pi, 1000), q(355, 113));
  EXPECT_EQ(snap_to_rational(0.5, 10), q(1, 2));
  for (double v : {std::numbers::pi, std::numbers::e, -std::numbers::sqrt2, 0.333, 1e-4, -7.77}) {
    for (long d : {1L, 7L, 100L, 997L}) {
      EXPECT_EQ(snap_to_rational(v, d), best_rational_oracle(v, d)) << v << " " << d;
    }
  }
}

TEST(Scalar, ApproxSignUsesTolerance) {
  const ApproxField f{1e-6};
  EXPECT_EQ(f.sign(5e-7), 0);
  EXPECT_EQ(f.sign(-5e-7), 0);
  EXPECT_EQ(f.sign(2e-6), 1);
  EXPECT_EQ(f.sign(-2e-6), -1);
  EXPECT_EQ(ExactField{}.sign(q(-1, 1000000000)), -1);
}

TEST(Scalar, MixedTolerancesAreRejected) {
  EXPECT_THROW(require_same_field(ApproxField{1e-9}, ApproxField{1e-6}), ModeMismatch);
  EXPECT_NO_THROW(require_same_field(ExactField{}, ExactField{}));
}

TEST(Scalar, CanonicalDirection) {
  const ExactField f;
  EXPECT_EQ(*canonical_direction(f, QVec{q(2), q(4)}), (QVec{q(1), q(2)}));
  EXPECT_EQ(*canonical_direction(f, QVec{q(-3, 2), q(3)}), (QVec{q(-1), q(2)}));
  EXPECT_FALSE(canonical_direction(f, QVec{q(0), q(0)}));
  const auto u = *canonical_direction(ApproxField{}, Vec<ApproxField>{3.0, 4.0});
  EXPECT_NEAR(u[0], 0.6, 1e-15);
  EXPECT_NEAR(u[1], 0.8, 1e-15);
}

TEST(LP, EqualitySystem) {
  LPProblem<Q> p{Q{}, 2, {}, {}};
  p.equal({q(1), q(1)}, q(1)).equal({q(1), q(-1)}, q(0)).equal({q(2), q(2)}, q(2));  // redundant third row
  const auto r = lp_feasible(p);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.point, (QVec{q(1, 2), q(1, 2)}));
}

TEST(LP, DetectsInfeasibility) {
  LPProblem<Q> p{Q{}, 1, {}, {}};
  p.less_eq({q(1)}, q(-1)).less_eq({q(-1)}, q(-1));  // x <= -1 and x >= 1
  EXPECT_EQ(lp_feasible(p).status, LPStatus::Infeasible);
}

TEST(LP, UnboundedReportsAnImprovingRay) {
  LPProblem<Q> p{Q{}, 2, {}, QVec{q(1), q(0)}};
  p.less_eq({q(0), q(1)}, q(0)).less_eq({q(-1), q(1)}, q(3));
  const auto r = lp_feasible(p);
  ASSERT_EQ(r.status, LPStatus::Unbounded);
  EXPECT_GT(dot(QVec{q(1), q(0)}, r.ray), 0);
  for (const auto& c : p.constraints) EXPECT_LE(dot(c.normal, r.ray), 0);
  for (const auto& c : p.constraints) EXPECT_LE(dot(c.normal, r.point), c.rhs);
}

TEST(LP, RejectsBadProblems) {
  LPProblem<Q> p{Q{}, 2, {}, {}};
  EXPECT_THROW(lp_feasible(p), std::invalid_argument);
  p.less_eq({q(1)}, q(0));
  EXPECT_THROW(lp_feasible(p), DimensionMismatch);
}

TEST(LP, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5), rhs(-4, 6), extra(0, 5);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::pair<QVec, mpq_class>> rows = {
        {{q(1), q(0)}, q(10)}, {{q(-1), q(0)}, q(10)}, {{q(0), q(1)}, q(10)}, {{q(0), q(-1)}, q(10)}};
    const long n = extra(rng);
    for (long i = 0; i < n; ++i) rows.push_back({{q(coef(rng)), q(coef(rng))}, q(rhs(rng))});
    const QVec c{q(coef(rng)), q(coef(rng))};

    LPProblem<Q> p{Q{}, 2, {}, c};
    for (const auto& [a, b] : rows) p.less_eq(a, b);
    const auto r = lp_feasible(p);
    const auto oracle = vertex_oracle(rows, c);
    if (!oracle) {
      EXPECT_EQ(r.status, LPStatus::Infeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(r.status, LPStatus::Optimal) << "trial " << trial;
    EXPECT_EQ(r.value, *oracle) << "trial " << trial;
    for (const auto& [a, b] : rows) EXPECT_LE(dot(a, r.point), b);
    ++optimal;

    // the float backend lands on the same optimum
    LPProblem<ApproxField> pf{ApproxField{1e-9}, 2, {}, Vec<ApproxField>{c[0].get_d(), c[1].get_d()}};
    for (const auto& [a, b] : rows) pf.less_eq({a[0].get_d(), a[1].get_d()}, b.get_d());
    const auto rf = lp_feasible(pf);
    ASSERT_EQ(rf.status, LPStatus::Optimal);
    EXPECT_NEAR(rf.value, oracle->get_d(), 1e-7);
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 10);
}
