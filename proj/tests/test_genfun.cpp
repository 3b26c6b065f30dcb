#include <gtest/gtest.h>

#include "generators.hpp"
#include "icvp/errors.hpp"
#include "icvp/genfun.hpp"

using namespace icvp;

namespace {

BiSeries random_series(testgen::Gen& gen, int t_cap, int u_cap) {
  BiSeries s(t_cap, u_cap);
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      s.at(i, n) = Rational(gen.uniform(-5, 5), gen.uniform(1, 4));
      s.at(i, n).canonicalize();
    }
  }
  return s;
}

}  // namespace

TEST(BiSeries, Basics) {
  BiSeries s(4, 3);
  s.at(1, 1) = 2;
  s.at(2, 3) = Rational(1, 2);
  EXPECT_FALSE(s.is_integral());
  EXPECT_THROW(s.integer_at(2, 3), NonIntegralCoefficient);
  EXPECT_EQ(s.integer_at(1, 1), 2);
  EXPECT_THROW(s.at(5, 0), InvalidArgs);
  EXPECT_EQ(s.negate_u().at(1, 1), -2);
  EXPECT_EQ(s.negate_u().at(2, 3), Rational(-1, 2));
  const BiSeries d = s.dilate(2);
  EXPECT_EQ(d.at(2, 2), 2);
  EXPECT_EQ(d.at(1, 1), 0);
  EXPECT_EQ(s.truncated(1, 1).at(1, 1), 2);
  EXPECT_THROW(s.truncated(5, 1), InsufficientPrecision);
}

TEST(BiSeries, ProductIsCommutativeAndAssociative) {
  testgen::Gen gen(21);
  for (int trial = 0; trial < 10; ++trial) {
    const BiSeries a = random_series(gen, 5, 4), b = random_series(gen, 5, 4), c = random_series(gen, 5, 4);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(LogSeries, GeometricSeries) {
  // log 1/(1 - u) = sum u^n / n.
  BiSeries s(3, 8);
  for (int n = 0; n <= 8; ++n) s.at(0, n) = 1;
  const BiSeries l = log_series(s);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(l.at(0, n), Rational(1, n));
  EXPECT_EQ(l.at(0, 0), 0);
  BiSeries bad(2, 2);
  EXPECT_THROW(log_series(bad), InvalidArgs);
}

TEST(Mobius, Values) {
  const std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0};
  for (int k = 1; k <= 16; ++k) EXPECT_EQ(mobius(k), expected[k - 1]) << k;
  EXPECT_THROW(mobius(0), InvalidArgs);
}

TEST(Psi, SlicesAreEquivariantSeries) {
  IcEngine engine;
  const BiSeries p = psi(engine, 12, 6);
  EXPECT_EQ(p.at(0, 0), 1);
  for (int i = 1; i <= 12; ++i) EXPECT_EQ(p.at(i, 0), 0);
  EXPECT_EQ(p.u_slice(1).poly(), IntPoly({1}));
  for (int i = 0; i <= 12; ++i) EXPECT_EQ(p.at(i, 2), i % 2 == 0 ? 1 : 0);
  for (int n = 2; n <= 6; ++n) {
    const GroupType g = GroupType::of(Family::A, n - 1);
    EXPECT_EQ(p.u_slice(n).poly(), engine.equivariant_series(g, 12).poly()) << n;
  }
}

TEST(Psi, SerialMatchesParallel) {
  IcEngine serial({.execution = Execution::serial});
  IcEngine parallel;
  EXPECT_EQ(psi(serial, 25, 10), psi(parallel, 25, 10));
  EXPECT_EQ(psi_flipped(serial, 25, 10), psi_flipped(parallel, 25, 10));
}

TEST(Psi, FlippedLowSlices) {
  IcEngine engine;
  const BiSeries f = psi_flipped(engine, 10, 3);
  EXPECT_EQ(f.u_slice(1).poly(), IntPoly({1}));
  // -t^2 / (1 - t^2).
  for (int i = 0; i <= 10; ++i) EXPECT_EQ(f.at(i, 2), (i >= 2 && i % 2 == 0) ? -1 : 0);
}

TEST(Psi, FunctionalEquation) {
  IcEngine engine;
  const Report r = check_functional_equation(engine, 40, 12);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
}

TEST(PlethysticExp, SingleFactors) {
  BiSeries e(6, 2);
  e.at(1, 0) = 1;
  const BiSeries geometric = plethystic_exp(e);
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(geometric.at(i, 0), 1);
  e.at(1, 0) = -1;
  const BiSeries linear = plethystic_exp(e);
  EXPECT_EQ(linear.at(0, 0), 1);
  EXPECT_EQ(linear.at(1, 0), -1);
  EXPECT_EQ(linear.at(2, 0), 0);
  BiSeries three(0, 4);
  three.at(0, 1) = 3;
  EXPECT_EQ(plethystic_exp(three).at(0, 2), 6);  // binom(4, 2)
}

TEST(PLog, KnownCoefficients) {
  IcEngine engine;
  const BiSeries e = plog(engine, 12, 6);
  EXPECT_EQ(e.at(0, 1), 1);
  for (int i = 1; i <= 12; ++i) EXPECT_EQ(e.at(i, 1), 0);
  EXPECT_EQ(e.at(2, 2), 1);
  EXPECT_EQ(e.at(3, 2), 0);
  EXPECT_EQ(e.at(4, 2), 1);
  EXPECT_TRUE(e.is_integral());
  const auto q2 = q_low_coefficients(e, 2);
  ASSERT_FALSE(q2.empty());
  EXPECT_EQ(q2[0], 1);
  for (std::size_t k = 1; k < q2.size(); ++k) EXPECT_EQ(q2[k], 0);
  EXPECT_THROW(q_low_coefficients(e, 1), InvalidArgs);
  EXPECT_THROW(plog(engine, 0, 3), InvalidArgs);
}

TEST(PLog, RoundTripAndConjectures) {
  IcEngine engine;
  const Report round = check_plog_roundtrip(engine, 20, 10);
  EXPECT_TRUE(round.pass) << round.to_json().dump();
  const Report conj = check_plog_conjectures(engine, 20, 10);
  EXPECT_TRUE(conj.pass) << conj.to_json().dump();
}

TEST(PLog, QLowRejectsNonDivisible) {
  BiSeries e(6, 3);
  e.at(1, 2) = 1;
  EXPECT_THROW(q_low_coefficients(e, 2), VerificationMismatch);
}
