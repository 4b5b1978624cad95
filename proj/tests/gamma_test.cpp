#include "majorana/gamma.h"

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.h"

namespace majorana::clifford {

namespace {

const ExactMatrix4 kId = ExactMatrix4::identity();

ExactMatrix4 diag(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}};
}

}  // namespace

TEST(Gamma, weyl_representation_blocks) {
  const ExactMatrix4 g0{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(gamma(0), g0);
  EXPECT_EQ(gamma(0) * gamma(0), kId);
  EXPECT_EQ(gamma(2) * gamma(2), -kId);
  EXPECT_EQ(gamma(3)(0, 2), ExactScalar(1));
  EXPECT_EQ(gamma(3)(2, 0), ExactScalar(-1));
  EXPECT_THROW(gamma(4), std::out_of_range);
  EXPECT_THROW(gamma(-1), std::out_of_range);
}

TEST(Gamma, derived_matrices) {
  EXPECT_EQ(gamma5(), diag(-1, -1, 1, 1));
  EXPECT_EQ(sigma_big(3), diag(1, -1, 1, -1));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(sigma_big(i), blocks(pauli(i), Matrix2<ExactScalar>(), Matrix2<ExactScalar>(), pauli(i)));
    EXPECT_EQ(alpha(i) * alpha(i), kId);
  }
  EXPECT_THROW(alpha(0), std::out_of_range);
  EXPECT_THROW(sigma_big(4), std::out_of_range);
}

TEST(Gamma, anticommutators) {
  const auto table = anticommutator_table();
  ASSERT_EQ(table.size(), 10u);
  for (const auto& r : table) {
    EXPECT_TRUE(r.passed) << r.mu << r.nu;
    EXPECT_EQ(r.expected, r.mu == r.nu ? (r.mu == 0 ? 2 : -2) : 0);
  }
  EXPECT_EQ(anticommutator(gamma(1), gamma(2)), ExactMatrix4());
  EXPECT_EQ(anticommutator(gamma(3), gamma(3)), ExactScalar(-2) * kId);
  const Report rep = clifford_check();
  EXPECT_EQ(rep.records().size(), 10u);
  EXPECT_TRUE(rep.all_passed());
}

TEST(Gamma, exp_generator_closed_forms) {
  const ExactMatrix4 g013 = gamma(0) * gamma(1) * gamma(3);
  ASSERT_EQ(g013 * g013, -kId);
  const ExactMatrix4 r3 = exp_generator(g013, QuarterTurns{1});
  EXPECT_EQ(r3, ExactScalar::inv_sqrt2() * (kId + g013));
  const ExactMatrix4 r1 = exp_generator(gamma(1), QuarterTurns{1});
  EXPECT_EQ(r1, ExactScalar::inv_sqrt2() * (kId + gamma(1)));
  EXPECT_EQ(exp_generator(g013, QuarterTurns{0}), kId);

  // Float-path series oracle.
  const double quarter = std::numbers::pi / 4;
  EXPECT_LE(max_abs_diff(to_float(r3), oracle::expm(Complex(quarter) * to_float(g013))), 1e-13);
  EXPECT_LE(max_abs_diff(to_float(r1), oracle::expm(Complex(quarter) * to_float(gamma(1)))), 1e-13);
}

TEST(Gamma, exp_generator_group_properties) {
  const ExactMatrix4 g013 = gamma(0) * gamma(1) * gamma(3);
  for (const ExactMatrix4& g : {gamma(1), g013}) {
    const ExactMatrix4 u = exp_generator(g, QuarterTurns{1});
    EXPECT_EQ(u * exp_generator(g, QuarterTurns{-1}), kId);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_EQ(determinant(u), ExactScalar(1));
  }
  // Half turn of a rotation generator is the generator itself.
  EXPECT_EQ(exp_generator(gamma(1), QuarterTurns{2}), gamma(1));
}

TEST(Gamma, exp_generator_rejects_non_involutory) {
  EXPECT_THROW(exp_generator(gamma(1) + gamma(0), QuarterTurns{1}), GeneratorNotInvolutoryError);
  EXPECT_THROW(exp_generator(to_float(ExactScalar(2) * gamma(0)), 0.3), GeneratorNotInvolutoryError);
  // gamma^0 squares to +1: fine in floats, not representable exactly.
  EXPECT_THROW(exp_generator(gamma(0), QuarterTurns{1}), std::domain_error);
  const double t = 0.4;
  const FloatMatrix4 boost = exp_generator(to_float(gamma(0)), t);
  EXPECT_LE(max_abs_diff(boost, oracle::expm(Complex(t) * to_float(gamma(0)))), 1e-13);
}

TEST(Gamma, trace_inner_and_basis) {
  EXPECT_EQ(trace_inner(kId, kId), ExactScalar(4));
  EXPECT_EQ(trace_inner(gamma(1), gamma(2)), ExactScalar(0));
  const auto basis = basis16();
  ASSERT_EQ(basis.size(), 16u);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      EXPECT_EQ(trace_inner(basis[a].matrix, basis[b].matrix), ExactScalar(a == b ? 4 : 0))
          << basis[a].label << " " << basis[b].label;
  const auto g5 = std::find_if(basis.begin(), basis.end(), [](const auto& e) { return e.label == "g5"; });
  ASSERT_NE(g5, basis.end());
  EXPECT_EQ(g5->matrix * g5->matrix, kId);
}

TEST(Gamma, float_rendering_matches_direct_construction) {
  for (int mu = 0; mu < 4; ++mu) EXPECT_LE(max_abs_diff(to_float(gamma(mu)), oracle::gamma(mu)), 1e-15);
  EXPECT_LE(max_abs_diff(to_float(gamma5()), oracle::gamma5()), 1e-15);
}

}  // namespace majorana::clifford
