#include "majorana/matrix.h"

#include <gtest/gtest.h>

#include "oracles.h"

using namespace majorana;

TEST(Matrix, kron_puts_left_factor_on_most_significant_index) {
  const Matrix2<ExactScalar> x{{0, 1}, {1, 0}};
  const Matrix2<ExactScalar> id = Matrix2<ExactScalar>::identity();
  const ExactMatrix4 left = kron(x, id);
  EXPECT_EQ(left(0, 2), ExactScalar(1));
  EXPECT_EQ(left(1, 3), ExactScalar(1));
  EXPECT_EQ(left(0, 1), ExactScalar(0));
  const ExactMatrix4 right = kron(id, x);
  EXPECT_EQ(right(0, 1), ExactScalar(1));
  EXPECT_EQ(right(2, 3), ExactScalar(1));
}

TEST(Matrix, determinant_of_permutation_and_diagonal) {
  const ExactMatrix4 swap23{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(determinant(swap23), ExactScalar(-1));
  ExactMatrix4 d = ExactMatrix4::identity();
  d(2, 2) = ExactScalar::i();
  d(3, 3) = ExactScalar::i();
  EXPECT_EQ(determinant(d), ExactScalar(-1));
}

TEST(Matrix, adjoint_and_outer_product) {
  ExactMatrix4 a;
  a(0, 1) = ExactScalar::zeta();
  EXPECT_EQ(a.adjoint()(1, 0), ExactScalar::zeta().conj());
  const ExactVector4 e0 = ExactVector4::basis(0);
  const ExactVector4 e2 = ExactVector4::basis(2);
  const ExactMatrix4 p = outer(e0, e2);
  EXPECT_EQ(p * e2, e0);
  EXPECT_TRUE((p * e0).is_zero());
}

TEST(Matrix, to_float_agrees_with_float_products) {
  const ExactMatrix4 a{{1, ExactScalar::zeta(), 0, 0},
                       {0, ExactScalar::i(), 0, ExactScalar::inv_sqrt2()},
                       {ExactScalar::zeta_pow(3), 0, 1, 0},
                       {0, 0, -ExactScalar::i(), 1}};
  EXPECT_LE(max_abs_diff(to_float(a * a), to_float(a) * to_float(a)), 1e-14);
  EXPECT_LE(max_abs_diff(to_float(a.adjoint()), to_float(a).adjoint()), 1e-15);
}

TEST(Matrix, series_oracle_matches_closed_form_rotation) {
  const Matrix2<Complex> gen{{0, 1}, {-1, 0}};  // squares to -1
  const double t = 0.37;
  const Matrix2<Complex> expected{{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}};
  EXPECT_LE(max_abs_diff(oracle::expm(Complex(t) * gen), expected), 1e-14);
}
