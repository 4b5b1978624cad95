#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "majorana/matrix.h"
#include "majorana/report.h"

// Dirac gamma matrices in the Weyl (chiral) representation, with metric
// signature (+,-,-,-).
namespace majorana::clifford {

class GeneratorNotInvolutoryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Pauli matrices; k = 0 is the 2x2 identity.
Matrix2<ExactScalar> pauli(int k);

// 4x4 matrix from 2x2 blocks [[a, b], [c, d]].
template <class T>
Matrix4<T> blocks(const Matrix2<T>& a, const Matrix2<T>& b, const Matrix2<T>& c, const Matrix2<T>& d) {
  Matrix4<T> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r(i, j) = a(i, j);
      r(i, j + 2) = b(i, j);
      r(i + 2, j) = c(i, j);
      r(i + 2, j + 2) = d(i, j);
    }
  return r;
}

int metric(int mu, int nu);

ExactMatrix4 gamma(int mu);
ExactMatrix4 gamma5();
ExactMatrix4 sigma_big(int i);
ExactMatrix4 alpha(int i);

// C = i * gamma^2; the charge conjugation operator is C followed by complex conjugation.
ExactMatrix4 charge_conjugation_matrix();

struct AnticommutatorResult {
  int mu;
  int nu;
  int expected;  // the anticommutator should equal expected * identity
  bool passed;
};

// {gamma^mu, gamma^nu} for the ten unordered pairs mu <= nu.
std::vector<AnticommutatorResult> anticommutator_table();
Report clifford_check();
nlohmann::ordered_json to_json(const std::vector<AnticommutatorResult>& table);

// Angle k * pi/4, the only angles at which an exact exponential stays in Q(zeta_8).
struct QuarterTurns {
  int count = 0;
};

// exp(angle * G) for a generator with G^2 = -1 (rotation) or G^2 = +1 (boost).
template <std::size_t N>
Matrix<ExactScalar, N> exp_generator(const Matrix<ExactScalar, N>& g, QuarterTurns angle) {
  using M = Matrix<ExactScalar, N>;
  const M sq = g * g;
  const bool rotation = sq == -M::identity();
  if (!rotation && sq != M::identity()) {
    throw GeneratorNotInvolutoryError("generator does not square to +/- identity");
  }
  if (angle.count == 0) return M::identity();
  if (!rotation) {
    throw std::domain_error("hyperbolic exponential is not representable in Q(zeta_8)");
  }
  // zeta^k = cos(k pi/4) + i sin(k pi/4)
  const ExactScalar z = ExactScalar::zeta_pow(angle.count);
  const ExactScalar cos_v = ExactScalar(Rational(1, 2)) * (z + z.conj());
  const ExactScalar sin_v = ExactScalar(Rational(1, 2)) * -ExactScalar::i() * (z - z.conj());
  return cos_v * M::identity() + sin_v * g;
}

template <std::size_t N>
Matrix<Complex, N> exp_generator(const Matrix<Complex, N>& g, double angle) {
  using M = Matrix<Complex, N>;
  const M sq = g * g;
  const double tol = 1e-12;
  if (max_abs_diff(sq, -M::identity()) <= tol) {
    return Complex(std::cos(angle)) * M::identity() + Complex(std::sin(angle)) * g;
  }
  if (max_abs_diff(sq, M::identity()) <= tol) {
    return Complex(std::cosh(angle)) * M::identity() + Complex(std::sinh(angle)) * g;
  }
  throw GeneratorNotInvolutoryError("generator does not square to +/- identity");
}

// Tr(A^dagger B)
template <class T, std::size_t N>
T trace_inner(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  return (a.adjoint() * b).trace();
}

struct CliffordElement {
  std::string label;  // e.g. "1", "g0", "g1g2", "g5g3", "g5"
  ExactMatrix4 matrix;
};

// {1, g^mu, g^mu g^nu (mu < nu), g5 g^mu, g5}: an orthogonal basis of all 4x4 matrices.
std::vector<CliffordElement> basis16();

}  // namespace majorana::clifford
