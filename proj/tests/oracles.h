#pragma once

// Independent float-path reference computations used only by the tests.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "majorana/matrix.h"
#include "majorana/scalar.h"

namespace oracle {

using majorana::Complex;
using majorana::Matrix;
using majorana::Vector;

// exp(A) by scaling and squaring with a truncated Taylor series.
template <std::size_t N>
Matrix<Complex, N> expm(const Matrix<Complex, N>& a) {
  double norm = 0.0;
  for (const auto& x : a.data()) norm = std::max(norm, std::abs(x));
  int squarings = 0;
  while (norm * N > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix<Complex, N> scaled = Complex(std::ldexp(1.0, -squarings)) * a;
  Matrix<Complex, N> term = Matrix<Complex, N>::identity();
  Matrix<Complex, N> sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = Complex(1.0 / k) * (term * scaled);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Gamma matrices in the Weyl representation, built directly in doubles.
inline Matrix<Complex, 2> pauli(int k) {
  const Complex i{0, 1};
  switch (k) {
    case 1:
      return {{0, 1}, {1, 0}};
    case 2:
      return {{0, -i}, {i, 0}};
    case 3:
      return {{1, 0}, {0, -1}};
    default:
      return {{1, 0}, {0, 1}};
  }
}

inline Matrix<Complex, 4> gamma(int mu) {
  Matrix<Complex, 4> g;
  const auto s = pauli(mu == 0 ? 0 : mu);
  const double lower = mu == 0 ? 1.0 : -1.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      g(r, c + 2) = s(r, c);
      g(r + 2, c) = lower * s(r, c);
    }
  return g;
}

inline Matrix<Complex, 4> gamma5() {
  return Complex(0, 1) * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
}

// Singular values of the 2x2 coefficient matrix [[a, b], [c, d]]; concurrence
// of a pure two-qubit state is 2 * s_max * s_min.
inline Matrix<Complex, 4> rhat(int k) {
  const auto id = Matrix<Complex, 4>::identity();
  const Complex h(1.0 / std::sqrt(2.0));
  const Complex ih(0.0, 1.0 / std::sqrt(2.0));
  switch (k) {
    case 1: return ih * (gamma(3) * (id + gamma(1)));
    case 2: return ih * (gamma(2) * (id + gamma(1)));
    case 3: return h * (gamma(0) * (id + gamma(1)));
    default: return ih * (gamma(0) * gamma(2) * gamma(3) + Complex(0.0, 1.0) * gamma5());
  }
}

inline std::array<double, 2> schmidt_coefficients(const Vector<Complex, 4>& v) {
  // Eigenvalues of M^dagger M.
  const Complex a = v[0], b = v[1], c = v[2], d = v[3];
  const double p = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  const double q = std::norm(a * d - b * c);
  const double disc = std::sqrt(std::max(0.0, p * p / 4 - q));
  const double l1 = p / 2 + disc;
  const double l2 = std::max(0.0, p / 2 - disc);
  return {std::sqrt(l1), std::sqrt(l2)};
}

inline double schmidt_concurrence(const Vector<Complex, 4>& v) {
  const auto s = schmidt_coefficients(v);
  return 2.0 * s[0] * s[1];
}

// Normalized eigenvector of a 2x2 Hermitian matrix for the given eigenvalue,
// solved directly from (H - lambda) x = 0.
inline Vector<Complex, 2> eigenvector2(const Matrix<Complex, 2>& h, double lambda) {
  const Complex a = h(0, 0) - lambda, b = h(0, 1);
  Vector<Complex, 2> v;
  if (std::abs(b) > 1e-14) {
    v[0] = b;
    v[1] = -a;
  } else if (std::abs(a) < 1e-14) {
    v[0] = 1;
  } else {
    v[1] = 1;
  }
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
  return v;
}

}  // namespace oracle
