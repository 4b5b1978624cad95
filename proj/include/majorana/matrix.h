#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>

#include "majorana/scalar.h"

namespace majorana {

template <class T, std::size_t N>
class Vector {
 public:
  using Traits = ScalarTraits<T>;

  Vector() { v_.fill(Traits::zero()); }
  explicit Vector(const std::array<T, N>& v) : v_(v) {}

  static Vector basis(std::size_t k) {
    Vector r;
    r.v_.at(k) = Traits::one();
    return r;
  }

  static constexpr std::size_t size() { return N; }
  T& operator[](std::size_t k) { return v_[k]; }
  const T& operator[](std::size_t k) const { return v_[k]; }
  std::span<const T, N> data() const { return v_; }

  friend Vector operator+(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < N; ++k) a.v_[k] += b.v_[k];
    return a;
  }
  friend Vector operator-(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < N; ++k) a.v_[k] -= b.v_[k];
    return a;
  }
  friend Vector operator*(const T& s, Vector a) {
    for (auto& x : a.v_) x = s * x;
    return a;
  }
  Vector operator-() const {
    Vector r;
    for (std::size_t k = 0; k < N; ++k) r.v_[k] = -v_[k];
    return r;
  }
  friend bool operator==(const Vector&, const Vector&) = default;

  Vector conj() const {
    Vector r;
    for (std::size_t k = 0; k < N; ++k) r.v_[k] = Traits::conj(v_[k]);
    return r;
  }

  // <this|other>, antilinear in the left argument.
  T dot(const Vector& other) const {
    T s = Traits::zero();
    for (std::size_t k = 0; k < N; ++k) s += Traits::conj(v_[k]) * other.v_[k];
    return s;
  }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const T& x) { return Traits::is_zero(x); });
  }

 private:
  std::array<T, N> v_;
};

/// Dense square matrix stored row-major. Value type; every operation returns
/// a fresh matrix.
template <class T, std::size_t N>
class Matrix {
 public:
  using Traits = ScalarTraits<T>;
  using Row = std::array<T, N>;

  Matrix() { m_.fill(Traits::zero()); }

  Matrix(std::initializer_list<Row> rows) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < N; ++c) m_[r * N + c] = row[c];
      ++r;
    }
  }

  static Matrix identity() {
    Matrix r;
    for (std::size_t k = 0; k < N; ++k) r(k, k) = Traits::one();
    return r;
  }

  static constexpr std::size_t dim() { return N; }
  T& operator()(std::size_t r, std::size_t c) { return m_[r * N + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m_[r * N + c]; }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < N * N; ++k) a.m_[k] += b.m_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < N * N; ++k) a.m_[k] -= b.m_[k];
    return a;
  }
  Matrix operator-() const {
    Matrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.m_[k] = -m_[k];
    return r;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.m_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const T& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < N; ++j) {
          if (Traits::is_zero(b(k, j))) continue;
          r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }
  friend Vector<T, N> operator*(const Matrix& a, const Vector<T, N>& v) {
    Vector<T, N> r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        if (Traits::is_zero(a(i, k)) || Traits::is_zero(v[k])) continue;
        r[i] += a(i, k) * v[k];
      }
    }
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = Traits::conj((*this)(i, j));
    return r;
  }

  Matrix conj() const {
    Matrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.m_[k] = Traits::conj(m_[k]);
    return r;
  }

  T trace() const {
    T s = Traits::zero();
    for (std::size_t k = 0; k < N; ++k) s += (*this)(k, k);
    return s;
  }

  bool is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const T& x) { return Traits::is_zero(x); });
  }

  std::span<const T, N * N> data() const { return m_; }

 private:
  std::array<T, N * N> m_;
};

template <class T>
using Matrix2 = Matrix<T, 2>;
template <class T>
using Matrix4 = Matrix<T, 4>;
template <class T>
using Vector4 = Vector<T, 4>;

using ExactMatrix4 = Matrix<ExactScalar, 4>;
using FloatMatrix4 = Matrix<Complex, 4>;
using ExactVector4 = Vector<ExactScalar, 4>;
using FloatVector4 = Vector<Complex, 4>;

template <class T, std::size_t N>
Matrix<T, N> commutator(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  return a * b - b * a;
}

template <class T, std::size_t N>
Matrix<T, N> anticommutator(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  return a * b + b * a;
}

// Kronecker product; the left factor indexes the most-significant block.
template <class T, std::size_t N, std::size_t M>
Matrix<T, N * M> kron(const Matrix<T, N>& a, const Matrix<T, M>& b) {
  Matrix<T, N * M> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (ScalarTraits<T>::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < M; ++l) r(i * M + k, j * M + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T, std::size_t N, std::size_t M>
Vector<T, N * M> kron(const Vector<T, N>& a, const Vector<T, M>& b) {
  Vector<T, N * M> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < M; ++k) r[i * M + k] = a[i] * b[k];
  return r;
}

// |v><w|
template <class T, std::size_t N>
Matrix<T, N> outer(const Vector<T, N>& v, const Vector<T, N>& w) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = v[i] * ScalarTraits<T>::conj(w[j]);
  return r;
}

// Leibniz expansion; exact over any field and cheap for N <= 4.
template <class T, std::size_t N>
T determinant(const Matrix<T, N>& a) {
  static_assert(N <= 6, "Leibniz expansion is only meant for small matrices");
  std::array<std::size_t, N> perm;
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T total = ScalarTraits<T>::zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = ScalarTraits<T>::one();
    for (std::size_t i = 0; i < N && !ScalarTraits<T>::is_zero(term); ++i) term = term * a(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class T, std::size_t N>
bool is_unitary(const Matrix<T, N>& a) {
  static_assert(ScalarTraits<T>::is_exact);
  return a.adjoint() * a == Matrix<T, N>::identity();
}

template <class T, std::size_t N>
bool is_hermitian(const Matrix<T, N>& a) {
  static_assert(ScalarTraits<T>::is_exact);
  return a.adjoint() == a;
}

template <std::size_t N>
Matrix<Complex, N> to_float(const Matrix<ExactScalar, N>& a) {
  Matrix<Complex, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a(i, j).to_complex();
  return r;
}

template <std::size_t N>
Vector<Complex, N> to_float(const Vector<ExactScalar, N>& v) {
  Vector<Complex, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = v[i].to_complex();
  return r;
}

template <std::size_t N>
const Matrix<Complex, N>& to_float(const Matrix<Complex, N>& a) {
  return a;
}

template <std::size_t N>
const Vector<Complex, N>& to_float(const Vector<Complex, N>& v) {
  return v;
}

template <std::size_t N>
double max_abs_diff(const Matrix<Complex, N>& a, const Matrix<Complex, N>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

template <std::size_t N>
double max_abs_diff(const Vector<Complex, N>& a, const Vector<Complex, N>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < N; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

template <std::size_t N>
double norm(const Vector<Complex, N>& v) {
  return std::sqrt(v.dot(v).real());
}

// Default tolerance for float-backend identities.
inline constexpr double kFloatTolerance = 1e-12;

}  // namespace majorana
