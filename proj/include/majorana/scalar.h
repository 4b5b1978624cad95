#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace majorana {

using Complex = std::complex<double>;

// Raised when an exact operation would not fit the fixed-width representation.
class ArithmeticCapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Rational number with canonical representation: gcd(num, den) == 1, den > 0.
// Intermediates are computed in 128 bits; results that do not fit 64 bits throw.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "num/den"

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of the cyclotomic field Q(zeta_8), zeta = exp(i*pi/4), stored as
/// c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with rational coefficients.
///
/// Every entry of the gamma matrices, the entangling gates and the braid
/// operators lives in this field, so identities between them can be decided
/// by structural equality.
class ExactScalar {
 public:
  using Coefficients = std::array<Rational, 4>;

  constexpr ExactScalar() = default;
  ExactScalar(std::int64_t v) : c_{Rational(v), {}, {}, {}} {}  // NOLINT
  ExactScalar(Rational v) : c_{v, {}, {}, {}} {}                  // NOLINT
  explicit ExactScalar(Coefficients c) : c_(c) {}

  static ExactScalar zeta() { return ExactScalar({0, 1, 0, 0}); }
  static ExactScalar zeta_pow(int k);
  static ExactScalar i() { return ExactScalar({0, 0, 1, 0}); }
  static ExactScalar sqrt2();      // zeta - zeta^3
  static ExactScalar inv_sqrt2();  // (zeta - zeta^3) / 2

  const Coefficients& coefficients() const noexcept { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const noexcept;

  ExactScalar conj() const;
  ExactScalar inverse() const;  // throws std::domain_error on zero
  Complex to_complex() const noexcept;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  // Compact human form, e.g. "1/2*z - 1/2*z^3" (z = exp(i*pi/4)).
  std::string to_string() const;

 private:
  Coefficients c_{};
};

inline ExactScalar conj(const ExactScalar& a) { return a.conj(); }
inline Complex to_float(const ExactScalar& a) noexcept { return a.to_complex(); }
inline Complex to_float(const Complex& a) noexcept { return a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const ExactScalar& a);

// Uniform access used by the generic matrix code.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool is_exact = true;
  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar imag_unit() { return ExactScalar::i(); }
  static ExactScalar inv_sqrt2() { return ExactScalar::inv_sqrt2(); }
  static ExactScalar conj(const ExactScalar& a) { return a.conj(); }
  static bool is_zero(const ExactScalar& a) { return a.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool is_exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex inv_sqrt2() { return {0.70710678118654752440, 0.0}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static bool is_zero(const Complex& a) { return a == Complex{}; }
};

}  // namespace majorana
