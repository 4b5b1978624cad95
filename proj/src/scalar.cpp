#include "majorana/scalar.h"

#include <cmath>
#include <limits>
#include <sstream>

namespace majorana {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticCapacityError("rational coefficient exceeds 128-bit intermediate range");
  }
  return out;
}

__int128 checked_add(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticCapacityError("rational coefficient exceeds 128-bit intermediate range");
  }
  return out;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  constexpr auto lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw ArithmeticCapacityError("rational coefficient exceeds 64-bit storage");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
  const __int128 n = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
  return Rational::from_wide(n, checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  return Rational::from_wide(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_wide(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

ExactScalar ExactScalar::zeta_pow(int k) {
  k %= 8;
  if (k < 0) k += 8;
  Coefficients c{};
  c[static_cast<std::size_t>(k % 4)] = (k < 4) ? Rational(1) : Rational(-1);
  return ExactScalar(c);
}

ExactScalar ExactScalar::sqrt2() { return ExactScalar({0, 1, 0, -1}); }

ExactScalar ExactScalar::inv_sqrt2() { return ExactScalar({0, Rational(1, 2), 0, Rational(-1, 2)}); }

bool ExactScalar::is_zero() const noexcept {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

// conj(zeta^k) = zeta^(8-k): zeta -> -zeta^3, zeta^2 -> -zeta^2, zeta^3 -> -zeta.
ExactScalar ExactScalar::conj() const { return ExactScalar({c_[0], -c_[3], -c_[2], -c_[1]}); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_8)");
  // a * conj(a) is real, hence x + y*sqrt2 with x = c0 and y = c1.
  const ExactScalar norm = *this * conj();
  const Rational x = norm[0];
  const Rational y = norm[1];
  const Rational field_norm = x * x - Rational(2) * y * y;
  const ExactScalar real_inverse({x / field_norm, -y / field_norm, 0, y / field_norm});
  return conj() * real_inverse;
}

Complex ExactScalar::to_complex() const noexcept {
  const double a = c_[0].to_double();
  const double b = c_[1].to_double();
  const double c = c_[2].to_double();
  const double d = c_[3].to_double();
  // zeta = (1+i)/sqrt2, zeta^2 = i, zeta^3 = (-1+i)/sqrt2
  return {a + kInvSqrt2 * (b - d), c + kInvSqrt2 * (b + d)};
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (std::size_t k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (std::size_t k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (std::size_t j = 0; j < 4; ++j) {
    if (a.c_[j].is_zero()) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      if (b.c_[k].is_zero()) continue;
      const Rational p = a.c_[j] * b.c_[k];
      const std::size_t idx = j + k;
      // zeta^4 = -1
      if (idx < 4) {
        r.c_[idx] += p;
      } else {
        r.c_[idx - 4] -= p;
      }
    }
  }
  return r;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar({-c_[0], -c_[1], -c_[2], -c_[3]}); }

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& a) {
  static constexpr const char* kPowers[] = {"", "z", "z^2", "z^3"};
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    Rational c = a[k];
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.num() < 0 ? " - " : " + ");
      if (c.num() < 0) c = -c;
    }
    if (k == 0) {
      os << c;
    } else if (c == Rational(1)) {
      os << kPowers[k];
    } else if (c == Rational(-1)) {
      os << '-' << kPowers[k];
    } else {
      os << c << '*' << kPowers[k];
    }
    first = false;
  }
  if (first) os << '0';
  return os;
}

}  // namespace majorana
