#include "majorana/bispinor.h"

#include <cmath>
#include <numbers>

namespace majorana::bispinor {

namespace {

using clifford::gamma;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_index(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("bispinor index must be in 1..4");
}

template <class T>
Vector4<T> stack(const Vector<T, 2>& upper, const Vector<T, 2>& lower) {
  Vector4<T> v;
  v[0] = upper[0];
  v[1] = upper[1];
  v[2] = lower[0];
  v[3] = lower[1];
  return v;
}

// (u^(2) + C u^(2)), (u^(1) - C u^(1)), (u^(3) - C u^(3)), (u^(4) + C u^(4)), over sqrt 2
template <class T, class WeylFn>
Vector4<T> majorana_combination(int i, WeylFn weyl) {
  const int source = i == 1 ? 2 : (i == 2 ? 1 : i);
  const Vector4<T> u = weyl(source);
  const Vector4<T> cu = charge_conjugate(u);
  const T h = ScalarTraits<T>::inv_sqrt2();
  return majorana_conjugation_sign(i) > 0 ? h * (u + cu) : h * (u - cu);
}

Labels majorana_labels(int i) { return {i <= 2 ? 1 : -1, std::nullopt, std::nullopt}; }

std::optional<int> as_sign(const std::optional<ExactScalar>& v) {
  if (!v) return std::nullopt;
  if (*v == ExactScalar(1)) return 1;
  if (*v == ExactScalar(-1)) return -1;
  return std::nullopt;
}

std::optional<int> as_sign(const std::optional<Complex>& v) {
  if (!v) return std::nullopt;
  if (std::abs(*v - 1.0) <= kFloatTolerance) return 1;
  if (std::abs(*v + 1.0) <= kFloatTolerance) return -1;
  return std::nullopt;
}

}  // namespace

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw std::invalid_argument("direction angles must be finite");
  if (theta < 0.0 || theta > std::numbers::pi) throw std::invalid_argument("theta must lie in [0, pi]");
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  theta_ = theta;
  phi_ = phi;
}

bool Direction::is_pole() const noexcept { return theta_ <= 0.0 || theta_ >= std::numbers::pi; }

std::array<double, 3> Direction::unit_vector() const noexcept {
  return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

Direction Direction::flipped() const {
  return {std::max(0.0, std::numbers::pi - theta_), phi_ + std::numbers::pi};
}

Labels weyl_labels(int i) {
  check_index(i);
  static constexpr int kTable[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}};
  const auto& row = kTable[i - 1];
  return {row[0], row[1], row[2]};
}

Bispinor<ExactScalar> canonical_weyl(int i) {
  check_index(i);
  static constexpr std::size_t kSlot[4] = {2, 1, 3, 0};
  return {Kind::Weyl, i, weyl_labels(i), ExactVector4::basis(kSlot[i - 1])};
}

Spinor2 helicity_spinor(int sign, const Direction& d) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("helicity sign must be +1 or -1");
  const double c = std::cos(d.theta() / 2);
  const double s = std::sin(d.theta() / 2);
  Spinor2 chi;
  if (sign > 0) {
    chi[0] = c;
    chi[1] = std::polar(s, d.phi());
  } else {
    chi[0] = -std::polar(s, -d.phi());
    chi[1] = c;
  }
  return chi;
}

FloatMatrix4 rotation_lambda(const Direction& d) {
  const FloatMatrix4 transverse =
      Complex(std::cos(d.phi())) * to_float(gamma(1)) + Complex(std::sin(d.phi())) * to_float(gamma(2));
  return clifford::exp_generator(transverse * to_float(gamma(3)), -d.theta() / 2);
}

Bispinor<Complex> general_weyl(int i, const Direction& d) {
  check_index(i);
  const Spinor2 zero;
  const Spinor2 plus = helicity_spinor(1, d);
  const Spinor2 minus = helicity_spinor(-1, d);
  FloatVector4 v;
  switch (i) {
    case 1:
      v = stack(zero, plus);
      break;
    case 2:
      v = stack(minus, zero);
      break;
    case 3:
      v = stack(zero, minus);
      break;
    default:
      v = stack(plus, zero);
      break;
  }
  return {Kind::Weyl, i, weyl_labels(i), v};
}

int majorana_conjugation_sign(int i) {
  check_index(i);
  return (i == 1 || i == 4) ? 1 : -1;
}

Bispinor<ExactScalar> majorana(int i) {
  check_index(i);
  auto v = majorana_combination<ExactScalar>(i, [](int k) { return canonical_weyl(k).components; });
  return {Kind::Majorana, i, majorana_labels(i), v};
}

Bispinor<Complex> majorana(int i, const Direction& d) {
  check_index(i);
  auto v = majorana_combination<Complex>(i, [&](int k) { return general_weyl(k, d).components; });
  return {Kind::Majorana, i, majorana_labels(i), v};
}

ExactMatrix4 weyl_to_majorana_map() {
  return clifford::exp_generator(gamma(0) * gamma(1) * gamma(3), clifford::QuarterTurns{1});
}

FloatMatrix4 weyl_to_majorana_map(const Direction& d) {
  const FloatMatrix4 lambda = rotation_lambda(d);
  return lambda * to_float(weyl_to_majorana_map()) * lambda.adjoint();
}

const std::array<EquivalenceRelation, 4>& equivalence_relations() {
  static const std::array<EquivalenceRelation, 4> kRelations{{{1, 1, -1}, {2, 2, 1}, {3, 4, 1}, {4, 3, -1}}};
  return kRelations;
}

FloatMatrix4 alpha_dot(const Direction& d) {
  const auto p = d.unit_vector();
  FloatMatrix4 m;
  for (int i = 1; i <= 3; ++i) m = m + Complex(p[static_cast<std::size_t>(i - 1)]) * to_float(clifford::alpha(i));
  return m;
}

FloatMatrix4 sigma_dot(const Direction& d) {
  const auto p = d.unit_vector();
  FloatMatrix4 m;
  for (int i = 1; i <= 3; ++i) m = m + Complex(p[static_cast<std::size_t>(i - 1)]) * to_float(clifford::sigma_big(i));
  return m;
}

std::pair<ExactMatrix4, ExactMatrix4> energy_projectors() {
  const ExactScalar half(Rational(1, 2));
  const ExactMatrix4 id = ExactMatrix4::identity();
  return {half * (id + clifford::alpha(3)), half * (id - clifford::alpha(3))};
}

std::pair<FloatMatrix4, FloatMatrix4> energy_projectors(const Direction& d) {
  const FloatMatrix4 id = FloatMatrix4::identity();
  const FloatMatrix4 a = alpha_dot(d);
  return {Complex(0.5) * (id + a), Complex(0.5) * (id - a)};
}

std::pair<FloatMatrix4, FloatMatrix4> spin_sum_projectors(const Direction& d) {
  auto term = [&](int i) {
    const auto u = general_weyl(i, d).components;
    return outer(u, u);
  };
  return {term(1) + term(2), term(3) + term(4)};
}

std::optional<ExactScalar> eigenvalue(const ExactMatrix4& m, const ExactVector4& v) {
  std::size_t pivot = 0;
  while (pivot < 4 && v[pivot].is_zero()) ++pivot;
  if (pivot == 4) return std::nullopt;
  const ExactVector4 mv = m * v;
  const ExactScalar lambda = mv[pivot] / v[pivot];
  if (mv != lambda * v) return std::nullopt;
  return lambda;
}

std::optional<Complex> eigenvalue(const FloatMatrix4& m, const FloatVector4& v) {
  const double n2 = v.dot(v).real();
  if (n2 <= 0.0) return std::nullopt;
  const FloatVector4 mv = m * v;
  const Complex lambda = v.dot(mv) / n2;
  if (max_abs_diff(mv, lambda * v) > kFloatTolerance) return std::nullopt;
  return lambda;
}

Labels measure_labels(const ExactVector4& v) {
  Labels out;
  out.energy = as_sign(eigenvalue(clifford::alpha(3), v)).value_or(0);
  out.helicity = as_sign(eigenvalue(clifford::sigma_big(3), v));
  out.chirality = as_sign(eigenvalue(clifford::gamma5(), v));
  return out;
}

Labels measure_labels(const FloatVector4& v, const Direction& d) {
  Labels out;
  out.energy = as_sign(eigenvalue(alpha_dot(d), v)).value_or(0);
  out.helicity = as_sign(eigenvalue(sigma_dot(d), v));
  out.chirality = as_sign(eigenvalue(to_float(clifford::gamma5()), v));
  return out;
}

FloatVector4 rescaled(const Bispinor<Complex>& u, double energy) {
  if (!(energy >= 0.0)) throw std::invalid_argument("energy must be non-negative");
  return Complex(std::sqrt(2.0 * energy)) * u.components;
}

Report flip_identities_check(const Direction& d) {
  if (d.is_pole()) throw PoleDirectionError("flip identities are undefined at the poles theta = 0, pi");
  const Direction minus_p = d.flipped();
  // -i sigma^2 = [[0, -1], [1, 0]]
  const Matrix2<Complex> spin_flip{{0, -1}, {1, 0}};
  Report report("bispinor.flip");
  for (int s : {1, -1}) {
    const std::string tag = s > 0 ? "plus" : "minus";
    const Complex phase = std::polar(1.0, s * d.phi());  // e^{+- i phi}
    const Spinor2 lhs_momentum = helicity_spinor(s, minus_p);
    const Spinor2 rhs_momentum = Complex(-s) * phase * helicity_spinor(-s, d);
    report.add_float("flip.momentum." + tag, "momentum-flip", max_abs_diff(lhs_momentum, rhs_momentum),
                     kFloatTolerance);

    const Spinor2 lhs_spin = spin_flip * helicity_spinor(s, d).conj();
    const Spinor2 rhs_spin = Complex(s) * helicity_spinor(-s, d);
    report.add_float("flip.spin." + tag, "spin-flip", max_abs_diff(lhs_spin, rhs_spin), kFloatTolerance);

    const Spinor2 lhs_both = spin_flip * helicity_spinor(s, minus_p).conj();
    const Spinor2 rhs_both = std::conj(phase) * helicity_spinor(s, d);
    report.add_float("flip.combined." + tag, "momentum-and-spin-flip", max_abs_diff(lhs_both, rhs_both),
                     kFloatTolerance);
  }
  return report;
}

}  // namespace majorana::bispinor
