#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "majorana/gamma.h"
#include "majorana/matrix.h"
#include "majorana/report.h"

// Massless Dirac bispinors: Weyl solutions in the canonical frame (momentum
// along +z, exact) and for general momentum directions (float), their
// Majorana combinations, and the maps between the two families.
namespace majorana::bispinor {

class PoleDirectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unit momentum direction in spherical polars. theta is in [0, pi]; phi is
/// wrapped into [0, 2 pi).
class Direction {
 public:
  Direction() = default;
  Direction(double theta, double phi);

  static Direction canonical() { return {}; }

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  bool is_canonical() const noexcept { return theta_ == 0.0; }
  bool is_pole() const noexcept;
  std::array<double, 3> unit_vector() const noexcept;
  // The direction of -p: (pi - theta, phi + pi).
  Direction flipped() const;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

enum class Kind { Weyl, Majorana };

// Energy sign, helicity and chirality (+1 / -1). Majorana bispinors are
// energy eigenvectors only.
struct Labels {
  int energy = 0;
  std::optional<int> helicity;
  std::optional<int> chirality;
  friend bool operator==(const Labels&, const Labels&) = default;
};

template <class T>
struct Bispinor {
  Kind kind = Kind::Weyl;
  int index = 0;  // 1..4
  Labels labels;
  Vector4<T> components;
};

using Spinor2 = Vector<Complex, 2>;

// Energy/helicity/chirality of the i-th Weyl solution.
Labels weyl_labels(int i);

Bispinor<ExactScalar> canonical_weyl(int i);

// chi_+ (sign = +1) or chi_- (sign = -1); eigenvectors of sigma . p_hat.
Spinor2 helicity_spinor(int sign, const Direction& d);

// Rotation taking the canonical frame to direction d.
FloatMatrix4 rotation_lambda(const Direction& d);

Bispinor<Complex> general_weyl(int i, const Direction& d);

// Charge conjugation: i gamma^2 applied to the complex conjugate.
template <class T>
Vector4<T> charge_conjugate(const Vector4<T>& v) {
  static const ExactMatrix4 c = clifford::charge_conjugation_matrix();
  if constexpr (ScalarTraits<T>::is_exact) {
    return c * v.conj();
  } else {
    return to_float(c) * v.conj();
  }
}

// Sign s in C u_M = s u_M: +1 for i in {1, 4}, -1 for i in {2, 3}.
int majorana_conjugation_sign(int i);

Bispinor<ExactScalar> majorana(int i);
Bispinor<Complex> majorana(int i, const Direction& d);

// R3 (canonical, exact) and Omega = Lambda R3 Lambda^dagger (general momentum).
ExactMatrix4 weyl_to_majorana_map();
FloatMatrix4 weyl_to_majorana_map(const Direction& d);

// map * u^(weyl) = sign * u_M^(majorana)
struct EquivalenceRelation {
  int weyl;
  int majorana;
  int sign;
};
const std::array<EquivalenceRelation, 4>& equivalence_relations();

FloatMatrix4 alpha_dot(const Direction& d);
FloatMatrix4 sigma_dot(const Direction& d);

// (Lambda_+, Lambda_-) = (1 +/- alpha . p_hat) / 2
std::pair<ExactMatrix4, ExactMatrix4> energy_projectors();
std::pair<FloatMatrix4, FloatMatrix4> energy_projectors(const Direction& d);
// Same projectors assembled from the spin sums over the Weyl solutions.
std::pair<FloatMatrix4, FloatMatrix4> spin_sum_projectors(const Direction& d);

// Eigenvalue of m on v if v is an eigenvector (exactly, or to kFloatTolerance).
std::optional<ExactScalar> eigenvalue(const ExactMatrix4& m, const ExactVector4& v);
std::optional<Complex> eigenvalue(const FloatMatrix4& m, const FloatVector4& v);

// Labels measured from alpha.p, Sigma.p and gamma5.
Labels measure_labels(const ExactVector4& v);
Labels measure_labels(const FloatVector4& v, const Direction& d);

// Optional sqrt(2E) rescaling of a unit-normalized bispinor.
FloatVector4 rescaled(const Bispinor<Complex>& u, double energy);

// Momentum-flip and spin-flip identities of the helicity spinors. Rejects
// pole directions, where phi is undefined.
Report flip_identities_check(const Direction& d);

}  // namespace majorana::bispinor
