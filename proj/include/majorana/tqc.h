#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majorana/matrix.h"
#include "majorana/report.h"

// Four-Majorana-zero-mode model: the Majorana operators are the Hermitian
// entangling gates RHat1..RHat4, braids are exp(-pi/4 RHat_p RHat_q), and the
// logical basis is built from the fermions f12 and f34.
namespace majorana::tqc {

// ---- fusion rules -------------------------------------------------------

enum class Anyon { Vacuum, Sigma, Psi };
std::string_view to_string(Anyon a);

using FusionOutcome = std::multiset<Anyon>;

FusionOutcome fuse(Anyon a, Anyon b);
// Fusion distributed over every channel of a multiset outcome.
FusionOutcome fuse(const FusionOutcome& a, Anyon b);
FusionOutcome fuse(Anyon a, const FusionOutcome& b);

// ---- operators ------------------------------------------------------------

using MajoranaSet = std::array<ExactMatrix4, 4>;
const MajoranaSet& majorana_operators();
const ExactMatrix4& majorana_operator(int k);  // 1..4

enum class Generator { B12, B23, B34, B13, B14, B24 };
inline constexpr std::array<Generator, 6> kAllGenerators{Generator::B12, Generator::B23, Generator::B34,
                                                         Generator::B13, Generator::B14, Generator::B24};
inline constexpr std::array<Generator, 3> kLocalGenerators{Generator::B12, Generator::B23, Generator::B34};

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view s);
std::pair<int, int> modes(Generator g);

struct BraidStep {
  Generator generator = Generator::B12;
  int exponent = 1;  // +1 clockwise exchange, -1 its inverse
  friend bool operator==(const BraidStep&, const BraidStep&) = default;
};

/// Steps are applied in list order: the first step acts first. An empty word
/// is the identity braid.
using BraidWord = std::vector<BraidStep>;

// Comma-separated generators, each optionally suffixed with "^-1", e.g.
// "B23,B12^-1". The empty string is the identity word.
BraidWord parse_braid_word(std::string_view text);
std::string to_string(const BraidWord& w);

// (1/sqrt2)(1 - RHat_p RHat_q), or its adjoint for exponent -1.
ExactMatrix4 braid_operator(Generator g, int exponent = 1);

// Yang-Baxter relations, commutators and the non-local/local relations.
Report braid_algebra_check();

struct ConjugationImage {
  int index;
  int sign;
  friend bool operator==(const ConjugationImage&, const ConjugationImage&) = default;
};

// B_pq RHat_k B_pq^dagger = sign * RHat_index
ConjugationImage conjugate_majorana(Generator g, int k);
// The case table against explicit matrix products for all 24 (generator, k).
Report conjugation_check();

// exp(i pi/4 sigma^1) and exp(i pi/4 sigma^2)
Matrix2<ExactScalar> rotation_x();
Matrix2<ExactScalar> rotation_y();
// True iff U = A (x) B for some 2x2 A, B (operator Schmidt rank one).
bool is_product_operator(const ExactMatrix4& u);
Report separability_check();

// F_pq = -i RHat_p RHat_q (p < q) and Q = F12 F34.
ExactMatrix4 parity(int p, int q);
ExactMatrix4 total_charge();
Report parity_check();

// ---- logical states -------------------------------------------------------

// Occupation basis order: |00>, |10>, |01>, |11> (f12 occupation first).
enum class Occupation { Empty = 0, First = 1, Second = 2, Both = 3 };
Occupation parse_occupation(std::string_view label);  // "00", "10", "01", "11"
std::string_view to_string(Occupation o);

// Fermion annihilators f12 = (RHat1 + i RHat2)/2 and f34 = (RHat3 + i RHat4)/2.
ExactMatrix4 fermion_annihilator(int pair);  // pair 1 -> f12, pair 2 -> f34

// The four basis states as bispinor/two-qubit vectors.
const std::array<ExactVector4, 4>& fusion_basis_vectors();

/// Unit-norm state expanded in the occupation basis.
class FusionState {
 public:
  explicit FusionState(const ExactVector4& occupation_amplitudes);
  static FusionState basis(Occupation o);
  // Re-expand a two-qubit vector in the occupation basis.
  static FusionState from_vector(const ExactVector4& v);

  const ExactVector4& amplitudes() const noexcept { return amp_; }
  ExactVector4 to_vector() const;

  // +1 / -1 when the state is a Q eigenvector, nullopt for mixed parity.
  std::optional<int> parity() const;
  ExactScalar charge_expectation() const;  // <Q>
  // Vacuum for even total charge, Psi for odd.
  std::optional<Anyon> total_charge_label() const;

  friend bool operator==(const FusionState&, const FusionState&) = default;

 private:
  ExactVector4 amp_;
};

std::array<FusionState, 4> fusion_basis();
// Annihilation conditions, creation relations, parity tables and separability.
Report fusion_basis_check();

// Braid operator expressed in the occupation basis.
ExactMatrix4 braid_operator_occupation(Generator g, int exponent = 1);

FusionState evaluate_braid(const BraidWord& w, const FusionState& init);

// lambda with i gamma^2 conj(s) = lambda s, or nullopt if s is not an
// eigenvector of charge conjugation.
std::optional<ExactScalar> majorana_condition_check(const ExactVector4& s);
std::optional<ExactScalar> majorana_condition_check(const FusionState& s);

// B23 on the four basis states: amplitudes, concurrence 1, Schmidt form.
Report braiding_entanglement_check();
// B12 and B34 act on basis states as exp(+-i pi/4).
Report abelian_phase_check();
// Charge conjugation eigenphases of B23 applied to the basis.
Report braided_majorana_condition_check();

// Every word of length <= max_length over the local generators (both
// exponents) preserves <Q> on each basis state. Returns the number of
// (word, initial state) pairs checked and whether all passed.
struct ChargeConservationResult {
  std::size_t evaluations = 0;
  bool passed = true;
};
ChargeConservationResult charge_conservation_sweep(int max_length);

}  // namespace majorana::tqc
