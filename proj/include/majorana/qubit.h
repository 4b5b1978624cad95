#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/bispinor.h"
#include "majorana/matrix.h"
#include "majorana/report.h"

// Two-qubit view of the bispinor space: the computational basis coincides
// with the canonical Weyl bispinors and the Bell basis with the canonical
// Majorana bispinors.
namespace majorana::qubit {

// Amplitudes ordered |00>, |01>, |10>, |11>.
template <class T>
using TwoQubitState = Vector4<T>;

Vector<ExactScalar, 2> single_qubit(int bit);
ExactVector4 computational_basis(int index);  // 0..3
// "00", "01", "10", "11"
int parse_basis_label(std::string_view label);
std::string basis_label(int index);

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
std::string_view to_string(Bell b);
Bell parse_bell(std::string_view s);

ExactVector4 bell_state(Bell b);
FloatVector4 bell_state(Bell b, const bispinor::Direction& d);

enum class Gate { HadamardFirst, Cnot, R1, R2, R3, R4, RHat1, RHat2, RHat3, RHat4 };
std::string_view to_string(Gate g);
Gate parse_gate(std::string_view s);
Gate r_gate(int i);     // R1..R4
Gate rhat_gate(int i);  // RHat1..RHat4

Matrix2<ExactScalar> hadamard();
ExactMatrix4 gate(Gate g);

// (R x 1)(1 x R)(R x 1) == (1 x R)(R x 1)(1 x R) on three qubits.
bool yang_baxter_holds(const ExactMatrix4& r);
// Passes when the gate behaves as expected: R1..R4 satisfy the relation,
// RHat1..RHat4 violate it.
Report yang_baxter_check(Gate g);

// Hermiticity, involution, mutual anticommutation and trace orthogonality
// of RHat1..RHat4.
Report clifford_gate_check();

struct CompletenessResult {
  std::size_t candidates_tested = 0;
  // Candidates that are Hermitian, square to 1 and anticommute with all RHat_i.
  std::vector<std::string> algebraic_matches;
  // Matches that are also entangling gates, i.e. genuine extensions of the set.
  std::vector<std::string> extensions;
};

// Scans phase * (Clifford basis element) for phases {1, -1, i, -i}.
CompletenessResult completeness_search();

// 2|ad - bc| for a unit-norm pure state. Throws std::invalid_argument otherwise.
double concurrence(const FloatVector4& s);
// (2|ad - bc|)^2, exact.
ExactScalar concurrence_squared(const ExactVector4& s);

// State == phase * |Bell> with phase in {1, -1, i, -i}.
struct BellDecomposition {
  ExactScalar phase;
  Bell label;
};
std::optional<BellDecomposition> identify_bell(const ExactVector4& s);
std::string format_phase(const ExactScalar& phase);  // "", "-", "i", "-i"

// Gate applied to a computational basis state, expressed in the Bell basis.
// Throws std::logic_error if the image is not a phased Bell state.
BellDecomposition gate_action(Gate g, int basis_index);

}  // namespace majorana::qubit
