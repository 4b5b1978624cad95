#include "majorana/qubit.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include "majorana/gamma.h"

namespace majorana::qubit {

namespace {

using clifford::gamma;

constexpr std::array<std::string_view, 4> kBellNames = {"Phi+", "Phi-", "Psi+", "Psi-"};
constexpr std::array<std::string_view, 10> kGateNames = {"H1", "CNOT", "R1", "R2", "R3",
                                                         "R4", "RH1", "RH2", "RH3", "RH4"};

std::array<ExactScalar, 4> unit_phases() {
  return {ExactScalar(1), ExactScalar(-1), ExactScalar::i(), -ExactScalar::i()};
}

bool entangles_some_basis_state(const ExactMatrix4& m) {
  for (int b = 0; b < 4; ++b) {
    if (!concurrence_squared(m * computational_basis(b)).is_zero()) return true;
  }
  return false;
}

}  // namespace

Vector<ExactScalar, 2> single_qubit(int bit) {
  if (bit != 0 && bit != 1) throw std::out_of_range("qubit value must be 0 or 1");
  return Vector<ExactScalar, 2>::basis(static_cast<std::size_t>(bit));
}

ExactVector4 computational_basis(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("computational basis index must be in 0..3");
  return kron(single_qubit(index >> 1), single_qubit(index & 1));
}

int parse_basis_label(std::string_view label) {
  if (label == "00") return 0;
  if (label == "01") return 1;
  if (label == "10") return 2;
  if (label == "11") return 3;
  throw std::invalid_argument("basis label must be one of 00, 01, 10, 11");
}

std::string basis_label(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("computational basis index must be in 0..3");
  return std::string{static_cast<char>('0' + (index >> 1)), static_cast<char>('0' + (index & 1))};
}

std::string_view to_string(Bell b) { return kBellNames.at(static_cast<std::size_t>(b)); }

Bell parse_bell(std::string_view s) {
  for (std::size_t k = 0; k < kBellNames.size(); ++k)
    if (kBellNames[k] == s) return static_cast<Bell>(k);
  throw std::invalid_argument("unknown Bell state label: " + std::string(s));
}

ExactVector4 bell_state(Bell b) {
  const ExactScalar h = ExactScalar::inv_sqrt2();
  switch (b) {
    case Bell::PhiPlus:
      return h * (computational_basis(0) + computational_basis(3));
    case Bell::PhiMinus:
      return h * (computational_basis(0) - computational_basis(3));
    case Bell::PsiPlus:
      return h * (computational_basis(1) + computational_basis(2));
    case Bell::PsiMinus:
      return h * (computational_basis(1) - computational_basis(2));
  }
  throw std::invalid_argument("invalid Bell label");
}

FloatVector4 bell_state(Bell b, const bispinor::Direction& d) {
  auto u = [&](int i) { return bispinor::general_weyl(i, d).components; };
  const Complex h(1.0 / std::sqrt(2.0));
  switch (b) {
    case Bell::PhiPlus:
      return h * (u(4) + u(3));
    case Bell::PhiMinus:
      return h * (u(4) - u(3));
    case Bell::PsiPlus:
      return h * (u(2) + u(1));
    case Bell::PsiMinus:
      return h * (u(2) - u(1));
  }
  throw std::invalid_argument("invalid Bell label");
}

std::string_view to_string(Gate g) { return kGateNames.at(static_cast<std::size_t>(g)); }

Gate parse_gate(std::string_view s) {
  for (std::size_t k = 0; k < kGateNames.size(); ++k)
    if (kGateNames[k] == s) return static_cast<Gate>(k);
  throw std::invalid_argument("unknown gate label: " + std::string(s));
}

Gate r_gate(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("gate index must be in 1..4");
  return static_cast<Gate>(static_cast<int>(Gate::R1) + i - 1);
}

Gate rhat_gate(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("gate index must be in 1..4");
  return static_cast<Gate>(static_cast<int>(Gate::RHat1) + i - 1);
}

Matrix2<ExactScalar> hadamard() { return ExactScalar::inv_sqrt2() * Matrix2<ExactScalar>{{1, 1}, {1, -1}}; }

ExactMatrix4 gate(Gate g) {
  using clifford::exp_generator;
  using clifford::QuarterTurns;
  const ExactMatrix4 id = ExactMatrix4::identity();
  const ExactScalar h = ExactScalar::inv_sqrt2();
  const ExactScalar ih = ExactScalar::i() * h;
  const ExactMatrix4 g013 = gamma(0) * gamma(1) * gamma(3);
  switch (g) {
    case Gate::HadamardFirst:
      return kron(hadamard(), Matrix2<ExactScalar>::identity());
    case Gate::Cnot:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case Gate::R1:
      return exp_generator(gamma(1), QuarterTurns{1});
    case Gate::R2:
      return exp_generator(gamma(1), QuarterTurns{-1});
    case Gate::R3:
      return exp_generator(g013, QuarterTurns{1});
    case Gate::R4:
      return exp_generator(g013, QuarterTurns{-1});
    case Gate::RHat1:
      return ih * (gamma(3) * (id + gamma(1)));
    case Gate::RHat2:
      return ih * (gamma(2) * (id + gamma(1)));
    case Gate::RHat3:
      return h * (gamma(0) * (id + gamma(1)));
    case Gate::RHat4:
      return ih * (gamma(0) * gamma(2) * gamma(3) + ExactScalar::i() * clifford::gamma5());
  }
  throw std::invalid_argument("invalid gate label");
}

bool yang_baxter_holds(const ExactMatrix4& r) {
  const auto id2 = Matrix2<ExactScalar>::identity();
  const Matrix<ExactScalar, 8> left = kron(r, id2);
  const Matrix<ExactScalar, 8> right = kron(id2, r);
  return left * right * left == right * left * right;
}

Report yang_baxter_check(Gate g) {
  Report report("qubit.yang_baxter");
  // R1..R4 are solutions; the Clifford gates RHat1..RHat4 must not be.
  const bool expected = !(g >= Gate::RHat1 && g <= Gate::RHat4);
  const std::string verdict = expected ? "holds." : "violated.";
  report.add_exact("yang_baxter." + verdict + std::string(to_string(g)), "yang-baxter",
                   yang_baxter_holds(gate(g)) == expected);
  return report;
}

Report clifford_gate_check() {
  Report report("qubit.clifford_gates");
  const ExactMatrix4 id = ExactMatrix4::identity();
  for (int i = 1; i <= 4; ++i) {
    const ExactMatrix4 ri = gate(rhat_gate(i));
    const std::string si = std::to_string(i);
    report.add_exact("rhat.hermitian." + si, "rhat-hermitian", is_hermitian(ri));
    report.add_exact("rhat.square." + si, "rhat-involution", ri * ri == id);
    report.add_exact("rhat.unitary." + si, "rhat-rotation", is_unitary(ri));
    report.add_exact("rhat.determinant." + si, "rhat-rotation", determinant(ri) == ExactScalar(1));
    for (int j = 1; j <= 4; ++j) {
      const ExactMatrix4 rj = gate(rhat_gate(j));
      const std::string pair = si + std::to_string(j);
      const ExactMatrix4 expected = i == j ? ExactScalar(2) * id : ExactMatrix4();
      report.add_exact("rhat.anticommutator." + pair, "rhat-clifford", anticommutator(ri, rj.adjoint()) == expected);
      if (i != j) {
        report.add_exact("rhat.trace_orthogonal." + pair, "rhat-orthogonality",
                         clifford::trace_inner(ri, rj).is_zero());
      }
    }
  }
  return report;
}

CompletenessResult completeness_search() {
  CompletenessResult out;
  std::array<ExactMatrix4, 4> rhat;
  for (int i = 1; i <= 4; ++i) rhat[static_cast<std::size_t>(i - 1)] = gate(rhat_gate(i));
  const auto phases = unit_phases();
  constexpr std::array<std::string_view, 4> kPhaseNames = {"+", "-", "+i", "-i"};
  for (const auto& element : clifford::basis16()) {
    for (std::size_t p = 0; p < phases.size(); ++p) {
      ++out.candidates_tested;
      const ExactMatrix4 c = phases[p] * element.matrix;
      if (!is_hermitian(c) || !(c * c == ExactMatrix4::identity())) continue;
      bool anticommutes = true;
      for (const auto& r : rhat) anticommutes = anticommutes && anticommutator(c, r).is_zero();
      if (!anticommutes) continue;
      const std::string label = std::string(kPhaseNames[p]) + element.label;
      out.algebraic_matches.push_back(label);
      if (entangles_some_basis_state(c)) out.extensions.push_back(label);
    }
  }
  return out;
}

double concurrence(const FloatVector4& s) {
  const double n = norm(s);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-10) {
    throw std::invalid_argument("concurrence requires a unit-norm state");
  }
  return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

ExactScalar concurrence_squared(const ExactVector4& s) {
  const ExactScalar det = s[0] * s[3] - s[1] * s[2];
  return ExactScalar(4) * det * det.conj();
}

std::optional<BellDecomposition> identify_bell(const ExactVector4& s) {
  for (std::size_t k = 0; k < kBellNames.size(); ++k) {
    const Bell b = static_cast<Bell>(k);
    for (const auto& phase : unit_phases()) {
      if (s == phase * bell_state(b)) return BellDecomposition{phase, b};
    }
  }
  return std::nullopt;
}

std::string format_phase(const ExactScalar& phase) {
  if (phase == ExactScalar(1)) return "";
  if (phase == ExactScalar(-1)) return "-";
  if (phase == ExactScalar::i()) return "i";
  if (phase == -ExactScalar::i()) return "-i";
  return "(" + phase.to_string() + ")";
}

BellDecomposition gate_action(Gate g, int basis_index) {
  const auto out = identify_bell(gate(g) * computational_basis(basis_index));
  if (!out) throw std::logic_error("gate image is not a phased Bell state");
  return *out;
}

}  // namespace majorana::qubit
