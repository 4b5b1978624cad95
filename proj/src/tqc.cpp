#include "majorana/tqc.h"

#include <stdexcept>

#include "majorana/bispinor.h"
#include "majorana/gamma.h"
#include "majorana/qubit.h"

namespace majorana::tqc {

namespace {

constexpr std::array<std::string_view, 3> kAnyonNames = {"1", "sigma", "psi"};
constexpr std::array<std::string_view, 6> kGeneratorNames = {"B12", "B23", "B34", "B13", "B14", "B24"};
constexpr std::array<std::pair<int, int>, 6> kModes = {{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {1, 4}, {2, 4}}};
constexpr std::array<std::string_view, 4> kOccupationNames = {"00", "10", "01", "11"};

const ExactMatrix4& rhat(int k) { return majorana_operator(k); }

void check_exponent(int exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("braid exponent must be +1 or -1");
}

std::size_t generator_slot(Generator g) { return static_cast<std::size_t>(g); }

// Columns are the occupation basis vectors.
const ExactMatrix4& occupation_frame() {
  static const ExactMatrix4 frame = [] {
    ExactMatrix4 u;
    const auto& basis = fusion_basis_vectors();
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t r = 0; r < 4; ++r) u(r, c) = basis[c][r];
    return u;
  }();
  return frame;
}

ExactMatrix4 to_occupation(const ExactMatrix4& m) {
  const ExactMatrix4& u = occupation_frame();
  return u.adjoint() * m * u;
}

const ExactMatrix4& charge_occupation() {
  static const ExactMatrix4 q = to_occupation(total_charge());
  return q;
}

std::string label(Occupation o) { return std::string(to_string(o)); }

std::string pair_label(int p, int q) { return std::to_string(p) + std::to_string(q); }

}  // namespace

// ---- fusion rules -------------------------------------------------------

std::string_view to_string(Anyon a) { return kAnyonNames.at(static_cast<std::size_t>(a)); }

FusionOutcome fuse(Anyon a, Anyon b) {
  if (a == Anyon::Vacuum) return {b};
  if (b == Anyon::Vacuum) return {a};
  if (a == Anyon::Psi && b == Anyon::Psi) return {Anyon::Vacuum};
  if (a == Anyon::Sigma && b == Anyon::Sigma) return {Anyon::Vacuum, Anyon::Psi};
  return {Anyon::Sigma};  // sigma x psi
}

FusionOutcome fuse(const FusionOutcome& a, Anyon b) {
  FusionOutcome out;
  for (Anyon x : a) out.merge(fuse(x, b));
  return out;
}

FusionOutcome fuse(Anyon a, const FusionOutcome& b) {
  FusionOutcome out;
  for (Anyon y : b) out.merge(fuse(a, y));
  return out;
}

// ---- operators ------------------------------------------------------------

const MajoranaSet& majorana_operators() {
  static const MajoranaSet ops{qubit::gate(qubit::Gate::RHat1), qubit::gate(qubit::Gate::RHat2),
                               qubit::gate(qubit::Gate::RHat3), qubit::gate(qubit::Gate::RHat4)};
  return ops;
}

const ExactMatrix4& majorana_operator(int k) {
  if (k < 1 || k > 4) throw std::out_of_range("Majorana mode index must be in 1..4");
  return majorana_operators()[static_cast<std::size_t>(k - 1)];
}

std::string_view to_string(Generator g) { return kGeneratorNames.at(generator_slot(g)); }

Generator parse_generator(std::string_view s) {
  for (std::size_t k = 0; k < kGeneratorNames.size(); ++k)
    if (kGeneratorNames[k] == s) return static_cast<Generator>(k);
  throw std::invalid_argument("unknown braid generator: " + std::string(s));
}

std::pair<int, int> modes(Generator g) { return kModes.at(generator_slot(g)); }

BraidWord parse_braid_word(std::string_view text) {
  BraidWord word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    BraidStep step;
    constexpr std::string_view kInverse = "^-1";
    if (token.size() > kInverse.size() && token.substr(token.size() - kInverse.size()) == kInverse) {
      step.exponent = -1;
      token.remove_suffix(kInverse.size());
    }
    step.generator = parse_generator(token);
    word.push_back(step);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& step : w) {
    if (!out.empty()) out += ',';
    out += to_string(step.generator);
    if (step.exponent < 0) out += "^-1";
  }
  return out;
}

ExactMatrix4 braid_operator(Generator g, int exponent) {
  check_exponent(exponent);
  static const std::array<ExactMatrix4, 6> clockwise = [] {
    std::array<ExactMatrix4, 6> out;
    for (Generator gen : kAllGenerators) {
      const auto [p, q] = modes(gen);
      out[generator_slot(gen)] = clifford::exp_generator(rhat(p) * rhat(q), clifford::QuarterTurns{-1});
    }
    return out;
  }();
  const ExactMatrix4& b = clockwise[generator_slot(g)];
  return exponent > 0 ? b : b.adjoint();
}

Report braid_algebra_check() {
  Report report("tqc.braid_algebra");
  const ExactMatrix4 id = ExactMatrix4::identity();
  const ExactMatrix4 b12 = braid_operator(Generator::B12);
  const ExactMatrix4 b23 = braid_operator(Generator::B23);
  const ExactMatrix4 b34 = braid_operator(Generator::B34);
  const ExactScalar h = ExactScalar::inv_sqrt2();

  for (Generator g : kAllGenerators) {
    const auto [p, q] = modes(g);
    const ExactMatrix4 b = braid_operator(g);
    const std::string name(to_string(g));
    report.add_exact("braid.closed_form." + name, "braid-operator", b == h * (id - rhat(p) * rhat(q)));
    report.add_exact("braid.unitary." + name, "braid-operator", is_unitary(b));
    report.add_exact("braid.inverse." + name, "braid-operator", b * braid_operator(g, -1) == id);
  }
  report.add_exact("braid.yang_baxter.12_23", "braid-yang-baxter", b12 * b23 * b12 == b23 * b12 * b23);
  report.add_exact("braid.yang_baxter.23_34", "braid-yang-baxter", b23 * b34 * b23 == b34 * b23 * b34);
  report.add_exact("braid.commutator.12_34", "braid-commutator", commutator(b12, b34).is_zero());
  report.add_exact("braid.commutator.12_23", "braid-commutator", commutator(b12, b23) == rhat(1) * rhat(3));
  report.add_exact("braid.commutator.23_34", "braid-commutator", commutator(b23, b34) == rhat(2) * rhat(4));
  report.add_exact("braid.nonlocal.B13", "braid-nonlocal",
                   braid_operator(Generator::B13) == b23 * b12 * b23.adjoint());
  report.add_exact("braid.nonlocal.B14", "braid-nonlocal",
                   braid_operator(Generator::B14) == b34 * b23 * b12 * b23.adjoint() * b34.adjoint());
  report.add_exact("braid.nonlocal.B24", "braid-nonlocal",
                   braid_operator(Generator::B24) == b34 * b23 * b34.adjoint());
  return report;
}

ConjugationImage conjugate_majorana(Generator g, int k) {
  if (k < 1 || k > 4) throw std::out_of_range("Majorana mode index must be in 1..4");
  const auto [p, q] = modes(g);
  if (k == p) return {q, 1};
  if (k == q) return {p, -1};
  return {k, 1};
}

Report conjugation_check() {
  Report report("tqc.conjugation");
  for (Generator g : kAllGenerators) {
    const ExactMatrix4 b = braid_operator(g);
    for (int k = 1; k <= 4; ++k) {
      const auto image = conjugate_majorana(g, k);
      const bool ok = b * rhat(k) * b.adjoint() == ExactScalar(image.sign) * rhat(image.index);
      report.add_exact("conjugation." + std::string(to_string(g)) + ".R" + std::to_string(k), "braid-conjugation",
                       ok);
    }
  }
  return report;
}

Matrix2<ExactScalar> rotation_x() {
  return clifford::exp_generator(ExactScalar::i() * clifford::pauli(1), clifford::QuarterTurns{1});
}

Matrix2<ExactScalar> rotation_y() {
  return clifford::exp_generator(ExactScalar::i() * clifford::pauli(2), clifford::QuarterTurns{1});
}

// Realign U[(a b),(c d)] -> M[(a c),(b d)]; U factors as A (x) B iff M has rank one.
bool is_product_operator(const ExactMatrix4& u) {
  ExactMatrix4 m;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) m(2 * a + c, 2 * b + d) = u(2 * a + b, 2 * c + d);
  for (std::size_t r0 = 0; r0 < 4; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
      for (std::size_t c0 = 0; c0 < 4; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 4; ++c1)
          if (!(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)).is_zero()) return false;
  return !m.is_zero();
}

Report separability_check() {
  Report report("tqc.separability");
  const auto id2 = Matrix2<ExactScalar>::identity();
  report.add_exact("separable.B12", "braid-separability", braid_operator(Generator::B12) == kron(id2, rotation_x()));
  report.add_exact("separable.B34", "braid-separability", braid_operator(Generator::B34) == kron(rotation_y(), id2));
  for (Generator g : kAllGenerators) {
    const bool product = g == Generator::B12 || g == Generator::B34;
    report.add_exact("operator_schmidt_rank." + std::string(to_string(g)), "braid-separability",
                     is_product_operator(braid_operator(g)) == product);
  }
  const ExactVector4 braided = braid_operator(Generator::B23) * fusion_basis_vectors()[0];
  report.add_exact("entangling.B23_vacuum_concurrence", "braid-separability",
                   qubit::concurrence_squared(braided) == ExactScalar(1));
  return report;
}

ExactMatrix4 parity(int p, int q) {
  if (p < 1 || q > 4 || p >= q) throw std::invalid_argument("parity pair must satisfy 1 <= p < q <= 4");
  return -ExactScalar::i() * (rhat(p) * rhat(q));
}

ExactMatrix4 total_charge() { return parity(1, 2) * parity(3, 4); }

Report parity_check() {
  Report report("tqc.parity");
  const ExactMatrix4 id = ExactMatrix4::identity();
  const ExactMatrix4 q = total_charge();
  report.add_exact("charge.product_form", "total-charge", q == -(rhat(1) * rhat(2) * rhat(3) * rhat(4)));
  report.add_exact("charge.involution", "total-charge", is_hermitian(q) && q * q == id);
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      const ExactMatrix4 f = parity(a, b);
      const std::string pair = pair_label(a, b);
      report.add_exact("parity.hermitian." + pair, "fermion-parity", is_hermitian(f));
      report.add_exact("parity.involution." + pair, "fermion-parity", f * f == id);
      report.add_exact("charge.commutes.F" + pair, "total-charge", commutator(q, f).is_zero());
    }
  }
  for (Generator g : kAllGenerators) {
    report.add_exact("charge.commutes." + std::string(to_string(g)), "total-charge",
                     commutator(q, braid_operator(g)).is_zero());
  }
  return report;
}

// ---- logical states -------------------------------------------------------

Occupation parse_occupation(std::string_view s) {
  for (std::size_t k = 0; k < kOccupationNames.size(); ++k)
    if (kOccupationNames[k] == s) return static_cast<Occupation>(k);
  throw std::invalid_argument("occupation label must be one of 00, 10, 01, 11");
}

std::string_view to_string(Occupation o) { return kOccupationNames.at(static_cast<std::size_t>(o)); }

ExactMatrix4 fermion_annihilator(int pair) {
  const ExactScalar half(Rational(1, 2));
  if (pair == 1) return half * (rhat(1) + ExactScalar::i() * rhat(2));
  if (pair == 2) return half * (rhat(3) + ExactScalar::i() * rhat(4));
  throw std::out_of_range("fermion pair must be 1 (modes 1,2) or 2 (modes 3,4)");
}

const std::array<ExactVector4, 4>& fusion_basis_vectors() {
  static const std::array<ExactVector4, 4> basis = [] {
    const ExactScalar half(Rational(1, 2));
    const ExactScalar i = ExactScalar::i();
    const ExactScalar phase = half * ExactScalar::zeta();  // e^{i pi/4} / 2
    return std::array<ExactVector4, 4>{
        half * ExactVector4({1, -1, -i, i}),
        phase * ExactVector4({1, 1, -i, -i}),
        phase * ExactVector4({-i, i, 1, -1}),
        half * ExactVector4({-i, -i, 1, 1}),
    };
  }();
  return basis;
}

FusionState::FusionState(const ExactVector4& occupation_amplitudes) : amp_(occupation_amplitudes) {
  if (amp_.dot(amp_) != ExactScalar(1)) throw std::invalid_argument("fusion state must have unit norm");
}

FusionState FusionState::basis(Occupation o) {
  return FusionState(ExactVector4::basis(static_cast<std::size_t>(o)));
}

FusionState FusionState::from_vector(const ExactVector4& v) {
  return FusionState(occupation_frame().adjoint() * v);
}

ExactVector4 FusionState::to_vector() const { return occupation_frame() * amp_; }

std::optional<int> FusionState::parity() const {
  const ExactVector4 qa = charge_occupation() * amp_;
  if (qa == amp_) return 1;
  if (qa == -amp_) return -1;
  return std::nullopt;
}

ExactScalar FusionState::charge_expectation() const { return amp_.dot(charge_occupation() * amp_); }

std::optional<Anyon> FusionState::total_charge_label() const {
  const auto p = parity();
  if (!p) return std::nullopt;
  return *p > 0 ? Anyon::Vacuum : Anyon::Psi;
}

std::array<FusionState, 4> fusion_basis() {
  return {FusionState::basis(Occupation::Empty), FusionState::basis(Occupation::First),
          FusionState::basis(Occupation::Second), FusionState::basis(Occupation::Both)};
}

Report fusion_basis_check() {
  Report report("tqc.fusion_basis");
  const auto& v = fusion_basis_vectors();
  const ExactMatrix4 f12 = fermion_annihilator(1);
  const ExactMatrix4 f34 = fermion_annihilator(2);
  const auto vac = v[0];
  report.add_exact("basis.annihilates.f12", "fermion-vacuum", (f12 * vac).is_zero());
  report.add_exact("basis.annihilates.f34", "fermion-vacuum", (f34 * vac).is_zero());
  report.add_exact("basis.creation.10", "fermion-creation", f12.adjoint() * vac == v[1]);
  report.add_exact("basis.creation.01", "fermion-creation", f34.adjoint() * vac == v[2]);
  report.add_exact("basis.creation.11", "fermion-creation", f34.adjoint() * f12.adjoint() * vac == v[3]);

  const ExactMatrix4 f12_parity = parity(1, 2);
  const ExactMatrix4 f34_parity = parity(3, 4);
  const ExactMatrix4 q = total_charge();
  constexpr int kF12[4] = {1, -1, 1, -1};
  constexpr int kF34[4] = {1, 1, -1, -1};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string name = label(static_cast<Occupation>(k));
    report.add_exact("basis.parity12." + name, "fermion-parity", f12_parity * v[k] == ExactScalar(kF12[k]) * v[k]);
    report.add_exact("basis.parity34." + name, "fermion-parity", f34_parity * v[k] == ExactScalar(kF34[k]) * v[k]);
    report.add_exact("basis.charge." + name, "total-charge", q * v[k] == ExactScalar(kF12[k] * kF34[k]) * v[k]);
    report.add_exact("basis.separable." + name, "fermion-basis", qubit::concurrence_squared(v[k]).is_zero());
    for (std::size_t j = 0; j < 4; ++j) {
      if (j < k) continue;
      report.add_exact("basis.orthonormal." + name + "_" + label(static_cast<Occupation>(j)), "fermion-basis",
                       v[k].dot(v[j]) == ExactScalar(j == k ? 1 : 0));
    }
  }
  return report;
}

ExactMatrix4 braid_operator_occupation(Generator g, int exponent) {
  check_exponent(exponent);
  static const std::array<ExactMatrix4, 12> table = [] {
    std::array<ExactMatrix4, 12> out;
    for (Generator gen : kAllGenerators) {
      out[2 * generator_slot(gen)] = to_occupation(braid_operator(gen, 1));
      out[2 * generator_slot(gen) + 1] = to_occupation(braid_operator(gen, -1));
    }
    return out;
  }();
  return table[2 * generator_slot(g) + (exponent > 0 ? 0 : 1)];
}

FusionState evaluate_braid(const BraidWord& w, const FusionState& init) {
  ExactVector4 amp = init.amplitudes();
  for (const auto& step : w) amp = braid_operator_occupation(step.generator, step.exponent) * amp;
  return FusionState(amp);
}

std::optional<ExactScalar> majorana_condition_check(const ExactVector4& s) {
  const ExactVector4 cs = bispinor::charge_conjugate(s);
  std::size_t pivot = 0;
  while (pivot < 4 && s[pivot].is_zero()) ++pivot;
  if (pivot == 4) return std::nullopt;
  const ExactScalar lambda = cs[pivot] / s[pivot];
  if (cs != lambda * s) return std::nullopt;
  return lambda;
}

std::optional<ExactScalar> majorana_condition_check(const FusionState& s) {
  return majorana_condition_check(s.to_vector());
}

Report braiding_entanglement_check() {
  Report report("tqc.braiding");
  const ExactScalar h = ExactScalar::inv_sqrt2();
  const ExactScalar ih = ExactScalar::i() * h;
  // B23 images in the occupation basis (|00>, |10>, |01>, |11>).
  const std::array<ExactVector4, 4> expected{
      ExactVector4({h, 0, 0, ih}),
      ExactVector4({0, h, -ih, 0}),
      ExactVector4({0, -ih, h, 0}),
      ExactVector4({ih, 0, 0, h}),
  };
  const BraidWord word{{Generator::B23, 1}};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto occ = static_cast<Occupation>(k);
    const std::string name = label(occ);
    const FusionState init = FusionState::basis(occ);
    const FusionState out = evaluate_braid(word, init);
    report.add_exact("b23.amplitudes." + name, "braid-entanglement", out.amplitudes() == expected[k]);
    report.add_exact("b23.concurrence." + name, "braid-entanglement",
                     qubit::concurrence_squared(out.to_vector()) == ExactScalar(1));
    report.add_exact("b23.parity_preserved." + name, "total-charge", out.parity() == init.parity());
    // Same result through the two-qubit matrix.
    report.add_exact("b23.matrix_route." + name, "braid-entanglement",
                     braid_operator(Generator::B23) * fusion_basis_vectors()[k] == out.to_vector());
  }
  const auto q0 = qubit::single_qubit(0);
  const auto q1 = qubit::single_qubit(1);
  const ExactVector4 schmidt = h * (kron(q0, q0) + ExactScalar::i() * kron(q1, q1));
  report.add_exact("b23.schmidt_form.00", "braid-entanglement",
                   evaluate_braid(word, FusionState::basis(Occupation::Empty)).to_vector() == schmidt);
  return report;
}

Report abelian_phase_check() {
  Report report("tqc.abelian");
  const ExactScalar plus = ExactScalar::zeta();
  const ExactScalar minus = ExactScalar::zeta().conj();
  for (Generator g : {Generator::B12, Generator::B34}) {
    for (std::size_t k = 0; k < 4; ++k) {
      const ExactVector4& v = fusion_basis_vectors()[k];
      const ExactVector4 out = braid_operator(g) * v;
      const bool ok = out == plus * v || out == minus * v;
      report.add_exact("abelian." + std::string(to_string(g)) + "." + label(static_cast<Occupation>(k)),
                       "abelian-braid", ok);
    }
  }
  return report;
}

Report braided_majorana_condition_check() {
  Report report("tqc.majorana_condition");
  const ExactScalar minus_i = -ExactScalar::i();
  const std::array<ExactScalar, 4> expected{minus_i, ExactScalar(-1), ExactScalar(-1), minus_i};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto occ = static_cast<Occupation>(k);
    const auto lambda = majorana_condition_check(braid_operator(Generator::B23) * fusion_basis_vectors()[k]);
    report.add_exact("majorana_condition.b23." + label(occ), "braided-majorana-condition",
                     lambda.has_value() && *lambda == expected[k]);
  }
  return report;
}

ChargeConservationResult charge_conservation_sweep(int max_length) {
  ChargeConservationResult result;
  std::array<ExactMatrix4, 6> letters;
  std::size_t n = 0;
  for (Generator g : kLocalGenerators) {
    letters[n++] = braid_operator_occupation(g, 1);
    letters[n++] = braid_operator_occupation(g, -1);
  }
  const ExactMatrix4& q = charge_occupation();
  // Depth-first over words, reusing the state of each prefix.
  auto visit = [&](auto&& self, const ExactVector4& amp, const ExactScalar& expected, int depth) -> void {
    ++result.evaluations;
    if (amp.dot(q * amp) != expected) result.passed = false;
    if (depth == max_length) return;
    for (const auto& m : letters) self(self, m * amp, expected, depth + 1);
  };
  for (const auto& init : fusion_basis()) visit(visit, init.amplitudes(), init.charge_expectation(), 0);
  return result;
}

}  // namespace majorana::tqc
