#include "majorana/tqc.h"

#include <gtest/gtest.h>

#include <numbers>

#include "majorana/bispinor.h"
#include "majorana/qubit.h"
#include "oracles.h"

namespace majorana::tqc {
namespace {

const ExactScalar kI = ExactScalar::i();

TEST(Fusion, rules) {
  using A = Anyon;
  EXPECT_EQ(fuse(A::Sigma, A::Sigma), (FusionOutcome{A::Vacuum, A::Psi}));
  EXPECT_EQ(fuse(A::Sigma, A::Psi), FusionOutcome{A::Sigma});
  EXPECT_EQ(fuse(A::Psi, A::Sigma), FusionOutcome{A::Sigma});
  EXPECT_EQ(fuse(A::Psi, A::Psi), FusionOutcome{A::Vacuum});
  for (A a : {A::Vacuum, A::Sigma, A::Psi}) EXPECT_EQ(fuse(A::Vacuum, a), FusionOutcome{a});
  EXPECT_EQ(to_string(A::Sigma), "sigma");
}

TEST(Fusion, associative_and_commutative) {
  const std::array<Anyon, 3> all{Anyon::Vacuum, Anyon::Sigma, Anyon::Psi};
  for (Anyon a : all)
    for (Anyon b : all) {
      EXPECT_EQ(fuse(a, b), fuse(b, a));
      for (Anyon c : all) EXPECT_EQ(fuse(fuse(a, b), c), fuse(a, fuse(b, c)));
    }
  // Four sigmas: two copies of the vacuum channel, two of psi.
  const auto four = fuse(fuse(fuse(Anyon::Sigma, Anyon::Sigma), Anyon::Sigma), Anyon::Sigma);
  EXPECT_EQ(four.count(Anyon::Vacuum), 2u);
  EXPECT_EQ(four.count(Anyon::Psi), 2u);
}

TEST(Majorana, operators_are_clifford) {
  const auto id = ExactMatrix4::identity();
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k)
      EXPECT_EQ(anticommutator(majorana_operator(j), majorana_operator(k)),
                ExactScalar(j == k ? 2 : 0) * id);
  EXPECT_THROW(majorana_operator(5), std::out_of_range);
}

TEST(Braid, closed_form_matches_series) {
  for (Generator g : kAllGenerators) {
    const auto [p, q] = modes(g);
    const auto series = oracle::expm(Complex(-std::numbers::pi / 4) * (oracle::rhat(p) * oracle::rhat(q)));
    EXPECT_LT(max_abs_diff(to_float(braid_operator(g)), series), 1e-13) << to_string(g);
    const auto inverse = oracle::expm(Complex(std::numbers::pi / 4) * (oracle::rhat(p) * oracle::rhat(q)));
    EXPECT_LT(max_abs_diff(to_float(braid_operator(g, -1)), inverse), 1e-13) << to_string(g);
  }
  EXPECT_THROW(braid_operator(Generator::B12, 2), std::invalid_argument);
}

TEST(Braid, algebra_and_conjugation) {
  const Report algebra = braid_algebra_check();
  EXPECT_TRUE(algebra.all_passed());
  EXPECT_TRUE(algebra.find("braid.yang_baxter.12_23")->passed);
  const Report conj = conjugation_check();
  EXPECT_EQ(conj.records().size(), 24u);
  EXPECT_TRUE(conj.all_passed());
  EXPECT_EQ(conjugate_majorana(Generator::B23, 2), (ConjugationImage{3, 1}));
  EXPECT_EQ(conjugate_majorana(Generator::B23, 3), (ConjugationImage{2, -1}));
  EXPECT_EQ(conjugate_majorana(Generator::B23, 4), (ConjugationImage{4, 1}));
}

TEST(Braid, wrong_conjugation_sign_is_detected) {
  const auto b = braid_operator(Generator::B12);
  EXPECT_NE(b * majorana_operator(1) * b.adjoint(), -majorana_operator(2));
}

TEST(Separability, local_and_nonlocal) {
  EXPECT_TRUE(separability_check().all_passed());
  EXPECT_TRUE(is_product_operator(kron(rotation_y(), rotation_x())));
  EXPECT_FALSE(is_product_operator(qubit::gate(qubit::Gate::Cnot)));
  EXPECT_FALSE(is_product_operator(braid_operator(Generator::B23)));
}

TEST(Parity, charge_and_parities) {
  EXPECT_TRUE(parity_check().all_passed());
  EXPECT_THROW(parity(2, 1), std::invalid_argument);
  EXPECT_THROW(parity(0, 2), std::invalid_argument);
  EXPECT_EQ(total_charge() * fusion_basis_vectors()[2], -fusion_basis_vectors()[2]);
}

TEST(FusionBasis, vectors_and_relations) {
  EXPECT_TRUE(fusion_basis_check().all_passed());
  const auto& v = fusion_basis_vectors();
  const ExactScalar half(Rational(1, 2));
  EXPECT_EQ(v[0], half * ExactVector4({1, -1, -kI, kI}));
  EXPECT_EQ(v[3], half * ExactVector4({-kI, -kI, 1, 1}));
  // The e^{i pi/4} prefactor is needed for the creation relations to hold exactly.
  EXPECT_NE(fermion_annihilator(1).adjoint() * v[0], half * ExactVector4({1, 1, -kI, -kI}));
  EXPECT_THROW(fermion_annihilator(3), std::out_of_range);
}

TEST(FusionBasis, states) {
  for (auto o : {Occupation::Empty, Occupation::First, Occupation::Second, Occupation::Both}) {
    const FusionState s = FusionState::basis(o);
    EXPECT_EQ(parse_occupation(to_string(o)), o);
    EXPECT_EQ(FusionState::from_vector(s.to_vector()), s);
    const int expected = (o == Occupation::Empty || o == Occupation::Both) ? 1 : -1;
    EXPECT_EQ(s.parity(), expected);
    EXPECT_EQ(s.total_charge_label(), expected > 0 ? Anyon::Vacuum : Anyon::Psi);
  }
  const ExactScalar h = ExactScalar::inv_sqrt2();
  const FusionState mixed(ExactVector4({h, h, 0, 0}));
  EXPECT_FALSE(mixed.parity().has_value());
  EXPECT_TRUE(mixed.charge_expectation().is_zero());
  EXPECT_THROW(FusionState(ExactVector4({1, 1, 0, 0})), std::invalid_argument);
  EXPECT_THROW(parse_occupation("2"), std::invalid_argument);
}

TEST(BraidWord, parse_and_print) {
  const BraidWord w = parse_braid_word("B12,B23^-1, B34");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[1].generator, Generator::B23);
  EXPECT_EQ(w[1].exponent, -1);
  EXPECT_EQ(to_string(w), "B12,B23^-1,B34");
  EXPECT_TRUE(parse_braid_word("").empty());
  EXPECT_THROW(parse_braid_word("B15"), std::invalid_argument);
  EXPECT_THROW(parse_braid_word("B12,,B23"), std::invalid_argument);
  EXPECT_THROW(parse_braid_word("B12^2"), std::invalid_argument);
}

TEST(BraidWord, evaluation) {
  const FusionState vac = FusionState::basis(Occupation::Empty);
  EXPECT_EQ(evaluate_braid({}, vac), vac);
  const FusionState once = evaluate_braid(parse_braid_word("B12"), vac);
  const ExactScalar phase = once.amplitudes()[0];
  EXPECT_TRUE(phase == ExactScalar::zeta() || phase == ExactScalar::zeta().conj());
  // First step acts first: B23 then B12 is B12 * B23.
  const FusionState ordered = evaluate_braid(parse_braid_word("B23,B12"), vac);
  EXPECT_EQ(ordered.to_vector(),
            braid_operator(Generator::B12) * braid_operator(Generator::B23) * vac.to_vector());
  EXPECT_EQ(evaluate_braid(parse_braid_word("B23,B23^-1"), vac), vac);
  // Four exchanges of the same pair give the fermion parity up to sign.
  const FusionState four = evaluate_braid(parse_braid_word("B12,B12,B12,B12"), vac);
  EXPECT_EQ(four.amplitudes(), -vac.amplitudes());
}

TEST(Braiding, entanglement_and_phases) {
  EXPECT_TRUE(braiding_entanglement_check().all_passed());
  EXPECT_TRUE(abelian_phase_check().all_passed());
  EXPECT_TRUE(braided_majorana_condition_check().all_passed());
  const auto braided = evaluate_braid(parse_braid_word("B23"), FusionState::basis(Occupation::Empty));
  EXPECT_NEAR(qubit::concurrence(to_float(braided.to_vector())), 1.0, 1e-12);
  EXPECT_NEAR(oracle::schmidt_concurrence(to_float(braided.to_vector())), 1.0, 1e-12);
}

TEST(MajoranaCondition, unbraided_basis_fails) {
  for (const auto& v : fusion_basis_vectors()) EXPECT_FALSE(majorana_condition_check(v).has_value());
  EXPECT_FALSE(majorana_condition_check(ExactVector4{}).has_value());
  // Majorana bispinors satisfy it with unit eigenphase.
  const auto m = bispinor::majorana(1);
  const auto lambda = majorana_condition_check(m.components);
  ASSERT_TRUE(lambda.has_value());
  EXPECT_EQ(*lambda * lambda->conj(), ExactScalar(1));
}

TEST(Charge, conserved_by_all_short_words) {
  const auto result = charge_conservation_sweep(6);
  EXPECT_TRUE(result.passed);
  // 4 initial states times sum_{k<=6} 6^k words.
  EXPECT_EQ(result.evaluations, 4u * 55987u);
}

}  // namespace
}  // namespace majorana::tqc
