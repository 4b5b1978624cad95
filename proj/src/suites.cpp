#include "majorana/suites.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "majorana/gamma.h"
#include "majorana/tqc.h"

namespace majorana::suites {

namespace {

// Keeps the worst error per check id over a sample set.
class WorstCase {
 public:
  void observe(const std::string& id, const std::string& anchor, double err) {
    auto [it, inserted] = worst_.try_emplace(id, anchor, err);
    if (!inserted && !(it->second.second >= err)) it->second.second = err;  // NaN sticks
  }
  void flush(Report& report, double tol) const {
    for (const auto& [id, entry] : worst_) report.add_float(id, entry.first, entry.second, tol);
  }

 private:
  std::map<std::string, std::pair<std::string, double>> worst_;
};

std::string idx(int i) { return std::to_string(i); }

}  // namespace

std::vector<bispinor::Direction> random_directions(const Sampling& s) {
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<bispinor::Direction> out;
  out.reserve(s.samples);
  while (out.size() < s.samples) {
    const double theta = std::acos(1.0 - 2.0 * unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    bispinor::Direction d(theta, phi);
    if (!d.is_pole()) out.push_back(d);
  }
  return out;
}

Report gamma_suite() {
  using namespace clifford;
  Report report("gamma");
  report.merge(clifford_check());
  // Closed-form exponentials of the rotation-type generators are unitary with unit determinant.
  const std::array<std::pair<std::string, ExactMatrix4>, 5> generators{{
      {"g1g2", gamma(1) * gamma(2)},
      {"g1g3", gamma(1) * gamma(3)},
      {"g2g3", gamma(2) * gamma(3)},
      {"g0g1g3", gamma(0) * gamma(1) * gamma(3)},
      {"g1", gamma(1)},
  }};
  for (const auto& [name, g] : generators) {
    for (int k = 1; k < 8; ++k) {
      const ExactMatrix4 u = exp_generator(g, QuarterTurns{k});
      report.add_exact("gamma.exp_unitary." + name + ".q" + idx(k), "exponential", is_unitary(u));
      report.add_exact("gamma.exp_det." + name + ".q" + idx(k), "exponential", determinant(u) == ExactScalar(1));
    }
  }
  const auto basis = basis16();
  bool gram = true;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      gram = gram && trace_inner(basis[a].matrix, basis[b].matrix) == ExactScalar(a == b ? 4 : 0);
  report.add_exact("gamma.basis16.orthogonal", "clifford-basis", gram);
  report.add_exact("gamma.gamma5.involution", "chirality", gamma5() * gamma5() == ExactMatrix4::identity());
  return report;
}

Report bispinor_suite(const Sampling& s) {
  using namespace bispinor;
  Report report("bispinor");
  const ExactMatrix4 id = ExactMatrix4::identity();

  for (int i = 1; i <= 4; ++i) {
    const auto u = canonical_weyl(i);
    report.add_exact("weyl.labels.u" + idx(i), "weyl-labels", measure_labels(u.components) == weyl_labels(i));
    const auto m = majorana(i);
    report.add_exact("majorana.condition.u" + idx(i), "majorana-condition",
                     charge_conjugate(m.components) == ExactScalar(majorana_conjugation_sign(i)) * m.components);
  }
  const ExactMatrix4 r3 = weyl_to_majorana_map();
  report.add_exact("equivalence.canonical.unitary", "weyl-majorana-map", is_unitary(r3));
  for (const auto& rel : equivalence_relations()) {
    report.add_exact("equivalence.canonical.u" + idx(rel.weyl), "weyl-majorana-map",
                     r3 * canonical_weyl(rel.weyl).components ==
                         ExactScalar(rel.sign) * majorana(rel.majorana).components);
  }
  const auto [pp, pm] = energy_projectors();
  report.add_exact("projector.canonical.idempotent_plus", "energy-projectors", pp * pp == pp);
  report.add_exact("projector.canonical.idempotent_minus", "energy-projectors", pm * pm == pm);
  report.add_exact("projector.canonical.orthogonal", "energy-projectors", (pp * pm).is_zero());
  report.add_exact("projector.canonical.complete", "energy-projectors", pp + pm == id);

  WorstCase worst;
  const FloatMatrix4 fid = FloatMatrix4::identity();
  for (const auto& d : random_directions(s)) {
    const FloatMatrix4 omega = weyl_to_majorana_map(d);
    worst.observe("equivalence.general.unitary", "weyl-majorana-map", max_abs_diff(omega * omega.adjoint(), fid));
    for (const auto& rel : equivalence_relations()) {
      const auto lhs = omega * general_weyl(rel.weyl, d).components;
      const auto rhs = Complex(rel.sign) * majorana(rel.majorana, d).components;
      worst.observe("equivalence.general.u" + idx(rel.weyl), "weyl-majorana-map", max_abs_diff(lhs, rhs));
    }
    const auto [p, m] = energy_projectors(d);
    worst.observe("projector.general.idempotent_plus", "energy-projectors", max_abs_diff(p * p, p));
    worst.observe("projector.general.idempotent_minus", "energy-projectors", max_abs_diff(m * m, m));
    worst.observe("projector.general.orthogonal", "energy-projectors", max_abs_diff(p * m, FloatMatrix4{}));
    worst.observe("projector.general.complete", "energy-projectors", max_abs_diff(p + m, fid));
    const auto [sp, sm] = spin_sum_projectors(d);
    worst.observe("projector.general.spin_sum", "energy-projectors",
                  std::max(max_abs_diff(sp, p), max_abs_diff(sm, m)));
    const FloatMatrix4 h = alpha_dot(d);
    for (int i = 1; i <= 4; ++i) {
      const auto u = general_weyl(i, d);
      worst.observe("weyl.general.hamiltonian.u" + idx(i), "weyl-equation",
                    max_abs_diff(h * u.components, Complex(u.labels.energy) * u.components));
      worst.observe("weyl.general.norm.u" + idx(i), "weyl-equation", std::abs(norm(u.components) - 1.0));
      const auto mj = majorana(i, d);
      worst.observe("majorana.general.condition.u" + idx(i), "majorana-condition",
                    max_abs_diff(charge_conjugate(mj.components),
                                 Complex(majorana_conjugation_sign(i)) * mj.components));
    }
    const Report flips = flip_identities_check(d);
    for (const auto& rec : flips.records())
      worst.observe(rec.id, rec.anchor, rec.max_abs_error.value_or(std::nan("")));
  }
  worst.flush(report, kFloatTolerance);
  return report;
}

Report qubit_suite(const Sampling& s) {
  using namespace qubit;
  Report report("qubit");
  for (int i = 1; i <= 4; ++i) {
    report.merge(yang_baxter_check(r_gate(i)));
    report.merge(yang_baxter_check(rhat_gate(i)));
  }
  report.merge(clifford_gate_check());
  const auto search = completeness_search();
  report.add_exact("completeness.candidates", "clifford-gate-completeness", search.candidates_tested == 64);
  report.add_exact("completeness.entangling_extensions", "clifford-gate-completeness", search.extensions.empty());

  for (int b = 0; b < 4; ++b) {
    report.add_exact("dictionary.weyl." + basis_label(b), "qubit-dictionary",
                     computational_basis(b) == bispinor::canonical_weyl(b == 0 ? 4 : b == 1 ? 2 : b == 2 ? 1 : 3)
                                                   .components);
  }
  for (bool hatted : {false, true}) {
    for (int i = 1; i <= 4; ++i) {
      const Gate g = hatted ? rhat_gate(i) : r_gate(i);
      for (int b = 0; b < 4; ++b) {
        const ExactVector4 out = gate(g) * computational_basis(b);
        report.add_exact("gate.bell_image." + std::string(to_string(g)) + "." + basis_label(b), "gate-tables",
                         identify_bell(out).has_value() && concurrence_squared(out) == ExactScalar(1));
      }
    }
  }

  WorstCase worst;
  for (const auto& d : random_directions(s)) {
    for (int i = 1; i <= 4; ++i) {
      worst.observe("entanglement.weyl.u" + idx(i), "entanglement-dichotomy",
                    concurrence(bispinor::general_weyl(i, d).components));
      worst.observe("entanglement.majorana.u" + idx(i), "entanglement-dichotomy",
                    std::abs(concurrence(bispinor::majorana(i, d).components) - 1.0));
    }
  }
  worst.flush(report, kFloatTolerance);
  return report;
}

Report tqc_suite() {
  using namespace tqc;
  Report report("tqc");
  report.merge(braid_algebra_check());
  report.merge(conjugation_check());
  report.merge(separability_check());
  report.merge(parity_check());
  report.merge(fusion_basis_check());
  report.merge(braiding_entanglement_check());
  report.merge(abelian_phase_check());
  report.merge(braided_majorana_condition_check());
  const auto sweep = charge_conservation_sweep(6);
  report.add_exact("charge.sweep.length_le_6", "total-charge", sweep.passed);
  return report;
}

Report run_suite(std::string_view name, const Sampling& s) {
  if (name == "gamma") return gamma_suite();
  if (name == "bispinor") return bispinor_suite(s);
  if (name == "qubit") return qubit_suite(s);
  if (name == "tqc") return tqc_suite();
  if (name == "all") {
    Report all("all");
    all.merge(gamma_suite());
    all.merge(bispinor_suite(s));
    all.merge(qubit_suite(s));
    all.merge(tqc_suite());
    return all;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::array<bispinor::Labels, 4> weyl_label_table() {
  std::array<bispinor::Labels, 4> out;
  for (int i = 1; i <= 4; ++i)
    out[static_cast<std::size_t>(i - 1)] = bispinor::measure_labels(bispinor::canonical_weyl(i).components);
  return out;
}

GateTable gate_table(bool hatted) {
  GateTable t;
  for (int i = 1; i <= 4; ++i)
    for (std::size_t c = 0; c < 4; ++c)
      t[static_cast<std::size_t>(i - 1)][c] =
          qubit::gate_action(hatted ? qubit::rhat_gate(i) : qubit::r_gate(i), kTableColumns[c]);
  return t;
}

}  // namespace majorana::suites
