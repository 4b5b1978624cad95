#include "majorana/gamma.h"

namespace majorana::clifford {

namespace {

void check_spacetime_index(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("spacetime index must be in 0..3");
}

void check_spatial_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("spatial index must be in 1..3");
}

}  // namespace

Matrix2<ExactScalar> pauli(int k) {
  const ExactScalar i = ExactScalar::i();
  switch (k) {
    case 0:
      return {{1, 0}, {0, 1}};
    case 1:
      return {{0, 1}, {1, 0}};
    case 2:
      return {{0, -i}, {i, 0}};
    case 3:
      return {{1, 0}, {0, -1}};
    default:
      throw std::out_of_range("pauli index must be in 0..3");
  }
}

int metric(int mu, int nu) {
  check_spacetime_index(mu);
  check_spacetime_index(nu);
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

ExactMatrix4 gamma(int mu) {
  check_spacetime_index(mu);
  const Matrix2<ExactScalar> zero;
  if (mu == 0) return blocks(zero, pauli(0), pauli(0), zero);
  return blocks(zero, pauli(mu), -pauli(mu), zero);
}

ExactMatrix4 gamma5() {
  return ExactScalar::i() * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
}

ExactMatrix4 sigma_big(int i) {
  check_spatial_index(i);
  return gamma5() * gamma(0) * gamma(i);
}

ExactMatrix4 alpha(int i) {
  check_spatial_index(i);
  return gamma(0) * gamma(i);
}

ExactMatrix4 charge_conjugation_matrix() { return ExactScalar::i() * gamma(2); }

std::vector<AnticommutatorResult> anticommutator_table() {
  std::vector<AnticommutatorResult> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const int expected = 2 * metric(mu, nu);
      const bool ok = anticommutator(gamma(mu), gamma(nu)) == ExactScalar(expected) * ExactMatrix4::identity();
      out.push_back({mu, nu, expected, ok});
    }
  }
  return out;
}

Report clifford_check() {
  Report report("gamma");
  for (const auto& r : anticommutator_table()) {
    report.add_exact("gamma.anticommutator." + std::to_string(r.mu) + std::to_string(r.nu), "clifford", r.passed);
  }
  return report;
}

nlohmann::ordered_json to_json(const std::vector<AnticommutatorResult>& table) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : table) {
    out.push_back({{"pair", {r.mu, r.nu}}, {"expected", r.expected}, {"pass", r.passed}});
  }
  return out;
}

std::vector<CliffordElement> basis16() {
  std::vector<CliffordElement> out;
  out.push_back({"1", ExactMatrix4::identity()});
  for (int mu = 0; mu < 4; ++mu) out.push_back({"g" + std::to_string(mu), gamma(mu)});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      out.push_back({"g" + std::to_string(mu) + "g" + std::to_string(nu), gamma(mu) * gamma(nu)});
  for (int mu = 0; mu < 4; ++mu) out.push_back({"g5g" + std::to_string(mu), gamma5() * gamma(mu)});
  out.push_back({"g5", gamma5()});
  return out;
}

}  // namespace majorana::clifford
