#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/bispinor.h"
#include "majorana/qubit.h"
#include "majorana/report.h"

// Aggregated verification suites and table reproduction shared by the CLI
// and the acceptance tests.
namespace majorana::suites {

struct Sampling {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
};

// Directions uniform on the sphere, poles excluded. Deterministic in the seed.
std::vector<bispinor::Direction> random_directions(const Sampling& s);

Report gamma_suite();
Report bispinor_suite(const Sampling& s);
Report qubit_suite(const Sampling& s);
Report tqc_suite();

inline constexpr std::array<std::string_view, 5> kSuiteNames = {"all", "gamma", "bispinor", "qubit", "tqc"};
// Throws std::invalid_argument for an unknown name.
Report run_suite(std::string_view name, const Sampling& s);

// Column order used by the gate tables: |10>, |01>, |11>, |00>.
inline constexpr std::array<int, 4> kTableColumns = {2, 1, 3, 0};

// Measured energy/helicity/chirality of the canonical Weyl bispinors.
std::array<bispinor::Labels, 4> weyl_label_table();

// rows[i][c] = gate_i |kTableColumns[c]> in the Bell basis; R1..R4 or RHat1..RHat4.
using GateTable = std::array<std::array<qubit::BellDecomposition, 4>, 4>;
GateTable gate_table(bool hatted);

}  // namespace majorana::suites
