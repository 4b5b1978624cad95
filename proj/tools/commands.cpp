#include "commands.h"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "majorana/bispinor.h"
#include "majorana/gamma.h"
#include "majorana/qubit.h"
#include "majorana/suites.h"
#include "majorana/tqc.h"

namespace cli {

using json = nlohmann::ordered_json;
using namespace majorana;

namespace {

json exact_json(const ExactScalar& x) {
  json j;
  for (std::size_t k = 0; k < 4; ++k) j["c" + std::to_string(k)] = x[k].to_string();
  return j;
}

json float_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

template <class T>
json components_json(const Vector4<T>& v) {
  json arr = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    if constexpr (ScalarTraits<T>::is_exact) {
      arr.push_back(exact_json(v[k]));
    } else {
      arr.push_back(float_json(v[k]));
    }
  }
  return arr;
}

json labels_json(const bispinor::Labels& l) {
  json j{{"energy", l.energy}};
  j["helicity"] = l.helicity ? json(*l.helicity) : json(nullptr);
  j["chirality"] = l.chirality ? json(*l.chirality) : json(nullptr);
  return j;
}

std::string sign_label(int s) { return s > 0 ? "+" : "-"; }
std::string optional_sign(const std::optional<int>& s) { return s ? (*s > 0 ? "+1" : "-1") : "n/a"; }

std::string cell_text(const qubit::BellDecomposition& c) {
  return qubit::format_phase(c.phase) + "|" + std::string(qubit::to_string(c.label)) + ">";
}

std::string column_label(int basis) { return "|" + qubit::basis_label(basis) + ">"; }

}  // namespace

int cmd_verify(const GlobalOptions& g, const std::string& suite, std::ostream& out, std::ostream& err) {
  // --exact restricts the run to the exact backend: no sampled float checks.
  const suites::Sampling sampling{g.seed, g.exact ? 0 : g.samples};
  const Report report = suites::run_suite(suite, sampling);

  json j = report.to_json();
  j["seed"] = g.seed;
  j["samples"] = sampling.samples;
  if (suite == "gamma" || suite == "all") j["clifford_pairs"] = clifford::to_json(clifford::anticommutator_table());
  if (suite == "qubit" || suite == "all") {
    const auto search = qubit::completeness_search();
    j["completeness"] = {{"candidates_tested", search.candidates_tested},
                         {"algebraic_matches", search.algebraic_matches},
                         {"count", search.extensions.size()}};
  }
  out << j.dump(2) << '\n';

  err << "suite " << suite << ": " << report.records().size() << " checks, " << report.passed_count()
      << " passed, " << report.failed_count() << " failed\n";
  for (const auto& rec : report.records())
    if (!rec.passed) err << "  FAIL " << rec.id << '\n';
  return report.all_passed() ? kPass : kCheckFailure;
}

int cmd_tables(const GlobalOptions& g, bool csv, std::ostream& out) {
  const auto labels = suites::weyl_label_table();
  const auto r = suites::gate_table(false);
  const auto rh = suites::gate_table(true);
  const auto gate_name = [](bool hatted, int i) {
    return std::string(qubit::to_string(hatted ? qubit::rhat_gate(i) : qubit::r_gate(i)));
  };

  if (g.json) {
    json t1 = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      json row = labels_json(labels[i]);
      t1.push_back(json{{"bispinor", "u" + std::to_string(i + 1)}, {"energy", sign_label(labels[i].energy)},
                        {"helicity", row["helicity"]}, {"chirality", row["chirality"]}});
    }
    json out_j{{"weyl_labels", t1}};
    for (bool hatted : {false, true}) {
      json rows = json::array();
      const auto& t = hatted ? rh : r;
      for (int i = 1; i <= 4; ++i) {
        json cells = json::array();
        for (std::size_t c = 0; c < 4; ++c) {
          const auto& cell = t[static_cast<std::size_t>(i - 1)][c];
          cells.push_back(json{{"input", qubit::basis_label(suites::kTableColumns[c])},
                               {"phase", qubit::format_phase(cell.phase)},
                               {"bell", qubit::to_string(cell.label)}});
        }
        rows.push_back(json{{"gate", gate_name(hatted, i)}, {"cells", cells}});
      }
      out_j[hatted ? "rhat_gates" : "r_gates"] = rows;
    }
    out << out_j.dump(2) << '\n';
    return kPass;
  }

  if (csv) {
    out << "table,row,column,value\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string col = "u" + std::to_string(i + 1);
      out << "weyl_labels,energy," << col << ',' << sign_label(labels[i].energy) << '\n';
      out << "weyl_labels,helicity," << col << ',' << optional_sign(labels[i].helicity) << '\n';
      out << "weyl_labels,chirality," << col << ',' << optional_sign(labels[i].chirality) << '\n';
    }
    for (bool hatted : {false, true})
      for (int i = 1; i <= 4; ++i)
        for (std::size_t c = 0; c < 4; ++c)
          out << (hatted ? "rhat_gates," : "r_gates,") << gate_name(hatted, i) << ','
              << qubit::basis_label(suites::kTableColumns[c]) << ','
              << cell_text((hatted ? rh : r)[static_cast<std::size_t>(i - 1)][c]) << '\n';
    return kPass;
  }

  out << "Canonical Weyl bispinors\n";
  out << std::left << std::setw(12) << "" ;
  for (int i = 1; i <= 4; ++i) out << std::setw(8) << ("u" + std::to_string(i));
  out << '\n' << std::setw(12) << "energy";
  for (const auto& l : labels) out << std::setw(8) << sign_label(l.energy);
  out << '\n' << std::setw(12) << "helicity";
  for (const auto& l : labels) out << std::setw(8) << optional_sign(l.helicity);
  out << '\n' << std::setw(12) << "chirality";
  for (const auto& l : labels) out << std::setw(8) << optional_sign(l.chirality);
  out << "\n";
  for (bool hatted : {false, true}) {
    out << '\n' << (hatted ? "Clifford gates RH1..RH4" : "Yang-Baxter gates R1..R4") << '\n';
    out << std::setw(8) << "";
    for (int col : suites::kTableColumns) out << std::setw(10) << column_label(col);
    out << '\n';
    for (int i = 1; i <= 4; ++i) {
      out << std::setw(8) << gate_name(hatted, i);
      for (const auto& cell : (hatted ? rh : r)[static_cast<std::size_t>(i - 1)]) out << std::setw(10) << cell_text(cell);
      out << '\n';
    }
  }
  return kPass;
}

int cmd_bispinor(const GlobalOptions& g, const BispinorOptions& o, std::ostream& out) {
  if (o.index < 1 || o.index > 4) throw UsageError("--index must be in 1..4");
  const bool majorana_type = o.type == "majorana";
  bispinor::Direction d;
  try {
    d = bispinor::Direction(o.theta, o.phi);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  json j{{"type", o.type}, {"index", o.index}, {"direction", {{"theta", d.theta()}, {"phi", d.phi()}}}};

  if (g.exact) {
    if (o.theta != 0.0 || o.phi != 0.0) throw UsageError("--exact requires --theta 0 --phi 0 (canonical frame)");
    const auto u = majorana_type ? bispinor::majorana(o.index) : bispinor::canonical_weyl(o.index);
    j["backend"] = "exact";
    j["components"] = components_json(u.components);
    j["labels"] = labels_json(bispinor::measure_labels(u.components));
    if (majorana_type) j["conjugation_sign"] = bispinor::majorana_conjugation_sign(o.index);
  } else {
    const auto u = majorana_type ? bispinor::majorana(o.index, d) : bispinor::general_weyl(o.index, d);
    j["backend"] = "float";
    j["components"] = components_json(u.components);
    j["labels"] = labels_json(bispinor::measure_labels(u.components, d));
    if (majorana_type) j["conjugation_sign"] = bispinor::majorana_conjugation_sign(o.index);
    if (o.energy) {
      if (!(*o.energy > 0.0)) throw UsageError("--energy must be positive");
      j["energy"] = *o.energy;
      j["rescaled_components"] = components_json(bispinor::rescaled(u, *o.energy));
    }
  }
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_braid(const GlobalOptions&, const BraidOptions& o, std::ostream& out) {
  tqc::BraidWord word;
  tqc::Occupation init;
  try {
    word = tqc::parse_braid_word(o.word);
    init = tqc::parse_occupation(o.init);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (int k : o.inverse) {
    if (k < 1 || static_cast<std::size_t>(k) > word.size())
      throw UsageError("--inverse step " + std::to_string(k) + " is outside the word");
    auto& step = word[static_cast<std::size_t>(k - 1)];
    step.exponent = -step.exponent;
  }

  const tqc::FusionState final_state = tqc::evaluate_braid(word, tqc::FusionState::basis(init));
  const ExactVector4 vec = final_state.to_vector();

  json amps = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    const ExactScalar a = final_state.amplitudes()[k];
    amps.push_back(json{{"state", tqc::to_string(static_cast<tqc::Occupation>(k))},
                        {"exact", exact_json(a)},
                        {"float", float_json(a.to_complex())}});
  }
  const ExactScalar q = final_state.charge_expectation();
  const auto parity = final_state.parity();
  const auto lambda = tqc::majorana_condition_check(vec);
  const ExactScalar c2 = qubit::concurrence_squared(vec);

  json j{{"word", tqc::to_string(word)}, {"init", o.init}, {"amplitudes", amps}};
  j["charge_expectation"] = {{"exact", exact_json(q)}, {"float", q.to_complex().real()}};
  j["parity"] = parity ? json(*parity) : json(nullptr);
  j["concurrence"] = {{"squared_exact", exact_json(c2)}, {"float", qubit::concurrence(to_float(vec))}};
  j["majorana_eigenphase"] =
      lambda ? json{{"exact", exact_json(*lambda)}, {"float", float_json(lambda->to_complex())}} : json(nullptr);
  out << j.dump(2) << '\n';
  return kPass;
}

}  // namespace cli
