// Copyright 2026 The qswitch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
//
// Usage: acceptance <fixture-dir> <path-to-qswitch-binary>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsw/cli/app.hpp"
#include "qsw/gates.hpp"
#include "qsw/relabel.hpp"
#include "support/test_support.hpp"

using namespace qsw;
using namespace qsw::cli;
using qsw_test::bf_apply;
using qsw_test::bf_kron;
using qsw_test::bf_kron_vec;
using qsw_test::bf_mul;
using qsw_test::make_rng;
using qsw_test::random_matrix;
using qsw_test::random_state;
using qsw_test::random_unitary;
using qsw_test::span_residual;

namespace {

std::string g_fixture_dir;
std::string g_tool_path;

StateVector plus_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({Complex{s, 0.0}, Complex{s, 0.0}});
}

StateVector minus_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({Complex{s, 0.0}, Complex{-s, 0.0}});
}

std::string fmt_err(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double max_entry_distance(const Operator& x, const Operator& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    worst = std::max(worst, std::abs(x.entries()[i] - y.entries()[i]));
  }
  return worst;
}

double max_coeff_distance(const ProcessVector& v, const ProcessVector& w) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    worst = std::max(worst, std::abs(v.coeffs()[i] - w.coeffs()[i]));
  }
  return worst;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// ---------------------------------------------------------------------------
// 1. Choi round-trip: devectorize(vectorize(U)) = U, 200 random unitaries.
bool criterion_choi_roundtrip(std::string& detail) {
  auto rng = make_rng(101);
  double worst = 0.0;
  int count = 0;
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 67 && count < 200; ++trial, ++count) {
      const Operator u = random_unitary(d, rng);
      worst = std::max(worst,
                       max_entry_distance(u, devectorize(vectorize(u, "U"))));
    }
  }
  detail = "max entry error " + fmt_err(worst) + " over 200 unitaries";
  return worst < 1e-14;
}

// ---------------------------------------------------------------------------
// 2. Isometry: overlap(vec x, vec y) = Tr(x^dag y) on 200 random pairs.
bool criterion_isometry(std::string& detail) {
  auto rng = make_rng(102);
  double worst = 0.0;
  int count = 0;
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 67 && count < 200; ++trial, ++count) {
      const Operator x = random_matrix(d, rng);
      const Operator y = random_matrix(d, rng);
      // Oracle: the trace inner product computed with raw loops.
      Complex tr{0.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          tr += std::conj(x(i, j)) * y(i, j);
        }
      }
      const Complex ov = overlap(vectorize(x, "x"), vectorize(y, "y"));
      worst = std::max(worst, std::abs(ov - tr));
    }
  }
  detail = "max |overlap - trace| " + fmt_err(worst) +
           " over 200 pairs";
  return worst < 1e-12;
}

// ---------------------------------------------------------------------------
// 3. Switch oracle: run_switch equals |a><a| (x) BA + |b><b| (x) AB applied
//    to the tensor input; switch_unitary is unitary.
bool criterion_switch_oracle(std::string& detail) {
  auto rng = make_rng(103);
  double worst_state = 0.0;
  double worst_defect = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = (trial % 2 == 0) ? 2 : 3;
    const Operator a = random_unitary(d, rng);
    const Operator b = random_unitary(d, rng);
    const SwitchCircuit c(a, b);
    const StateVector control = random_state(2, rng);
    const StateVector target = random_state(d, rng);

    const qsw_test::CMat proj0 = {{Complex{1.0, 0.0}, {}}, {{}, {}}};
    const qsw_test::CMat proj1 = {{{}, {}}, {{}, Complex{1.0, 0.0}}};
    const auto s_matrix =
        qsw_test::bf_add(bf_kron(proj0, bf_mul(qsw_test::to_rows(b),
                                               qsw_test::to_rows(a))),
                         bf_kron(proj1, bf_mul(qsw_test::to_rows(a),
                                               qsw_test::to_rows(b))));
    const auto expected =
        bf_apply(s_matrix, bf_kron_vec(control.amplitudes(),
                                       target.amplitudes()));

    const StateVector joint = run_switch(c, control, target);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      worst_state = std::max(worst_state, std::abs(joint[i] - expected[i]));
    }
    worst_defect =
        std::max(worst_defect, unitarity_defect(switch_unitary(c)));
  }
  detail = "max state error " + fmt_err(worst_state) +
           ", max S defect " + fmt_err(worst_defect);
  return worst_state < 1e-12 && worst_defect < 1e-10;
}

// ---------------------------------------------------------------------------
// 4. Worked X/Z example: P(-) = 1, conditional target |1>, conditional
//    operators (ZX +- XZ)/2.
bool criterion_worked_example(std::string& detail) {
  const SwitchCircuit c(gates::pauli_x(), gates::pauli_z());
  const StateVector joint = run_switch(c, plus_state(), StateVector::basis(2, 0));
  const ControlBasis basis(plus_state(), minus_state());
  const auto outcomes = measure_control(joint, basis);

  if (std::abs(outcomes[1].probability - 1.0) > 1e-10) {
    detail = "P(-) = " + fmt_err(outcomes[1].probability);
    return false;
  }
  if (!outcomes[1].conditional_target.has_value() ||
      !approx_eq_up_to_phase(*outcomes[1].conditional_target,
                             StateVector::basis(2, 1), 1e-12)) {
    detail = "conditional target is not |1> up to phase";
    return false;
  }

  // Hand-computed before the build: (ZX+XZ)/2 = 0, (ZX-XZ)/2 = [[0,1],[-1,0]].
  const Operator k_plus = conditional_operator(c, plus_state(), plus_state());
  const Operator k_minus = conditional_operator(c, plus_state(), minus_state());
  const Operator expected_minus =
      Operator::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  const double err =
      std::max(max_entry_distance(k_plus, Operator::zero(2)),
               max_entry_distance(k_minus, expected_minus));
  detail = "max conditional-operator error " + fmt_err(err);
  return err < 1e-12;
}

// ---------------------------------------------------------------------------
// 5. Relabeling recipe for orthogonal A, B under the three stated controls.
bool criterion_relabel_recipe(std::string& detail) {
  auto rng = make_rng(105);
  const double s = 1.0 / std::sqrt(2.0);
  double worst = 0.0;

  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = (trial % 2 == 0) ? 2 : 3;
    // B = A*V with a traceless unitary V makes Tr(A^dag B) = Tr(V) = 0.
    const Operator a = random_unitary(d, rng);
    Operator v = gates::pauli_z();
    if (d == 3) {
      const double c3 = std::cos(2.0 * 3.14159265358979323846 / 3.0);
      const double s3 = std::sin(2.0 * 3.14159265358979323846 / 3.0);
      v = Operator(3, {Complex{1.0, 0.0}, {}, {},
                       {}, Complex{c3, s3}, {},
                       {}, {}, Complex{c3, -s3}});
    }
    const Operator b = a * v;

    const ProcessVector a_hat = normalized(vectorize(a, "A"));
    const ProcessVector b_hat = normalized(vectorize(b, "B"));

    // Control (|a>+|b>)/sqrt2.
    const OrderedDescription plus_desc = relabel(a, b, plus_state());
    const ProcessVector expected_first =
        superpose(Complex{s, 0.0}, a_hat, Complex{s, 0.0}, b_hat);
    const ProcessVector expected_second =
        superpose(Complex{s, 0.0}, a_hat, Complex{-s, 0.0}, b_hat);
    worst = std::max(worst, max_coeff_distance(plus_desc.first, expected_first));
    worst = std::max(worst,
                     max_coeff_distance(plus_desc.second, expected_second));

    // Control |a> gives (|A>, |B>); control |b> gives (|B>, |A>).
    const OrderedDescription a_desc = relabel(a, b, StateVector::basis(2, 0));
    worst = std::max(worst, max_coeff_distance(a_desc.first, a_hat));
    worst = std::max(worst, max_coeff_distance(a_desc.second, b_hat));
    const OrderedDescription b_desc = relabel(a, b, StateVector::basis(2, 1));
    worst = std::max(worst, max_coeff_distance(b_desc.first, b_hat));
    worst = std::max(worst, max_coeff_distance(b_desc.second, a_hat));
  }
  detail = "max coefficient error " + fmt_err(worst) +
           " over 30 orthogonal pairs x 3 controls";
  return worst < 1e-12;
}

// ---------------------------------------------------------------------------
// 6. Hadamard identity: the relabeled first process for X/Z devectorizes to
//    H; both relabeled processes are unitary.
bool criterion_hadamard_identity(std::string& detail) {
  const SwitchCircuit c(gates::pauli_x(), gates::pauli_z());
  const ConsistencyReport rep = consistency_report(c, plus_state());
  const double h_err = max_entry_distance(rep.first_operator, gates::hadamard());
  detail = "devectorized first vs H: " + fmt_err(h_err) +
           ", defects " + fmt_err(rep.first_unitarity_defect) + "/" +
           fmt_err(rep.second_unitarity_defect);
  return h_err < 1e-12 && rep.first_unitarity_defect < 1e-10 &&
         rep.second_unitarity_defect < 1e-10;
}

// ---------------------------------------------------------------------------
// 7. Distillation: orthonormal span-preserving pairs; parallel inputs raise
//    OrderUndefined.
bool criterion_distillation(std::string& detail) {
  auto rng = make_rng(107);
  double worst_overlap = 0.0;
  double worst_residual = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = (trial % 2 == 0) ? 2 : 3;
    const ProcessVector v = vectorize(random_matrix(d, rng), "V");
    const ProcessVector w = vectorize(random_matrix(d, rng), "W");
    const ProcessPair pair = distill_orthogonal(v, w);
    worst_overlap =
        std::max(worst_overlap, std::abs(overlap(pair.first, pair.second)));
    worst_residual = std::max(worst_residual, span_residual(pair.first, v, w));
    worst_residual = std::max(worst_residual, span_residual(pair.second, v, w));
    if (std::abs(norm(pair.first) - 1.0) > 1e-12 ||
        std::abs(norm(pair.second) - 1.0) > 1e-12) {
      detail = "distilled output is not unit norm";
      return false;
    }
  }

  int raised = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const ProcessVector v = vectorize(random_matrix(2, rng), "V");
    // Parallel up to a phase.
    const Complex phase = std::polar(1.0, 0.7 * trial);
    const ProcessVector w = scaled(phase, v);
    try {
      (void)distill_orthogonal(v, w);
    } catch (const OrderUndefined&) {
      ++raised;
    }
  }
  detail = "max overlap " + fmt_err(worst_overlap) + ", max residual " +
           fmt_err(worst_residual) + ", OrderUndefined " +
           std::to_string(raised) + "/10";
  return worst_overlap < 1e-12 && worst_residual < 1e-10 && raised == 10;
}

// ---------------------------------------------------------------------------
// 8. Descriptive neutrality: switch statistics are bit-identical whether or
//    not relabel was invoked.
bool criterion_neutrality(std::string& detail) {
  auto rng = make_rng(108);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = (trial % 2 == 0) ? 2 : 3;
    const Operator a = random_unitary(d, rng);
    const Operator b = random_unitary(d, rng);
    const SwitchCircuit c(a, b);
    const StateVector control = random_state(2, rng);
    const StateVector target = random_state(d, rng);

    const StateVector before = run_switch(c, control, target);
    const auto stats_before =
        measure_control(before, ControlBasis::computational());

    try {
      (void)relabel(a, b, control);
    } catch (const OrderUndefined&) {
      // Random unitaries are never parallel; if they were, the relabeler
      // still must not touch the switch.
    }

    const StateVector after = run_switch(c, control, target);
    const auto stats_after =
        measure_control(after, ControlBasis::computational());

    if (std::memcmp(before.amplitudes().data(), after.amplitudes().data(),
                    before.dim() * sizeof(Complex)) != 0) {
      detail = "joint state changed after relabel on trial " +
               std::to_string(trial);
      return false;
    }
    for (int k = 0; k < 2; ++k) {
      if (std::memcmp(&stats_before[k].probability,
                      &stats_after[k].probability, sizeof(double)) != 0) {
        detail = "probability changed after relabel on trial " +
                 std::to_string(trial);
        return false;
      }
    }
  }
  detail = "50 random configs bit-identical";
  return true;
}

// ---------------------------------------------------------------------------
// 9. CLI contract: documented configs reproduce committed outputs
//    byte-for-byte; exit codes 0/2/3/4 via the real binary; 1000 malformed
//    configs never crash.
bool criterion_cli_contract(std::string& detail) {
  if (g_fixture_dir.empty() || g_tool_path.empty()) {
    detail = "fixture directory / tool path not provided";
    return false;
  }

  const struct {
    const char* config;
    const char* golden;
    Command command;
  } goldens[] = {
      {"run_xz.json", "golden/run_xz.out.json", Command::kRun},
      {"relabel_xz.json", "golden/relabel_xz.out.json", Command::kRelabel},
      {"report_xz.json", "golden/report_xz.out.json", Command::kReport},
  };
  for (const auto& g : goldens) {
    std::string config_text, golden_text;
    if (!read_file(g_fixture_dir + "/" + g.config, config_text) ||
        !read_file(g_fixture_dir + "/" + g.golden, golden_text)) {
      detail = std::string("cannot read fixture ") + g.config;
      return false;
    }
    const CliResult result =
        run_config_text(g.command, config_text, Format::kStructured);
    if (result.exit_code != 0 || result.output != golden_text) {
      detail = std::string("output mismatch for ") + g.config;
      return false;
    }
  }

  const struct {
    const char* subcommand;
    const char* fixture;
    int expected;
  } exit_cases[] = {
      {"run", "run_xz.json", 0},
      {"run", "exit2_parse.json", 2},
      {"run", "exit3_validation.json", 3},
      {"relabel", "exit4_order.json", 4},
  };
  for (const auto& c : exit_cases) {
    const std::string cmd = g_tool_path + " " + c.subcommand + " --config " +
                            g_fixture_dir + "/" + c.fixture +
                            " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != c.expected) {
      detail = std::string("exit code for ") + c.fixture + ": got " +
               std::to_string(code) + ", want " + std::to_string(c.expected);
      return false;
    }
  }

  // Deterministic malformed-config fuzzing, all in-process.
  std::string base;
  if (!read_file(g_fixture_dir + "/run_xz.json", base)) {
    detail = "cannot read fuzz base config";
    return false;
  }
  const std::vector<std::string> schema_breakers = {
      R"({"command":7})",
      R"({"gate_a":3.14,"gate_b":"Z","control":"+","target":"0"})",
      R"({"gate_a":"X","gate_b":"Z","control":{},"target":"0"})",
      R"({"gate_a":"X","gate_b":"Z","control":"+","target":true})",
      R"({"gate_a":"X","gate_b":"Z","control":"+","target":"0","measurement_basis":"x"})",
      R"({"gate_a":"X","gate_b":"Z","control":"+","target":"0","tolerances":[]})",
      R"({"gate_a":{"matrix":"x"},"gate_b":"Z","control":"+","target":"0"})",
      R"({"gate_a":{"matrix":[[[1,0]]],"extra":1},"gate_b":"Z","control":"+","target":"0"})",
      R"({"gate_a":{"matrix":[[[1,0],[0,0]]]},"gate_b":"Z","control":"+","target":"0"})",
      R"({"gate_a":"X","gate_b":"Z","control":[[1,0]],"target":"0"})",
      R"({"gate_a":"X","gate_b":"Z","control":"+","target":"7"})",
      R"({"gate_a":"X","gate_b":"Y","control":"+","target":"0","command":"report"})",
      R"(null)",
      R"([1,2,3])",
      R"("just a string")",
      R"(42)",
  };
  std::mt19937_64 rng(109);
  const std::string charset = "{}[]\",:x";
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string mutant;
    const int kind = i % 5;
    if (kind == 0) {
      mutant = base.substr(0, i % (base.size() - 1));
    } else if (kind == 1) {
      mutant = base;
      const std::size_t pos = rng() % mutant.size();
      char replacement = charset[rng() % charset.size()];
      if (replacement == mutant[pos]) replacement = '~';
      mutant[pos] = replacement;
    } else if (kind == 2) {
      mutant = base;
      const std::size_t pos = rng() % mutant.size();
      mutant.insert(pos, 1, charset[rng() % charset.size()]);
    } else if (kind == 3) {
      mutant = schema_breakers[i % schema_breakers.size()];
    } else {
      const std::size_t len = 1 + (i % 40);
      for (std::size_t k = 0; k < len; ++k) {
        mutant.push_back(static_cast<char>(33 + rng() % 94));
      }
    }
    const CliResult result =
        run_config_text(Command::kRun, mutant, Format::kStructured);
    if (result.exit_code != kExitParse &&
        result.exit_code != kExitValidation) {
      detail = "fuzz case " + std::to_string(i) + " exited " +
               std::to_string(result.exit_code);
      return false;
    }
    ++rejected;
  }
  detail = "3 golden outputs byte-identical, exit codes 0/2/3/4 verified, " +
           std::to_string(rejected) + "/1000 malformed configs rejected "
           "cleanly";
  return true;
}

// ---------------------------------------------------------------------------
// 10. Conditional completeness: K0^dag K0 + K1^dag K1 = I.
bool criterion_conditional_completeness(std::string& detail) {
  auto rng = make_rng(110);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = (trial % 2 == 0) ? 2 : 3;
    const SwitchCircuit c(random_unitary(d, rng), random_unitary(d, rng));
    const StateVector control = random_state(2, rng);
    const Operator u = random_unitary(2, rng);
    const StateVector chi0({u(0, 0), u(1, 0)});
    const StateVector chi1({u(0, 1), u(1, 1)});
    const Operator k0 = conditional_operator(c, control, chi0);
    const Operator k1 = conditional_operator(c, control, chi1);
    const Operator sum = dagger(k0) * k0 + dagger(k1) * k1;
    worst = std::max(worst,
                     max_entry_distance(sum, Operator::identity(d)));
  }
  detail = "max |K0^dag K0 + K1^dag K1 - I| entry " + fmt_err(worst);
  return worst < 1e-10;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_fixture_dir = argv[1];
  if (argc > 2) g_tool_path = argv[2];

  const struct {
    int number;
    const char* name;
    bool (*fn)(std::string&);
  } criteria[] = {
      {1, "Choi round-trip", criterion_choi_roundtrip},
      {2, "isometry oracle", criterion_isometry},
      {3, "switch correctness oracle", criterion_switch_oracle},
      {4, "worked X/Z example", criterion_worked_example},
      {5, "relabeling recipe", criterion_relabel_recipe},
      {6, "Hadamard identity", criterion_hadamard_identity},
      {7, "distillation", criterion_distillation},
      {8, "descriptive neutrality", criterion_neutrality},
      {9, "CLI contract", criterion_cli_contract},
      {10, "conditional completeness", criterion_conditional_completeness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.number
              << ": " << c.name << " (" << detail << ")\n";
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 10 acceptance criteria passed\n";
  return 0;
}
