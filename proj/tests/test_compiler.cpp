// Copyright 2026 The mbqcxy Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "mbqc/compiler.hpp"
#include "mbqc/verify.hpp"

using namespace mbqc;
using std::numbers::pi;

namespace {
std::vector<int> identity_placement(int n) {
  std::vector<int> rho(n);
  std::iota(rho.begin(), rho.end(), 1);
  return rho;
}

// Compile a single gate (with a trailing parity slab when needed) and
// compare the extracted unitary against the matrix oracle.
void check_single_gate(const LogicalGate& g, int n, double tol = 1e-9) {
  LogicalCircuit c{n, {g}};
  CompileResult r = compile_circuit(c);
  Eigen::MatrixXcd u = extract_unitary(r.pattern);
  Eigen::MatrixXcd want = circuit_matrix(c);
  EquivResult eq = unitary_equiv(u, want, tol);
  INFO("gate kind ", (int)g.kind, " q=", g.qubit, " fidelity=", eq.fidelity);
  CHECK(eq.pass);
}
}  // namespace

TEST_CASE("circuit validation rejects bad operands") {
  CHECK_THROWS_AS((LogicalCircuit{0, {}}.validate()), Error);
  CHECK_THROWS_AS((LogicalCircuit{2, {LogicalGate::rz(3, 0.1)}}.validate()),
                  Error);
  CHECK_THROWS_AS((LogicalCircuit{3, {LogicalGate::rzx(3, 0.1)}}.validate()),
                  Error);  // pair (3,4) out of range
  CHECK_THROWS_AS((LogicalCircuit{2, {LogicalGate::cnot(1, 1)}}.validate()),
                  Error);
  LogicalCircuit ok{3, {LogicalGate::cnot(3, 1), LogicalGate::swap(2)}};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("primitive placement under the identity placement") {
  const int n = 3;
  auto rho = identity_placement(n);

  SlabPlan rz = compile_primitive(LogicalGate::rz(2, 0.5), n, rho);
  REQUIRE(rz.rotated_sites.size() == 1);
  CHECK(rz.rotated_sites[0].first == Site{2, 1});

  SlabPlan rx = compile_primitive(LogicalGate::rx(2, 0.5), n, rho);
  CHECK(rx.rotated_sites[0].first == Site{2, n + 1});  // row n+1-2

  // Z on row 1 pairs with X on the row above the lattice top only via the
  // row-n family; Z-on-lower with pair (1,2) lands in the row-1 family.
  SlabPlan zx = compile_primitive(
      LogicalGate::rzx(1, 0.5, LogicalGate::Orientation::kZOnUpper), n, rho);
  CHECK(zx.rotated_sites[0].first == Site{1, 2});  // z-row 2 family, col = zrow
}

TEST_CASE("placement respects a mirrored register") {
  const int n = 3;
  std::vector<int> mirrored{3, 2, 1};
  SlabPlan rz = compile_primitive(LogicalGate::rz(1, 0.2), n, mirrored);
  CHECK(rz.rotated_sites[0].first == Site{3, 1});
  SlabPlan rx = compile_primitive(LogicalGate::rx(1, 0.2), n, mirrored);
  CHECK(rx.rotated_sites[0].first == Site{1, n + 1});
}

TEST_CASE("non-primitive gates are rejected by compile_primitive") {
  CHECK_THROWS_AS(
      compile_primitive(LogicalGate::h(1), 2, identity_placement(2)), Error);
}

TEST_CASE("decompose lowers derived gates to primitives") {
  for (const LogicalGate& g :
       {LogicalGate::h(2), LogicalGate::cnot(1, 2), LogicalGate::cnot(2, 1),
        LogicalGate::swap(1), LogicalGate::cz(1), LogicalGate::cnot(1, 3)}) {
    for (const LogicalGate& out : decompose(g, 3)) CHECK(out.is_primitive());
  }
  // Primitives pass through unchanged.
  auto same = decompose(LogicalGate::rz(1, 0.3), 3);
  REQUIRE(same.size() == 1);
  CHECK(same[0].kind == LogicalGate::Kind::kRz);
}

TEST_CASE("decompositions match their matrix oracles up to phase") {
  const int n = 3;
  for (const LogicalGate& g :
       {LogicalGate::h(1), LogicalGate::h(3), LogicalGate::cnot(1, 2),
        LogicalGate::cnot(2, 1), LogicalGate::cnot(3, 2), LogicalGate::swap(2),
        LogicalGate::cz(1), LogicalGate::cnot(1, 3), LogicalGate::cnot(3, 1)}) {
    LogicalCircuit direct{n, {g}};
    LogicalCircuit lowered{n, decompose(g, n)};
    EquivResult eq =
        unitary_equiv(circuit_matrix(lowered), circuit_matrix(direct), 1e-10);
    INFO("kind ", (int)g.kind, " fidelity ", eq.fidelity);
    CHECK(eq.pass);
  }
}

TEST_CASE("compiled single primitives reproduce their unitaries") {
  check_single_gate(LogicalGate::rz(1, 0.7), 2);
  check_single_gate(LogicalGate::rz(2, -1.1), 2);
  check_single_gate(LogicalGate::rx(1, 2.2), 2);
  check_single_gate(LogicalGate::rzx(1, 0.9), 2);
  check_single_gate(LogicalGate::rzx(1, 0.9, LogicalGate::Orientation::kZOnUpper),
                    2);
  check_single_gate(LogicalGate::rz(3, 0.25), 3);
  check_single_gate(LogicalGate::rzx(2, -0.6), 3);
}

TEST_CASE("compiled derived gates reproduce their unitaries") {
  check_single_gate(LogicalGate::h(1), 2);
  check_single_gate(LogicalGate::cnot(1, 2), 2);
  check_single_gate(LogicalGate::cnot(2, 1), 2);
  check_single_gate(LogicalGate::swap(1), 2);
  check_single_gate(LogicalGate::cz(1), 2);
}

TEST_CASE("multi-gate circuits compile end to end") {
  LogicalCircuit c{2,
                   {LogicalGate::h(1), LogicalGate::rz(2, 0.4),
                    LogicalGate::cnot(1, 2), LogicalGate::rx(1, -0.8)}};
  CompileResult r = compile_circuit(c);
  r.pattern.validate();
  CHECK(r.geometry.kind == LatticeKind::kOpenEnded);
  CHECK(r.geometry.cols == r.slab_count * (c.width + 1) + 1);
  Eigen::MatrixXcd u = extract_unitary(r.pattern);
  CHECK(unitary_equiv(u, circuit_matrix(c), 1e-9).pass);
}

TEST_CASE("an odd slab count gets a parity slab") {
  // A single Rz is one slab; the net mirror must be undone, so the total
  // slab count comes out even.
  LogicalCircuit c{2, {LogicalGate::rz(1, 0.3)}};
  CompileResult r = compile_circuit(c);
  CHECK(r.slab_count % 2 == 0);
  CHECK(r.slab_count == 2);
}

TEST_CASE("width-1 circuits compile") {
  LogicalCircuit c{1, {LogicalGate::rz(1, 0.6), LogicalGate::rx(1, 1.1)}};
  CompileResult r = compile_circuit(c);
  Eigen::MatrixXcd u = extract_unitary(r.pattern);
  CHECK(unitary_equiv(u, circuit_matrix(c), 1e-9).pass);
}

TEST_CASE("cz ladder pattern prepares the ladder state") {
  for (int n : {2, 3}) {
    CompileResult r = build_cz_ladder(n);
    StateVector got = run_positive_branch(r.pattern, InputSpec::standard());

    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    StateVector want = StateVector::plus_states(labels);
    for (int i = 1; i < n; ++i) want.apply_cz(i, i + 1);

    // Compare amplitude profiles: output labels map row b+1 -> bit b.
    Geometry g = r.geometry;
    std::vector<int> out_labels(n);
    for (int i = 0; i < n; ++i) out_labels[i] = g.site_label({i + 1, g.cols});
    StateVector relabeled =
        StateVector::from_amplitudes(out_labels, want.amplitudes());
    CHECK(std::abs(std::abs(StateVector::overlap(got, relabeled)) - 1.0) <
          1e-10);
  }
}

TEST_CASE("closed-lattice emulation matches the direct closed lattice") {
  const int n = 2, m = 3;
  CompileResult r = emulate_closed_cluster(n, m);
  StateVector got = run_positive_branch(r.pattern, InputSpec::standard());

  MeasurementPattern closed = all_x_pattern(n, m, LatticeKind::kClosed);
  StateVector want = run_positive_branch(closed, InputSpec::standard());

  // Relabel the closed-lattice output onto the open-lattice output column,
  // row by row, so overlap can compare the two states.
  std::vector<int> relabeled_labels;
  for (int label : want.labels()) {
    int row = closed.geometry.label_site(label).row;
    relabeled_labels.push_back(
        r.geometry.site_label({row, r.geometry.cols}));
  }
  StateVector relabeled =
      StateVector::from_amplitudes(relabeled_labels, want.amplitudes());
  CHECK(std::abs(std::abs(StateVector::overlap(got, relabeled)) - 1.0) <
        1e-10);
}
