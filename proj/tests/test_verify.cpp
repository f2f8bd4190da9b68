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

#include "doctest.h"
#include "mbqc/verify.hpp"

using namespace mbqc;
using std::numbers::pi;

TEST_CASE("kron_at puts qubit 1 on the least significant bit") {
  Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  Eigen::MatrixXcd z1 = kron_at(z, 1, 2);
  // |01> (index 1: qubit 1 in |1>) picks up the -1.
  CHECK(std::abs(z1(1, 1) - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(z1(2, 2) - cplx(1, 0)) < 1e-15);
}

TEST_CASE("cz_matrix flips the sign of |11> only") {
  Eigen::MatrixXcd cz = cz_matrix(1, 2, 2);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(cz(i, i) - cplx(i == 3 ? -1 : 1, 0)) < 1e-15);
  CHECK(cz.isApprox(cz_matrix(2, 1, 2)));
}

TEST_CASE("layer operator is unitary") {
  for (int n : {1, 2, 3}) {
    Eigen::MatrixXcd c = c_n_matrix(n);
    const int dim = 1 << n;
    CHECK((c.adjoint() * c - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("mirror_matrix is the bit-reversal permutation") {
  Eigen::MatrixXcd m = mirror_matrix(3);
  // Basis index 0b001 (qubit 1 set) maps to 0b100 (qubit 3 set).
  CHECK(std::abs(m(4, 1) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(m(1, 4) - cplx(1, 0)) < 1e-15);
  CHECK((m * m - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("n+1 layers equal the mirror permutation exactly") {
  for (int n = 1; n <= 4; ++n) {
    MirrorReport r = mirror_check(n);
    INFO("n=", n, " max deviation ", r.max_deviation);
    CHECK(r.pass);
    CHECK(std::abs(r.lambda - cplx(1, 0)) < 1e-10);
    CHECK(r.max_deviation < 1e-10);
    CHECK(r.conjugation_deviation < 1e-10);
  }
}

TEST_CASE("commutation identities hold") {
  auto records = commutation_identities();
  CHECK(records.size() >= 4);
  for (const CheckRecord& r : records) {
    INFO(r.name, " deviation ", r.max_deviation);
    CHECK(r.pass);
    CHECK(r.max_deviation < 1e-10);
  }
}

TEST_CASE("rotation steering holds for every row and layer count") {
  for (int n = 2; n <= 4; ++n)
    for (int p = 2; p <= n; ++p) {
      INFO("n=", n, " p=", p);
      CHECK(propagation_check(n, p));
    }
}

TEST_CASE("gate_matrix matches hand-built 2-qubit matrices") {
  Eigen::MatrixXcd cnot = gate_matrix(LogicalGate::cnot(1, 2), 2);
  // Control is qubit 1 = bit 0: |01> -> |11>.
  CHECK(std::abs(cnot(3, 1) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(cnot(1, 3) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(cnot(0, 0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(cnot(2, 2) - cplx(1, 0)) < 1e-15);

  // Rzx(theta) = exp(-i theta/2 Z (x) X): diagonalize by H on the X factor.
  const double t = 0.83;
  Eigen::MatrixXcd zx = gate_matrix(LogicalGate::rzx(1, t), 2);
  Eigen::Matrix2cd h = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() /
                       std::sqrt(2.0);
  // Z on the lower qubit means X acts on qubit 2.
  Eigen::MatrixXcd basis = kron_at(h, 2, 2);
  Eigen::MatrixXcd diag = basis * zx * basis;
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  for (int zq = 0; zq < 2; ++zq)
    for (int xq = 0; xq < 2; ++xq) {
      int idx = zq + 2 * xq;
      double eig = (zq ? -1 : 1) * (xq ? -1 : 1);
      want(idx, idx) = std::exp(cplx(0, -t / 2 * eig));
    }
  CHECK((diag - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("oracle_simulate agrees with the dense engine on a random circuit") {
  LogicalCircuit c{2,
                   {LogicalGate::rz(1, 0.31), LogicalGate::rx(2, -0.77),
                    LogicalGate::rzx(1, 1.9), LogicalGate::h(2),
                    LogicalGate::cnot(2, 1)}};
  StateVector in = StateVector::plus_states(std::vector<int>{1, 2});
  StateVector oracle = oracle_simulate(c, in);

  Eigen::MatrixXcd u = circuit_matrix(c);
  Eigen::VectorXcd v(4);
  for (int i = 0; i < 4; ++i) v(i) = in.amplitudes()[i];
  Eigen::VectorXcd w = u * v;
  std::vector<cplx> amps(4);
  for (int i = 0; i < 4; ++i) amps[i] = w(i);
  StateVector want = StateVector::from_amplitudes({1, 2}, amps);
  CHECK(std::abs(StateVector::overlap(oracle, want) - cplx(1, 0)) < 1e-12);
}

TEST_CASE("unitary_equiv ignores global phase but nothing else") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
  CHECK(unitary_equiv(id, std::exp(cplx(0, 1.23)) * id, 1e-12).pass);
  Eigen::MatrixXcd almost = id;
  almost(0, 0) = std::exp(cplx(0, 0.2));
  CHECK(!unitary_equiv(id, almost, 1e-6).pass);
}

TEST_CASE("full verification suite passes") {
  auto records = run_verification(2);
  CHECK(!records.empty());
  for (const CheckRecord& r : records) {
    INFO(r.name, " n=", r.n, " p=", r.p, " deviation=", r.max_deviation);
    if (!r.informational) CHECK(r.pass);
  }
  CHECK(all_pass(records));
}
