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

#ifndef MBQC_VERIFY_HPP
#define MBQC_VERIFY_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "mbqc/compiler.hpp"

namespace mbqc {

/// Brute-force matrix oracles. Everything here works on full 2^n x 2^n
/// matrices with qubit k on bit k-1 (qubit 1 least significant), matching
/// the state-vector convention. These serve as the independent path for
/// checking the pattern machinery, so none of it calls into pattern
/// execution except where a check explicitly compares the two.

Eigen::MatrixXcd kron_at(const Eigen::Matrix2cd& g, int k, int n);
Eigen::MatrixXcd cz_matrix(int a, int b, int n);

/// Layer operator: CZ ladder then Hadamard on every row.
Eigen::MatrixXcd c_n_matrix(int n);

/// Qubit-order reversal permutation (bit reversal on basis indices).
Eigen::MatrixXcd mirror_matrix(int n);

/// Full-width matrix of a logical gate (derived gates included).
Eigen::MatrixXcd gate_matrix(const LogicalGate& g, int n);
Eigen::MatrixXcd circuit_matrix(const LogicalCircuit& c);

struct EquivResult {
  bool pass = false;
  cplx phase{1.0, 0.0};   // aligning phase, U ~ phase * V
  double fidelity = 0.0;  // |Tr(U^dag V)| / dim
};

/// Global-phase-blind equivalence: passes iff |Tr(U^dag V)|/dim >= 1 - tol.
EquivResult unitary_equiv(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                          double tol);

struct MirrorReport {
  bool pass = false;
  cplx lambda{1.0, 0.0};       // C_n^{n+1} = lambda * mirror
  double max_deviation = 0.0;  // entrywise, over both forms below
  double conjugation_deviation = 0.0;
  double literal_reading_deviation = 0.0;  // C^{n+1} Z_i vs Z_{n+1-i}, reported only
};

/// Checks C_n^{n+1} = lambda * mirror entrywise (1e-10) plus the
/// conjugation relations C^{n+1} P_i C^{-(n+1)} = P_{n+1-i} for P in {Z,X}.
MirrorReport mirror_check(int n);

struct CheckRecord {
  std::string name;
  int n = 0;
  int p = 0;
  double max_deviation = 0.0;
  bool pass = false;
  bool informational = false;  // reported but excluded from the pass gate
};

/// The four commutation/circuit identities, as exact matrix identities at
/// 2- and 4-qubit scale (10 random angles for the rotation case).
std::vector<CheckRecord> commutation_identities();

/// Layer-propagation identities: C^{p'} (Z_1) = (Z_{n-p+1} X_{n-p+2}) C^{p'}
/// with p' = n-p+2, the row-n analogue, and the single-step variants.
bool propagation_check(int n, int p, std::vector<CheckRecord>* records = nullptr);

/// Ground-truth circuit simulation by direct full-matrix application.
StateVector oracle_simulate(const LogicalCircuit& c, const StateVector& input);

/// Everything the verify command runs: mirror, commutation, propagation,
/// decomposition oracles, and the all-X layer-product and
/// single-rotation slab checks up to max_n.
std::vector<CheckRecord> run_verification(int max_n);

bool all_pass(const std::vector<CheckRecord>& records);

}  // namespace mbqc

#endif  // MBQC_VERIFY_HPP
