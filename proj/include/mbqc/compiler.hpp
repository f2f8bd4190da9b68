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

#ifndef MBQC_COMPILER_HPP
#define MBQC_COMPILER_HPP

#include <utility>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// Gate over logical qubits 1..n. Primitives are Rz/Rx/Rzx; H, CNOT, SWAP
/// and CZ are derived and lowered by decompose(). Rzx acts on the adjacent
/// pair (qubit, qubit+1); the orientation picks which of the two carries
/// the Z factor (Z (x) X differs from X (x) Z).
struct LogicalGate {
  enum class Kind { kRz, kRx, kRzx, kH, kCnot, kSwap, kCz };
  enum class Orientation { kZOnLower, kZOnUpper };

  Kind kind{};
  int qubit = 0;   // Rz/Rx/H target; Rzx/SWAP/CZ lower qubit of the pair
  int qubit2 = 0;  // CNOT target (qubit is the control)
  double angle = 0.0;
  Orientation orient = Orientation::kZOnLower;

  static LogicalGate rz(int k, double theta) { return {Kind::kRz, k, 0, theta}; }
  static LogicalGate rx(int k, double theta) { return {Kind::kRx, k, 0, theta}; }
  static LogicalGate rzx(int k, double theta,
                         Orientation o = Orientation::kZOnLower) {
    return {Kind::kRzx, k, 0, theta, o};
  }
  static LogicalGate h(int k) { return {Kind::kH, k}; }
  static LogicalGate cnot(int c, int t) { return {Kind::kCnot, c, t}; }
  static LogicalGate swap(int k) { return {Kind::kSwap, k}; }
  static LogicalGate cz(int k) { return {Kind::kCz, k}; }

  bool is_primitive() const {
    return kind == Kind::kRz || kind == Kind::kRx || kind == Kind::kRzx;
  }
};

struct LogicalCircuit {
  int width = 0;
  std::vector<LogicalGate> gates;

  void validate() const;
};

/// One compiled block of n+1 operational columns realizing a single
/// primitive gate. Every slab applies the global mirror permutation on top
/// of its gate; all sites other than rotated_sites are measured at angle 0.
struct SlabPlan {
  int rows = 0;
  std::vector<std::pair<Site, double>> rotated_sites;  // column-local sites
};

/// Placement maps logical qubit k (1-based) to its physical row at slab
/// entry: placement[k-1]. Only the identity and the mirror occur.
SlabPlan compile_primitive(const LogicalGate& g, int n,
                           std::span<const int> placement);

/// Lower a derived gate (H/CNOT/SWAP/CZ) to primitives; primitives pass
/// through unchanged. Non-adjacent CNOTs are routed with SWAP chains.
std::vector<LogicalGate> decompose(const LogicalGate& g, int width);

struct CompileResult {
  Geometry geometry;
  MeasurementPattern pattern;
  int slab_count = 0;
};

/// Lower a circuit to a measurement pattern on an open-ended lattice of
/// slab_count*(n+1)+1 columns. The mirror permutation flips after every
/// slab; an all-X slab is appended when needed so the net permutation is
/// the identity.
CompileResult compile_circuit(const LogicalCircuit& c);

/// Pattern whose positive-branch output on |+>^n is the CZ ladder state
/// prod_{i<n} CZ_{i,i+1} |+>^n.
CompileResult build_cz_ladder(int n);

/// Pattern on an open-ended lattice reproducing (up to global phase) the
/// all-X-measured output of the closed n x m cluster state.
CompileResult emulate_closed_cluster(int n, int m);

}  // namespace mbqc

#endif  // MBQC_COMPILER_HPP
