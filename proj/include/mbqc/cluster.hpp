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

#ifndef MBQC_CLUSTER_HPP
#define MBQC_CLUSTER_HPP

#include <compare>
#include <functional>
#include <vector>

#include "mbqc/statevec.hpp"

namespace mbqc {

/// Lattice site, 1-based: row in [1, n], col in [1, m].
struct Site {
  int row = 0;
  int col = 0;
  auto operator<=>(const Site&) const = default;
};

enum class LatticeKind { kClosed, kOpenEnded };

/// Rectangular n x m cluster layout. Column 1 is the input set, column m
/// the output set. Open-ended lattices have no vertical edges in the last
/// column; a degenerate open-ended n x 1 lattice therefore has no edges
/// at all.
struct Geometry {
  int rows = 1;
  int cols = 1;
  LatticeKind kind = LatticeKind::kOpenEnded;

  bool contains(Site s) const {
    return s.row >= 1 && s.row <= rows && s.col >= 1 && s.col <= cols;
  }
  /// label = (col-1)*rows + row; column-major, matching measurement order.
  int site_label(Site s) const { return (s.col - 1) * rows + s.row; }
  Site label_site(int label) const {
    return {(label - 1) % rows + 1, (label - 1) / rows + 1};
  }
  bool has_vertical_edges(int col) const {
    return kind == LatticeKind::kClosed ? true : col <= cols - 1;
  }
  std::vector<Site> neighbors(Site s) const;
};

std::vector<std::pair<Site, Site>> edges(const Geometry& g);

/// Input state for the first column: all |+> or a caller-supplied n-qubit
/// state (assigned to the column-1 labels in row order).
struct InputSpec {
  static InputSpec standard() { return {}; }
  static InputSpec generic(StateVector state);

  bool is_standard() const { return !generic_; }
  const StateVector& state() const { return state_; }

 private:
  bool generic_ = false;
  StateVector state_;
};

/// Eager construction: input tensor |+>^{n(m-1)} with every lattice edge
/// entangled by CZ. Retained as the correctness oracle for streaming.
StateVector build_state(const Geometry& g, const InputSpec& input);

struct StreamStats {
  int peak_live_qubits = 0;
};

/// Called once per operational column; must measure every qubit of that
/// column (labels via Geometry::site_label) before returning.
using ColumnConsumer = std::function<void(int col, StateVector& sv)>;

/// Memory-bounded execution: columns are entangled lazily so at most 2n
/// qubits are ever live. Returns the unmeasured output column.
StateVector stream_columns(const Geometry& g, const InputSpec& input,
                           const ColumnConsumer& consumer,
                           StreamStats* stats = nullptr);

}  // namespace mbqc

#endif  // MBQC_CLUSTER_HPP
