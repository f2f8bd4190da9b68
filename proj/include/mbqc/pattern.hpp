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

#ifndef MBQC_PATTERN_HPP
#define MBQC_PATTERN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mbqc/cluster.hpp"

namespace mbqc {

/// One measurement: a site, its nominal (X,Y)-plane angle, and the earlier
/// sites whose outcomes flip the sign of the angle (x_deps) or add pi
/// (z_deps) in adaptive mode.
struct Step {
  Site site;
  double angle = 0.0;
  std::vector<Site> x_deps;
  std::vector<Site> z_deps;
};

/// Residual Pauli corrections on the output column, one bit pair per
/// output row. Composes by XOR.
struct PauliFrame {
  std::vector<std::uint8_t> x_exp;
  std::vector<std::uint8_t> z_exp;
};

struct MeasurementPattern {
  Geometry geometry;
  std::vector<Step> steps;      // column-major, strictly increasing sites
  std::vector<Site> outputs;    // the n sites of the last column, row order
  bool adaptive_ready = false;  // dependency sets populated by a flow

  int num_measured() const { return static_cast<int>(steps.size()); }
  void validate() const;  // ordering, coverage, dependency sanity
};

/// Flow for rectangular lattices measured column-major: the X-correction
/// of v=(i,j) targets f(v)=(i,j+1); Z-corrections target the lattice
/// neighbors of f(v) other than v.
std::vector<Site> flow_x_deps(const Geometry& g, Site v);
std::vector<Site> flow_z_deps(const Geometry& g, Site v);

/// All operational sites measured at angle 0, flow deps attached.
MeasurementPattern all_x_pattern(int rows, int cols,
                                 LatticeKind kind = LatticeKind::kOpenEnded);

/// Execute with every outcome forced to 0 at the nominal angles.
StateVector run_positive_branch(const MeasurementPattern& p,
                                const InputSpec& input,
                                StreamStats* stats = nullptr);

struct AdaptiveResult {
  StateVector output;         // raw output state, frame NOT applied
  std::vector<int> outcomes;  // one per step, in step order
  PauliFrame frame;
};

/// Adaptive execution with Born-rule outcomes drawn from rng. Each step is
/// measured at (-1)^{s_x} theta + s_z pi, with s_x/s_z the XOR of earlier
/// outcomes over its dependency sets.
AdaptiveResult run_adaptive(const MeasurementPattern& p, const InputSpec& input,
                            std::mt19937_64& rng);

/// Same, but with every outcome forced (for exhaustive branch checks).
AdaptiveResult run_adaptive_forced(const MeasurementPattern& p,
                                   const InputSpec& input,
                                   const std::vector<int>& outcomes);

/// Apply the frame's corrections (X then Z per output row) to a copy.
StateVector apply_frame(const MeasurementPattern& p, const StateVector& output,
                        const PauliFrame& frame);

/// Runs the positive branch on each computational-basis input and assembles
/// the columns into a 2^n x 2^n matrix; rescales the first nonzero entry to
/// positive real. Throws if the result is not unitary within 1e-9 (bit b of
/// the basis index is output row b+1).
Eigen::MatrixXcd extract_unitary(const MeasurementPattern& p);

}  // namespace mbqc

#endif  // MBQC_PATTERN_HPP
