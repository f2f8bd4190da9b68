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

#ifndef MBQC_STATEVEC_HPP
#define MBQC_STATEVEC_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqc {

using cplx = std::complex<double>;

/// Base error type for the library. Subclasses distinguish parse errors
/// (bad documents) from execution errors (impossible branches etc.).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ExecError : Error {
  using Error::Error;
};

// Norm / algebraic-identity tolerance used throughout the dense engine.
inline constexpr double kNormTol = 1e-12;

/// A 2x2 complex matrix in row-major order.
struct SingleQubitGate {
  std::array<cplx, 4> m{};

  cplx at(int r, int c) const { return m[2 * r + c]; }
  bool is_unitary(double tol = kNormTol) const;
};

namespace gates {
SingleQubitGate identity();
SingleQubitGate pauli_x();
SingleQubitGate pauli_z();
SingleQubitGate hadamard();
SingleQubitGate rz(double theta);  // exp(-i theta/2 Z)
SingleQubitGate rx(double theta);  // exp(-i theta/2 X)
}  // namespace gates

/// Dense state vector over an ordered set of live qubit labels.
///
/// Label list position k maps to bit k of the amplitude index; the first
/// label is the least significant bit. Measurement removes the measured
/// qubit from the vector entirely.
class StateVector {
 public:
  StateVector() : amps_{cplx(1.0, 0.0)} {}

  /// |+>^q over the given labels. Rejects duplicate labels.
  static StateVector plus_states(std::span<const int> labels);

  /// Arbitrary amplitudes; amps.size() must be 2^labels.size() and the
  /// vector must be normalized (it is renormalized exactly after a
  /// coarse 1e-6 check).
  static StateVector from_amplitudes(std::vector<int> labels,
                                     std::vector<cplx> amps);

  /// Computational basis state |bits> (bits[k] for label k).
  static StateVector basis_state(std::vector<int> labels, std::uint64_t index);

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  bool has_label(int label) const;

  void apply_single(int label, const SingleQubitGate& g);
  void apply_cz(int a, int b);

  /// Tensor in a fresh |+> qubit with the given (fresh) label.
  void append_plus(int label);

  /// (X,Y)-plane measurement at angle theta; outcome 0 corresponds to the
  /// projector whose bra is (<0| + e^{i theta} <1|)/sqrt(2), so measuring
  /// at theta is the same as applying R_Z(theta) and measuring along X.
  /// The measured qubit is removed and the state renormalized.
  int measure_xy(int label, double theta, std::mt19937_64& rng);
  int measure_xy_forced(int label, double theta, int outcome);

  /// Born probability of outcome 0 at angle theta (no state change).
  double outcome_probability(int label, double theta) const;

  double norm() const;

  /// <a|b>. Label sets must match; b is permuted to a's ordering if the
  /// orderings differ.
  static cplx overlap(const StateVector& a, const StateVector& b);

 private:
  int bit_of(int label) const;
  int measure_impl(int label, double theta, std::optional<int> forced,
                   std::mt19937_64* rng);

  std::vector<cplx> amps_;
  std::vector<int> labels_;
};

}  // namespace mbqc

#endif  // MBQC_STATEVEC_HPP
