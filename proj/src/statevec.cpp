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

#include "mbqc/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mbqc {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}  // namespace

bool SingleQubitGate::is_unitary(double tol) const {
  // g^dagger g == I
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx e = std::conj(at(0, r)) * at(0, c) + std::conj(at(1, r)) * at(1, c);
      if (r == c) e -= 1.0;
      if (std::abs(e) > tol) return false;
    }
  }
  return true;
}

namespace gates {

SingleQubitGate identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
SingleQubitGate pauli_x() { return {{cplx(0), cplx(1), cplx(1), cplx(0)}}; }
SingleQubitGate pauli_z() { return {{cplx(1), cplx(0), cplx(0), cplx(-1)}}; }
SingleQubitGate hadamard() {
  return {{cplx(kSqrtHalf), cplx(kSqrtHalf), cplx(kSqrtHalf), cplx(-kSqrtHalf)}};
}
SingleQubitGate rz(double theta) {
  return {{std::polar(1.0, -theta / 2), cplx(0), cplx(0),
           std::polar(1.0, theta / 2)}};
}
SingleQubitGate rx(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {{cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)}};
}

}  // namespace gates

StateVector StateVector::plus_states(std::span<const int> labels) {
  std::set<int> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw Error("plus_states: duplicate qubit labels");
  StateVector sv;
  sv.labels_.assign(labels.begin(), labels.end());
  const std::size_t dim = std::size_t{1} << labels.size();
  sv.amps_.assign(dim, cplx(std::pow(2.0, -0.5 * static_cast<double>(labels.size())), 0.0));
  return sv;
}

StateVector StateVector::from_amplitudes(std::vector<int> labels,
                                         std::vector<cplx> amps) {
  std::set<int> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw Error("from_amplitudes: duplicate qubit labels");
  if (amps.size() != (std::size_t{1} << labels.size()))
    throw Error("from_amplitudes: amplitude count is not 2^q");
  double n2 = 0;
  for (const cplx& a : amps) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-6)
    throw Error("from_amplitudes: state is not normalized");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& a : amps) a *= inv;
  StateVector sv;
  sv.labels_ = std::move(labels);
  sv.amps_ = std::move(amps);
  return sv;
}

StateVector StateVector::basis_state(std::vector<int> labels,
                                     std::uint64_t index) {
  const std::size_t dim = std::size_t{1} << labels.size();
  if (index >= dim) throw Error("basis_state: index out of range");
  std::vector<cplx> amps(dim, cplx(0));
  amps[index] = cplx(1);
  return from_amplitudes(std::move(labels), std::move(amps));
}

bool StateVector::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int StateVector::bit_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error("unknown qubit label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

void StateVector::apply_single(int label, const SingleQubitGate& g) {
  if (!g.is_unitary()) throw Error("apply_single: gate is not unitary");
  const int k = bit_of(label);
  const std::size_t stride = std::size_t{1} << k;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t i0 = base + lo;
      const std::size_t i1 = i0 + stride;
      const cplx a0 = amps_[i0];
      const cplx a1 = amps_[i1];
      amps_[i0] = g.at(0, 0) * a0 + g.at(0, 1) * a1;
      amps_[i1] = g.at(1, 0) * a0 + g.at(1, 1) * a1;
    }
  }
}

void StateVector::apply_cz(int a, int b) {
  if (a == b) throw Error("apply_cz: identical labels");
  const std::size_t ma = std::size_t{1} << bit_of(a);
  const std::size_t mb = std::size_t{1} << bit_of(b);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
  }
}

void StateVector::append_plus(int label) {
  if (has_label(label)) throw Error("append_plus: label already live");
  const std::size_t dim = amps_.size();
  std::vector<cplx> next(2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    next[i] = amps_[i] * kSqrtHalf;
    next[i + dim] = amps_[i] * kSqrtHalf;
  }
  amps_ = std::move(next);
  labels_.push_back(label);
}

double StateVector::outcome_probability(int label, double theta) const {
  const int k = bit_of(label);
  const std::size_t stride = std::size_t{1} << k;
  const cplx phase = std::polar(1.0, theta);
  double p0 = 0;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      p0 += 0.5 * std::norm(amps_[base + lo] + phase * amps_[base + lo + stride]);
    }
  }
  return p0;
}

int StateVector::measure_impl(int label, double theta,
                              std::optional<int> forced, std::mt19937_64* rng) {
  const int k = bit_of(label);
  const std::size_t stride = std::size_t{1} << k;
  const std::size_t dim = amps_.size();
  const cplx phase = std::polar(1.0, theta);

  int m;
  if (forced) {
    m = *forced;
  } else {
    const double p0 = outcome_probability(label, theta);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    m = u(*rng) < p0 ? 0 : 1;
  }

  const double sign = (m == 0) ? 1.0 : -1.0;
  std::vector<cplx> next(dim / 2);
  double p = 0;
  std::size_t r = 0;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t lo = 0; lo < stride; ++lo, ++r) {
      const cplx v =
          kSqrtHalf * (amps_[base + lo] + sign * phase * amps_[base + lo + stride]);
      next[r] = v;
      p += std::norm(v);
    }
  }
  if (p <= kNormTol)
    throw ExecError("impossible branch: outcome " + std::to_string(m) +
                    " has (near-)zero probability");
  const double inv = 1.0 / std::sqrt(p);
  for (cplx& v : next) v *= inv;
  amps_ = std::move(next);
  labels_.erase(labels_.begin() + k);
  return m;
}

int StateVector::measure_xy(int label, double theta, std::mt19937_64& rng) {
  return measure_impl(label, theta, std::nullopt, &rng);
}

int StateVector::measure_xy_forced(int label, double theta, int outcome) {
  if (outcome != 0 && outcome != 1)
    throw Error("measure_xy_forced: outcome must be 0 or 1");
  return measure_impl(label, theta, outcome, nullptr);
}

double StateVector::norm() const {
  double n2 = 0;
  for (const cplx& a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

cplx StateVector::overlap(const StateVector& a, const StateVector& b) {
  if (a.labels_.size() != b.labels_.size())
    throw Error("overlap: label sets differ");
  // Map each of a's labels to b's bit position.
  std::vector<int> bpos(a.labels_.size());
  for (std::size_t k = 0; k < a.labels_.size(); ++k)
    bpos[k] = b.bit_of(a.labels_[k]);
  cplx acc(0);
  const std::size_t dim = a.amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < bpos.size(); ++k)
      if (i & (std::size_t{1} << k)) j |= std::size_t{1} << bpos[k];
    acc += std::conj(a.amps_[i]) * b.amps_[j];
  }
  return acc;
}

}  // namespace mbqc
