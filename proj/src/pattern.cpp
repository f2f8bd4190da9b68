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

#include "mbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace mbqc {

namespace {

bool column_major_less(Site a, Site b) {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

std::string site_str(Site s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

}  // namespace

void MeasurementPattern::validate() const {
  const Geometry& g = geometry;
  if (g.rows < 1 || g.cols < 1) throw Error("pattern: invalid geometry");
  if (static_cast<int>(outputs.size()) != g.rows)
    throw Error("pattern: output set must be the full last column");
  for (int i = 1; i <= g.rows; ++i)
    if (outputs[i - 1] != Site{i, g.cols})
      throw Error("pattern: outputs must be column " + std::to_string(g.cols) +
                  " in row order");
  if (static_cast<int>(steps.size()) != g.rows * (g.cols - 1))
    throw Error("pattern: every non-output site must appear in exactly one step");
  std::map<Site, std::size_t> index;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Site s = steps[k].site;
    if (!g.contains(s) || s.col == g.cols)
      throw Error("pattern: step site " + site_str(s) + " out of range");
    if (k > 0 && !column_major_less(steps[k - 1].site, s))
      throw Error("pattern: steps must be ordered column-major");
    index[s] = k;
    for (const auto* deps : {&steps[k].x_deps, &steps[k].z_deps}) {
      for (Site d : *deps) {
        auto it = index.find(d);
        if (it == index.end() || it->second >= k)
          throw Error("pattern: dependency " + site_str(d) +
                      " of step " + site_str(s) + " is not an earlier step");
      }
    }
  }
}

std::vector<Site> flow_x_deps(const Geometry& g, Site v) {
  if (v.col >= 2) return {{v.row, v.col - 1}};
  return {};
}

std::vector<Site> flow_z_deps(const Geometry& g, Site v) {
  // v receives a Z from u whenever v is a neighbor of f(u) = (u.row, u.col+1)
  // and v != u. Candidates resolve to (row, col-2) plus the vertical
  // neighbors' predecessors (row +/- 1, col-1) when column v.col has
  // vertical edges.
  std::vector<Site> out;
  if (v.col >= 3) out.push_back({v.row, v.col - 2});
  if (g.has_vertical_edges(v.col)) {
    if (v.row > 1 && v.col >= 2) out.push_back({v.row - 1, v.col - 1});
    if (v.row < g.rows && v.col >= 2) out.push_back({v.row + 1, v.col - 1});
  }
  std::sort(out.begin(), out.end(), column_major_less);
  return out;
}

MeasurementPattern all_x_pattern(int rows, int cols, LatticeKind kind) {
  if (rows < 1 || cols < 1) throw Error("all_x_pattern: invalid dimensions");
  MeasurementPattern p;
  p.geometry = {rows, cols, kind};
  for (int j = 1; j <= cols - 1; ++j) {
    for (int i = 1; i <= rows; ++i) {
      Step st;
      st.site = {i, j};
      st.x_deps = flow_x_deps(p.geometry, st.site);
      st.z_deps = flow_z_deps(p.geometry, st.site);
      p.steps.push_back(std::move(st));
    }
  }
  for (int i = 1; i <= rows; ++i) p.outputs.push_back({i, cols});
  p.adaptive_ready = true;
  return p;
}

namespace {

struct RunOutput {
  StateVector state;
  std::vector<int> outcomes;
};

// Shared executor. If `adaptive` is false every outcome is forced to 0 at
// the nominal angle. Otherwise outcomes come from `forced` (when non-null)
// or are sampled from rng, and angles are adjusted by the dependency sets.
RunOutput run_impl(const MeasurementPattern& p, const InputSpec& input,
                   bool adaptive, const std::vector<int>* forced,
                   std::mt19937_64* rng, StreamStats* stats) {
  p.validate();
  if (adaptive && !p.adaptive_ready)
    throw Error("pattern not adaptive-ready: dependency data missing");
  if (forced && forced->size() != p.steps.size())
    throw Error("forced outcome list length mismatch");

  std::map<Site, int> outcome_of;
  std::vector<int> outcomes(p.steps.size(), 0);
  std::size_t cursor = 0;

  auto consumer = [&](int col, StateVector& sv) {
    while (cursor < p.steps.size() && p.steps[cursor].site.col == col) {
      const Step& st = p.steps[cursor];
      double theta = st.angle;
      int m = 0;
      if (!adaptive) {
        m = sv.measure_xy_forced(p.geometry.site_label(st.site), theta, 0);
      } else {
        int sx = 0, sz = 0;
        for (Site d : st.x_deps) sx ^= outcome_of.at(d);
        for (Site d : st.z_deps) sz ^= outcome_of.at(d);
        theta = (sx ? -theta : theta) + (sz ? std::numbers::pi : 0.0);
        const int label = p.geometry.site_label(st.site);
        m = forced ? sv.measure_xy_forced(label, theta, (*forced)[cursor])
                   : sv.measure_xy(label, theta, *rng);
      }
      outcome_of[st.site] = m;
      outcomes[cursor] = m;
      ++cursor;
    }
  };

  StateVector out = stream_columns(p.geometry, input, consumer, stats);
  return {std::move(out), std::move(outcomes)};
}

PauliFrame frame_from_outcomes(const MeasurementPattern& p,
                               const std::vector<int>& outcomes) {
  const Geometry& g = p.geometry;
  PauliFrame frame;
  frame.x_exp.assign(g.rows, 0);
  frame.z_exp.assign(g.rows, 0);
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    if (!outcomes[k]) continue;
    const Site u = p.steps[k].site;
    const Site fu{u.row, u.col + 1};
    if (fu.col == g.cols) frame.x_exp[fu.row - 1] ^= 1;
    for (Site w : g.neighbors(fu)) {
      if (w == u || w.col != g.cols) continue;
      frame.z_exp[w.row - 1] ^= 1;
    }
  }
  return frame;
}

}  // namespace

StateVector run_positive_branch(const MeasurementPattern& p,
                                const InputSpec& input, StreamStats* stats) {
  return run_impl(p, input, false, nullptr, nullptr, stats).state;
}

AdaptiveResult run_adaptive(const MeasurementPattern& p, const InputSpec& input,
                            std::mt19937_64& rng) {
  RunOutput r = run_impl(p, input, true, nullptr, &rng, nullptr);
  PauliFrame frame = frame_from_outcomes(p, r.outcomes);
  return {std::move(r.state), std::move(r.outcomes), std::move(frame)};
}

AdaptiveResult run_adaptive_forced(const MeasurementPattern& p,
                                   const InputSpec& input,
                                   const std::vector<int>& outcomes) {
  RunOutput r = run_impl(p, input, true, &outcomes, nullptr, nullptr);
  PauliFrame frame = frame_from_outcomes(p, r.outcomes);
  return {std::move(r.state), std::move(r.outcomes), std::move(frame)};
}

StateVector apply_frame(const MeasurementPattern& p, const StateVector& output,
                        const PauliFrame& frame) {
  StateVector sv = output;
  for (std::size_t i = 0; i < p.outputs.size(); ++i) {
    const int label = p.geometry.site_label(p.outputs[i]);
    if (frame.x_exp[i]) sv.apply_single(label, gates::pauli_x());
    if (frame.z_exp[i]) sv.apply_single(label, gates::pauli_z());
  }
  return sv;
}

Eigen::MatrixXcd extract_unitary(const MeasurementPattern& p) {
  const int n = p.geometry.rows;
  if (n > 6) throw Error("extract_unitary: limited to 6 rows");
  const int dim = 1 << n;
  std::vector<int> in_labels(n), out_labels(n);
  for (int i = 1; i <= n; ++i) {
    in_labels[i - 1] = p.geometry.site_label({i, 1});
    out_labels[i - 1] = p.geometry.site_label({i, p.geometry.cols});
  }

  Eigen::MatrixXcd u(dim, dim);
  for (int k = 0; k < dim; ++k) {
    InputSpec input =
        InputSpec::generic(StateVector::basis_state(in_labels, k));
    StateVector out = run_positive_branch(p, input);
    // Permute the output vector into row order.
    std::vector<int> bpos(n);
    for (int i = 0; i < n; ++i) {
      const auto& ls = out.labels();
      bpos[i] = static_cast<int>(
          std::find(ls.begin(), ls.end(), out_labels[i]) - ls.begin());
    }
    for (int r = 0; r < dim; ++r) {
      int src = 0;
      for (int b = 0; b < n; ++b)
        if (r & (1 << b)) src |= 1 << bpos[b];
      u(r, k) = out.amplitudes()[src];
    }
  }

  // Fix the global phase: first nonzero entry (column-major scan) positive real.
  cplx lead(0);
  for (int c = 0; c < dim && lead == cplx(0); ++c)
    for (int r = 0; r < dim; ++r)
      if (std::abs(u(r, c)) > 1e-9) {
        lead = u(r, c);
        break;
      }
  u *= std::abs(lead) / lead;

  const double dev =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (dev > 1e-9)
    throw ExecError("phase/branch inconsistency: extracted matrix deviates from "
                    "unitarity by " + std::to_string(dev));
  return u;
}

}  // namespace mbqc
