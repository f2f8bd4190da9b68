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

#include "mbqc/cluster.hpp"

#include <algorithm>
#include <string>

namespace mbqc {

std::vector<Site> Geometry::neighbors(Site s) const {
  std::vector<Site> out;
  if (s.col > 1) out.push_back({s.row, s.col - 1});
  if (s.col < cols) out.push_back({s.row, s.col + 1});
  if (has_vertical_edges(s.col)) {
    if (s.row > 1) out.push_back({s.row - 1, s.col});
    if (s.row < rows) out.push_back({s.row + 1, s.col});
  }
  return out;
}

std::vector<std::pair<Site, Site>> edges(const Geometry& g) {
  if (g.rows < 1 || g.cols < 1) throw Error("edges: invalid geometry");
  std::vector<std::pair<Site, Site>> out;
  for (int i = 1; i <= g.rows; ++i)
    for (int j = 1; j <= g.cols - 1; ++j)
      out.push_back({{i, j}, {i, j + 1}});
  for (int j = 1; j <= g.cols; ++j) {
    if (!g.has_vertical_edges(j)) continue;
    for (int i = 1; i <= g.rows - 1; ++i) out.push_back({{i, j}, {i + 1, j}});
  }
  return out;
}

InputSpec InputSpec::generic(StateVector state) {
  InputSpec spec;
  spec.generic_ = true;
  spec.state_ = std::move(state);
  return spec;
}

namespace {

StateVector input_column_state(const Geometry& g, const InputSpec& input) {
  std::vector<int> labels(g.rows);
  for (int i = 1; i <= g.rows; ++i) labels[i - 1] = g.site_label({i, 1});
  if (input.is_standard()) return StateVector::plus_states(labels);
  const StateVector& given = input.state();
  if (given.num_qubits() != g.rows)
    throw Error("input state has " + std::to_string(given.num_qubits()) +
                " qubits, geometry expects " + std::to_string(g.rows));
  return StateVector::from_amplitudes(labels, given.amplitudes());
}

}  // namespace

StateVector build_state(const Geometry& g, const InputSpec& input) {
  StateVector sv = input_column_state(g, input);
  for (int j = 2; j <= g.cols; ++j)
    for (int i = 1; i <= g.rows; ++i) sv.append_plus(g.site_label({i, j}));
  for (const auto& [a, b] : edges(g)) sv.apply_cz(g.site_label(a), g.site_label(b));
  return sv;
}

StateVector stream_columns(const Geometry& g, const InputSpec& input,
                           const ColumnConsumer& consumer, StreamStats* stats) {
  StateVector sv = input_column_state(g, input);
  int peak = sv.num_qubits();

  auto entangle_vertical = [&](int col) {
    if (!g.has_vertical_edges(col)) return;
    for (int i = 1; i <= g.rows - 1; ++i)
      sv.apply_cz(g.site_label({i, col}), g.site_label({i + 1, col}));
  };

  entangle_vertical(1);
  for (int j = 1; j <= g.cols - 1; ++j) {
    for (int i = 1; i <= g.rows; ++i) sv.append_plus(g.site_label({i, j + 1}));
    peak = std::max(peak, sv.num_qubits());
    for (int i = 1; i <= g.rows; ++i)
      sv.apply_cz(g.site_label({i, j}), g.site_label({i, j + 1}));
    entangle_vertical(j + 1);

    consumer(j, sv);
    for (int i = 1; i <= g.rows; ++i) {
      if (sv.has_label(g.site_label({i, j})))
        throw Error("column incomplete: site (" + std::to_string(i) + "," +
                    std::to_string(j) + ") was not measured");
    }
  }
  if (stats) stats->peak_live_qubits = peak;
  return sv;
}

}  // namespace mbqc
