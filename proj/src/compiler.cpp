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

#include "mbqc/compiler.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace mbqc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_qubit(int k, int width, const char* what) {
  if (k < 1 || k > width)
    throw Error(std::string(what) + ": qubit index " + std::to_string(k) +
                " out of range 1.." + std::to_string(width));
}

double normalize_angle(double theta) {
  const double two_pi = 2 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0) theta += two_pi;
  return theta;
}

}  // namespace

void LogicalCircuit::validate() const {
  if (width < 1) throw Error("circuit width must be at least 1");
  for (const LogicalGate& g : gates) {
    switch (g.kind) {
      case LogicalGate::Kind::kRz:
      case LogicalGate::Kind::kRx:
      case LogicalGate::Kind::kH:
        check_qubit(g.qubit, width, "gate");
        break;
      case LogicalGate::Kind::kRzx:
      case LogicalGate::Kind::kSwap:
      case LogicalGate::Kind::kCz:
        check_qubit(g.qubit, width, "gate");
        check_qubit(g.qubit + 1, width, "gate (adjacent pair)");
        break;
      case LogicalGate::Kind::kCnot:
        check_qubit(g.qubit, width, "cnot control");
        check_qubit(g.qubit2, width, "cnot target");
        if (g.qubit == g.qubit2) throw Error("cnot: control equals target");
        break;
    }
  }
}

SlabPlan compile_primitive(const LogicalGate& g, int n,
                           std::span<const int> placement) {
  if (!g.is_primitive()) throw Error("compile_primitive: gate is not primitive");
  if (static_cast<int>(placement.size()) != n)
    throw Error("compile_primitive: placement arity mismatch");

  SlabPlan slab;
  slab.rows = n;
  const auto row_of = [&](int k) {
    check_qubit(k, n, "compile_primitive");
    return placement[k - 1];
  };

  switch (g.kind) {
    case LogicalGate::Kind::kRz:
      // Slab unitary: mirror . R_Z on the slab-entry row of the target.
      slab.rotated_sites.push_back({{row_of(g.qubit), 1}, g.angle});
      break;
    case LogicalGate::Kind::kRx:
      // A rotation in column n+1 lands as mirror . R_X on row n+1-i.
      slab.rotated_sites.push_back({{n + 1 - row_of(g.qubit), n + 1}, g.angle});
      break;
    case LogicalGate::Kind::kRzx: {
      const int zq = g.orient == LogicalGate::Orientation::kZOnLower
                         ? g.qubit
                         : g.qubit + 1;
      const int xq = g.orient == LogicalGate::Orientation::kZOnLower
                         ? g.qubit + 1
                         : g.qubit;
      const int zrow = row_of(zq);
      const int xrow = row_of(xq);
      // Interior rotations steer Z (x) X onto adjacent rows: row 1 at
      // column p yields mirror . Rzx(Z@p, X@p-1); row n yields
      // mirror . Rzx(Z@n+1-p, X@n+2-p).
      if (xrow == zrow - 1) {
        slab.rotated_sites.push_back({{1, zrow}, g.angle});
      } else if (xrow == zrow + 1) {
        slab.rotated_sites.push_back({{n, n + 1 - zrow}, g.angle});
      } else {
        throw Error("compile_primitive: Rzx endpoints are not physically adjacent");
      }
      break;
    }
    default:
      throw Error("compile_primitive: unreachable");
  }
  for (const auto& [site, angle] : slab.rotated_sites) {
    (void)angle;
    if (site.row < 1 || site.row > n || site.col < 1 || site.col > n + 1)
      throw Error("compile_primitive: rotated site out of slab bounds");
  }
  return slab;
}

namespace {

void expand(const LogicalGate& g, int width, std::vector<LogicalGate>& out);

void expand_adjacent_cnot(int c, int t, std::vector<LogicalGate>& out) {
  if (t == c + 1) {
    out.push_back(LogicalGate::rz(c, kHalfPi));
    out.push_back(LogicalGate::rx(t, kHalfPi));
    out.push_back(LogicalGate::rzx(c, -kHalfPi,
                                   LogicalGate::Orientation::kZOnLower));
  } else {
    // control above target: Z factor on the upper qubit of the pair (t, t+1)
    out.push_back(LogicalGate::rz(c, kHalfPi));
    out.push_back(LogicalGate::rx(t, kHalfPi));
    out.push_back(LogicalGate::rzx(t, -kHalfPi,
                                   LogicalGate::Orientation::kZOnUpper));
  }
}

void expand_swap(int k, int width, std::vector<LogicalGate>& out) {
  expand_adjacent_cnot(k, k + 1, out);
  expand_adjacent_cnot(k + 1, k, out);
  expand_adjacent_cnot(k, k + 1, out);
}

void expand(const LogicalGate& g, int width, std::vector<LogicalGate>& out) {
  switch (g.kind) {
    case LogicalGate::Kind::kRz:
    case LogicalGate::Kind::kRx:
    case LogicalGate::Kind::kRzx:
      out.push_back(g);
      break;
    case LogicalGate::Kind::kH:
      out.push_back(LogicalGate::rz(g.qubit, kHalfPi));
      out.push_back(LogicalGate::rx(g.qubit, kHalfPi));
      out.push_back(LogicalGate::rz(g.qubit, kHalfPi));
      break;
    case LogicalGate::Kind::kSwap:
      expand_swap(g.qubit, width, out);
      break;
    case LogicalGate::Kind::kCz:
      expand(LogicalGate::h(g.qubit + 1), width, out);
      expand_adjacent_cnot(g.qubit, g.qubit + 1, out);
      expand(LogicalGate::h(g.qubit + 1), width, out);
      break;
    case LogicalGate::Kind::kCnot: {
      const int c = g.qubit, t = g.qubit2;
      if (std::abs(c - t) == 1) {
        expand_adjacent_cnot(c, t, out);
        break;
      }
      // Route the control next to the target through a SWAP chain.
      std::vector<int> chain;
      if (c < t)
        for (int j = c; j <= t - 2; ++j) chain.push_back(j);
      else
        for (int j = c - 1; j >= t + 1; --j) chain.push_back(j);
      for (int j : chain) expand_swap(j, width, out);
      expand_adjacent_cnot(c < t ? t - 1 : t + 1, t, out);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        expand_swap(*it, width, out);
      break;
    }
  }
}

}  // namespace

std::vector<LogicalGate> decompose(const LogicalGate& g, int width) {
  LogicalCircuit probe{width, {g}};
  probe.validate();
  std::vector<LogicalGate> out;
  expand(g, width, out);
  return out;
}

CompileResult compile_circuit(const LogicalCircuit& c) {
  c.validate();
  const int n = c.width;

  std::vector<LogicalGate> prims;
  for (const LogicalGate& g : c.gates) expand(g, n, prims);

  std::vector<int> placement(n);
  for (int k = 1; k <= n; ++k) placement[k - 1] = k;

  std::map<Site, double> rotated;  // global site -> angle
  int slabs = 0;
  for (const LogicalGate& g : prims) {
    SlabPlan slab = compile_primitive(g, n, placement);
    const int col0 = slabs * (n + 1);
    for (const auto& [site, angle] : slab.rotated_sites)
      rotated[{site.row, col0 + site.col}] = normalize_angle(angle);
    for (int k = 0; k < n; ++k) placement[k] = n + 1 - placement[k];
    ++slabs;
  }
  if (slabs % 2 == 1) ++slabs;  // trailing all-X slab restores the identity

  CompileResult result;
  result.slab_count = slabs;
  result.geometry = {n, slabs * (n + 1) + 1, LatticeKind::kOpenEnded};
  result.pattern = all_x_pattern(result.geometry.rows, result.geometry.cols);
  for (Step& st : result.pattern.steps) {
    auto it = rotated.find(st.site);
    if (it != rotated.end()) st.angle = it->second;
  }
  return result;
}

CompileResult build_cz_ladder(int n) {
  if (n < 2) throw Error("build_cz_ladder: width must be at least 2");
  LogicalCircuit c;
  c.width = n;
  for (int i = 1; i <= n - 1; ++i) c.gates.push_back(LogicalGate::cz(i));
  return compile_circuit(c);
}

CompileResult emulate_closed_cluster(int n, int m) {
  if (n < 2 || m < 2) throw Error("emulate_closed_cluster: need n,m >= 2");
  // All-X measurement of the closed n x m lattice applies m-1 layer
  // operators (CZ ladder then Hadamards) followed by the extra CZ ladder
  // of the last column.
  LogicalCircuit c;
  c.width = n;
  for (int j = 1; j <= m - 1; ++j) {
    for (int i = 1; i <= n - 1; ++i) c.gates.push_back(LogicalGate::cz(i));
    for (int i = 1; i <= n; ++i) c.gates.push_back(LogicalGate::h(i));
  }
  for (int i = 1; i <= n - 1; ++i) c.gates.push_back(LogicalGate::cz(i));
  return compile_circuit(c);
}

}  // namespace mbqc
