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

#include "mbqc/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace mbqc {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kDocVersion = 1;

std::string gate_name(LogicalGate::Kind k) {
  switch (k) {
    case LogicalGate::Kind::kRz: return "rz";
    case LogicalGate::Kind::kRx: return "rx";
    case LogicalGate::Kind::kRzx: return "rzx";
    case LogicalGate::Kind::kH: return "h";
    case LogicalGate::Kind::kCnot: return "cnot";
    case LogicalGate::Kind::kSwap: return "swap";
    case LogicalGate::Kind::kCz: return "cz";
  }
  throw Error("gate_name: unreachable");
}

double parse_angle_field(const ordered_json& j, const std::string& context) {
  const auto it = j.find("angle");
  if (it == j.end()) throw ParseError(context + ".angle: missing");
  if (it->is_number()) return it->get<double>();
  if (!it->is_string())
    throw ParseError(context + ".angle: expected decimal text or number");
  const std::string s = it->get<std::string>();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(context + ".angle: malformed decimal '" + s + "'");
  }
  if (used != s.size())
    throw ParseError(context + ".angle: malformed decimal '" + s + "'");
  return v;
}

int parse_int_field(const ordered_json& j, const char* key,
                    const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer())
    throw ParseError(context + "." + key + ": missing or not an integer");
  return it->get<int>();
}

ordered_json parse_document(const std::string& text, const char* what) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(std::string(what) + ": not an object");
  const auto v = j.find("version");
  if (v == j.end() || !v->is_number_integer() || v->get<int>() != kDocVersion)
    throw ParseError(std::string(what) + ".version: expected " +
                     std::to_string(kDocVersion));
  return j;
}

ordered_json site_json(Site s) { return ordered_json::array({s.row, s.col}); }

Site parse_site(const ordered_json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError(context + ": expected [row, col]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

std::string format_angle(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string circuit_to_json(const LogicalCircuit& c) {
  ordered_json j;
  j["version"] = kDocVersion;
  j["n"] = c.width;
  j["gates"] = ordered_json::array();
  for (const LogicalGate& g : c.gates) {
    ordered_json jg;
    jg["gate"] = gate_name(g.kind);
    if (g.kind == LogicalGate::Kind::kCnot) {
      jg["control"] = g.qubit;
      jg["target"] = g.qubit2;
    } else {
      jg["qubit"] = g.qubit;
    }
    if (g.is_primitive()) jg["angle"] = format_angle(g.angle);
    if (g.kind == LogicalGate::Kind::kRzx)
      jg["z_on"] =
          g.orient == LogicalGate::Orientation::kZOnLower ? "lower" : "upper";
    j["gates"].push_back(std::move(jg));
  }
  return j.dump(2) + "\n";
}

LogicalCircuit circuit_from_json(const std::string& text) {
  const ordered_json j = parse_document(text, "circuit");
  LogicalCircuit c;
  c.width = parse_int_field(j, "n", "circuit");
  const auto gs = j.find("gates");
  if (gs == j.end() || !gs->is_array())
    throw ParseError("circuit.gates: missing or not an array");
  int idx = 0;
  for (const ordered_json& jg : *gs) {
    const std::string ctx = "circuit.gates[" + std::to_string(idx++) + "]";
    const auto kind_it = jg.find("gate");
    if (kind_it == jg.end() || !kind_it->is_string())
      throw ParseError(ctx + ".gate: missing gate name");
    const std::string kind = kind_it->get<std::string>();
    if (kind == "rz") {
      c.gates.push_back(LogicalGate::rz(parse_int_field(jg, "qubit", ctx),
                                        parse_angle_field(jg, ctx)));
    } else if (kind == "rx") {
      c.gates.push_back(LogicalGate::rx(parse_int_field(jg, "qubit", ctx),
                                        parse_angle_field(jg, ctx)));
    } else if (kind == "rzx") {
      LogicalGate::Orientation o = LogicalGate::Orientation::kZOnLower;
      if (jg.contains("z_on")) {
        const std::string z = jg.at("z_on").get<std::string>();
        if (z == "lower") o = LogicalGate::Orientation::kZOnLower;
        else if (z == "upper") o = LogicalGate::Orientation::kZOnUpper;
        else throw ParseError(ctx + ".z_on: expected 'lower' or 'upper'");
      }
      c.gates.push_back(LogicalGate::rzx(parse_int_field(jg, "qubit", ctx),
                                         parse_angle_field(jg, ctx), o));
    } else if (kind == "h") {
      c.gates.push_back(LogicalGate::h(parse_int_field(jg, "qubit", ctx)));
    } else if (kind == "cnot") {
      c.gates.push_back(LogicalGate::cnot(parse_int_field(jg, "control", ctx),
                                          parse_int_field(jg, "target", ctx)));
    } else if (kind == "swap") {
      c.gates.push_back(LogicalGate::swap(parse_int_field(jg, "qubit", ctx)));
    } else if (kind == "cz") {
      c.gates.push_back(LogicalGate::cz(parse_int_field(jg, "qubit", ctx)));
    } else {
      throw ParseError(ctx + ".gate: unknown gate '" + kind + "'");
    }
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("circuit: ") + e.what());
  }
  return c;
}

std::string pattern_to_json(const MeasurementPattern& p) {
  ordered_json j;
  j["version"] = kDocVersion;
  j["rows"] = p.geometry.rows;
  j["cols"] = p.geometry.cols;
  j["kind"] =
      p.geometry.kind == LatticeKind::kOpenEnded ? "open-ended" : "closed";
  j["adaptive"] = p.adaptive_ready;
  j["measurements"] = ordered_json::array();
  for (const Step& st : p.steps) {
    ordered_json jm;
    jm["row"] = st.site.row;
    jm["col"] = st.site.col;
    jm["angle"] = format_angle(st.angle);
    jm["x_deps"] = ordered_json::array();
    for (Site d : st.x_deps) jm["x_deps"].push_back(site_json(d));
    jm["z_deps"] = ordered_json::array();
    for (Site d : st.z_deps) jm["z_deps"].push_back(site_json(d));
    j["measurements"].push_back(std::move(jm));
  }
  j["outputs"] = ordered_json::array();
  for (Site s : p.outputs) j["outputs"].push_back(site_json(s));
  return j.dump(2) + "\n";
}

MeasurementPattern pattern_from_json(const std::string& text) {
  const ordered_json j = parse_document(text, "pattern");
  MeasurementPattern p;
  p.geometry.rows = parse_int_field(j, "rows", "pattern");
  p.geometry.cols = parse_int_field(j, "cols", "pattern");
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string())
    throw ParseError("pattern.kind: missing");
  const std::string kind = kind_it->get<std::string>();
  if (kind == "open-ended") p.geometry.kind = LatticeKind::kOpenEnded;
  else if (kind == "closed") p.geometry.kind = LatticeKind::kClosed;
  else throw ParseError("pattern.kind: expected 'open-ended' or 'closed'");
  p.adaptive_ready = j.value("adaptive", false);

  const auto ms = j.find("measurements");
  if (ms == j.end() || !ms->is_array())
    throw ParseError("pattern.measurements: missing or not an array");
  int idx = 0;
  for (const ordered_json& jm : *ms) {
    const std::string ctx = "pattern.measurements[" + std::to_string(idx++) + "]";
    Step st;
    st.site = {parse_int_field(jm, "row", ctx), parse_int_field(jm, "col", ctx)};
    st.angle = parse_angle_field(jm, ctx);
    if (jm.contains("x_deps"))
      for (const ordered_json& d : jm.at("x_deps"))
        st.x_deps.push_back(parse_site(d, ctx + ".x_deps"));
    if (jm.contains("z_deps"))
      for (const ordered_json& d : jm.at("z_deps"))
        st.z_deps.push_back(parse_site(d, ctx + ".z_deps"));
    p.steps.push_back(std::move(st));
  }
  const auto os = j.find("outputs");
  if (os == j.end() || !os->is_array())
    throw ParseError("pattern.outputs: missing or not an array");
  for (const ordered_json& s : *os)
    p.outputs.push_back(parse_site(s, "pattern.outputs"));
  try {
    p.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("pattern: ") + e.what());
  }
  return p;
}

std::string render_diagram(const MeasurementPattern& p) {
  const Geometry& g = p.geometry;
  std::vector<std::vector<std::string>> cells(
      g.rows, std::vector<std::string>(g.cols, "o"));
  for (const Step& st : p.steps) {
    if (st.angle != 0.0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "t=%.2f", st.angle);
      cells[st.site.row - 1][st.site.col - 1] = buf;
    }
  }
  for (Site s : p.outputs) cells[s.row - 1][s.col - 1] = "[ ]";

  std::vector<std::size_t> width(g.cols, 1);
  for (int j = 0; j < g.cols; ++j)
    for (int i = 0; i < g.rows; ++i)
      width[j] = std::max(width[j], cells[i][j].size());

  std::string out;
  for (int i = 0; i < g.rows; ++i) {
    std::string line;
    for (int j = 0; j < g.cols; ++j) {
      if (j) line += ' ';
      line += cells[i][j];
      line += std::string(width[j] - cells[i][j].size(), ' ');
    }
    const std::size_t end = line.find_last_not_of(' ');
    out += line.substr(0, end + 1);
    out += '\n';
  }
  return out;
}

std::string format_amplitudes(const std::vector<cplx>& amps) {
  std::ostringstream out;
  char buf[80];
  for (const cplx& a : amps) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g", a.real(), a.imag());
    out << buf << '\n';
  }
  return out.str();
}

std::string report_to_json(const std::vector<CheckRecord>& records) {
  ordered_json j = ordered_json::array();
  for (const CheckRecord& r : records) {
    ordered_json jr;
    jr["name"] = r.name;
    jr["n"] = r.n;
    jr["p"] = r.p;
    jr["max_deviation"] = r.max_deviation;
    jr["pass"] = r.pass;
    jr["informational"] = r.informational;
    j.push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

InputSpec parse_input_spec(const std::string& text, int n) {
  if (text.empty() || text == "plus") return InputSpec::standard();
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  if (text.rfind("amps:", 0) == 0) {
    std::vector<cplx> amps;
    std::stringstream ss(text.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      const std::size_t comma = tok.find(',');
      if (comma == std::string::npos)
        throw ParseError("input spec: expected 're,im' pairs separated by ';'");
      try {
        amps.emplace_back(std::stod(tok.substr(0, comma)),
                          std::stod(tok.substr(comma + 1)));
      } catch (const std::exception&) {
        throw ParseError("input spec: malformed amplitude '" + tok + "'");
      }
    }
    if (amps.size() != (std::size_t{1} << n))
      throw ParseError("input spec: expected " +
                       std::to_string(std::size_t{1} << n) + " amplitudes");
    return InputSpec::generic(StateVector::from_amplitudes(labels, std::move(amps)));
  }
  if (static_cast<int>(text.size()) != n)
    throw ParseError("input spec: bitstring length must equal the width " +
                     std::to_string(n));
  std::uint64_t index = 0;
  for (int k = 0; k < n; ++k) {
    if (text[k] == '1') index |= std::uint64_t{1} << k;
    else if (text[k] != '0')
      throw ParseError("input spec: expected 'plus', a bitstring, or 'amps:...'");
  }
  return InputSpec::generic(StateVector::basis_state(labels, index));
}

}  // namespace mbqc
