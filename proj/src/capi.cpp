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

#include "mbqc/mbqc_c.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "mbqc/serialize.hpp"

struct mbqc_circuit {
  mbqc::LogicalCircuit value;
};

struct mbqc_pattern {
  mbqc::MeasurementPattern value;
};

namespace {

thread_local std::string g_last_error;

using ordered_json = nlohmann::ordered_json;

template <typename Fn>
mbqc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MBQC_OK;
  } catch (const mbqc::ParseError& e) {
    g_last_error = e.what();
    return MBQC_ERR_PARSE;
  } catch (const mbqc::ExecError& e) {
    g_last_error = e.what();
    return MBQC_ERR_EXEC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MBQC_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* msg) {
  if (!ok) throw mbqc::Error(msg);
}

ordered_json amplitudes_json(const std::vector<mbqc::cplx>& amps) {
  ordered_json j = ordered_json::array();
  for (const mbqc::cplx& a : amps)
    j.push_back(ordered_json::array({a.real(), a.imag()}));
  return j;
}

ordered_json outputs_json(const mbqc::MeasurementPattern& p) {
  ordered_json j = ordered_json::array();
  for (mbqc::Site s : p.outputs) j.push_back(ordered_json::array({s.row, s.col}));
  return j;
}

// Output amplitudes reindexed so bit b is output row b+1.
std::vector<mbqc::cplx> row_ordered(const mbqc::MeasurementPattern& p,
                                    const mbqc::StateVector& sv) {
  const int n = p.geometry.rows;
  std::vector<int> bpos(n);
  for (int i = 0; i < n; ++i) {
    const int label = p.geometry.site_label(p.outputs[i]);
    const auto& ls = sv.labels();
    bpos[i] = static_cast<int>(
        std::find(ls.begin(), ls.end(), label) - ls.begin());
  }
  const std::size_t dim = sv.amplitudes().size();
  std::vector<mbqc::cplx> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t src = 0;
    for (int b = 0; b < n; ++b)
      if (r & (std::size_t{1} << b)) src |= std::size_t{1} << bpos[b];
    out[r] = sv.amplitudes()[src];
  }
  return out;
}

}  // namespace

extern "C" {

const char* mbqc_last_error(void) { return g_last_error.c_str(); }

void mbqc_string_free(char* s) { delete[] s; }

mbqc_status mbqc_circuit_parse(const char* text, mbqc_circuit** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mbqc_circuit{mbqc::circuit_from_json(text)};
  });
}

mbqc_status mbqc_circuit_serialize(const mbqc_circuit* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup_string(mbqc::circuit_to_json(c->value));
  });
}

void mbqc_circuit_free(mbqc_circuit* c) { delete c; }

mbqc_status mbqc_compile(const mbqc_circuit* c, mbqc_pattern** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new mbqc_pattern{mbqc::compile_circuit(c->value).pattern};
  });
}

mbqc_status mbqc_pattern_parse(const char* text, mbqc_pattern** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mbqc_pattern{mbqc::pattern_from_json(text)};
  });
}

mbqc_status mbqc_pattern_serialize(const mbqc_pattern* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(mbqc::pattern_to_json(p->value));
  });
}

mbqc_status mbqc_pattern_dims(const mbqc_pattern* p, int* rows, int* cols,
                              int* n_measured) {
  return guarded([&] {
    require(p, "null argument");
    if (rows) *rows = p->value.geometry.rows;
    if (cols) *cols = p->value.geometry.cols;
    if (n_measured) *n_measured = p->value.num_measured();
  });
}

mbqc_status mbqc_pattern_all_x(int rows, int cols, mbqc_pattern** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new mbqc_pattern{mbqc::all_x_pattern(rows, cols)};
  });
}

void mbqc_pattern_free(mbqc_pattern* p) { delete p; }

mbqc_status mbqc_run_positive(const mbqc_pattern* p, const char* input_spec,
                              char** result_json) {
  return guarded([&] {
    require(p && result_json, "null argument");
    const mbqc::InputSpec input =
        mbqc::parse_input_spec(input_spec ? input_spec : "plus",
                               p->value.geometry.rows);
    mbqc::StreamStats stats;
    const mbqc::StateVector out =
        mbqc::run_positive_branch(p->value, input, &stats);
    ordered_json j;
    j["mode"] = "positive";
    j["outputs"] = outputs_json(p->value);
    j["amplitudes"] = amplitudes_json(row_ordered(p->value, out));
    j["peak_live_qubits"] = stats.peak_live_qubits;
    *result_json = dup_string(j.dump(2) + "\n");
  });
}

mbqc_status mbqc_run_adaptive(const mbqc_pattern* p, const char* input_spec,
                              uint64_t seed, char** result_json) {
  return guarded([&] {
    require(p && result_json, "null argument");
    const mbqc::InputSpec input =
        mbqc::parse_input_spec(input_spec ? input_spec : "plus",
                               p->value.geometry.rows);
    std::mt19937_64 rng(seed);
    const mbqc::AdaptiveResult r = mbqc::run_adaptive(p->value, input, rng);
    const mbqc::StateVector corrected =
        mbqc::apply_frame(p->value, r.output, r.frame);

    ordered_json j;
    j["mode"] = "adaptive";
    j["seed"] = seed;
    j["outputs"] = outputs_json(p->value);
    j["outcomes"] = ordered_json::array();
    for (std::size_t k = 0; k < p->value.steps.size(); ++k) {
      const mbqc::Site s = p->value.steps[k].site;
      j["outcomes"].push_back(
          ordered_json{{"row", s.row}, {"col", s.col}, {"m", r.outcomes[k]}});
    }
    ordered_json frame;
    frame["x"] = ordered_json::array();
    frame["z"] = ordered_json::array();
    for (std::uint8_t b : r.frame.x_exp) frame["x"].push_back(int(b));
    for (std::uint8_t b : r.frame.z_exp) frame["z"].push_back(int(b));
    j["frame"] = std::move(frame);
    j["amplitudes"] = amplitudes_json(row_ordered(p->value, r.output));
    j["corrected_amplitudes"] = amplitudes_json(row_ordered(p->value, corrected));
    *result_json = dup_string(j.dump(2) + "\n");
  });
}

mbqc_status mbqc_verify(int max_n, char** report_json, int* all_pass) {
  return guarded([&] {
    require(report_json, "null argument");
    const std::vector<mbqc::CheckRecord> records = mbqc::run_verification(max_n);
    *report_json = dup_string(mbqc::report_to_json(records));
    if (all_pass) *all_pass = mbqc::all_pass(records) ? 1 : 0;
  });
}

mbqc_status mbqc_diagram(const mbqc_pattern* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(mbqc::render_diagram(p->value));
  });
}

}  // extern "C"
