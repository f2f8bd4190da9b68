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

// Command-line front end. Talks to the core exclusively through the C API.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/mbqc_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure / execution error
constexpr int kExitParse = 2;    // input or parse error

using nlohmann::json;

struct StringDeleter {
  void operator()(char* s) const { mbqc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct CircuitDeleter {
  void operator()(mbqc_circuit* c) const { mbqc_circuit_free(c); }
};
struct PatternDeleter {
  void operator()(mbqc_pattern* p) const { mbqc_pattern_free(p); }
};
using Circuit = std::unique_ptr<mbqc_circuit, CircuitDeleter>;
using Pattern = std::unique_ptr<mbqc_pattern, PatternDeleter>;

int status_exit(mbqc_status s) {
  return s == MBQC_ERR_PARSE ? kExitParse : kExitFailure;
}

int fail(mbqc_status s) {
  std::cerr << "error: " << mbqc_last_error() << "\n";
  return status_exit(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!(out << content)) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string amplitude_line(const json& pair) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.12g,%.12g", pair[0].get<double>(),
                pair[1].get<double>());
  return buf;
}

int load_pattern(const std::string& path, Pattern& pattern) {
  std::string text;
  if (!read_file(path, text)) return kExitParse;
  mbqc_pattern* raw = nullptr;
  if (mbqc_status s = mbqc_pattern_parse(text.c_str(), &raw); s != MBQC_OK)
    return fail(s);
  pattern.reset(raw);
  return kExitOk;
}

int cmd_compile(const std::string& circuit_path, const std::string& out_path) {
  std::string text;
  if (!read_file(circuit_path, text)) return kExitParse;

  mbqc_circuit* craw = nullptr;
  if (mbqc_status s = mbqc_circuit_parse(text.c_str(), &craw); s != MBQC_OK)
    return fail(s);
  Circuit circuit(craw);

  mbqc_pattern* praw = nullptr;
  if (mbqc_status s = mbqc_compile(circuit.get(), &praw); s != MBQC_OK)
    return fail(s);
  Pattern pattern(praw);

  char* doc = nullptr;
  if (mbqc_status s = mbqc_pattern_serialize(pattern.get(), &doc); s != MBQC_OK)
    return fail(s);
  CString doc_owner(doc);
  if (!write_file(out_path, doc)) return kExitFailure;

  int rows = 0, cols = 0, measured = 0;
  mbqc_pattern_dims(pattern.get(), &rows, &cols, &measured);
  std::cout << "slabs " << (cols - 1) / (rows + 1) << "\n"
            << "geometry " << rows << "x" << cols << "\n"
            << "measured " << measured << "\n";
  return kExitOk;
}

int cmd_run(const std::string& pattern_path, const std::string& mode,
            std::uint64_t seed, const std::string& input) {
  Pattern pattern;
  if (int rc = load_pattern(pattern_path, pattern); rc != kExitOk) return rc;

  char* result = nullptr;
  mbqc_status s = mode == "adaptive"
                      ? mbqc_run_adaptive(pattern.get(), input.c_str(), seed,
                                          &result)
                      : mbqc_run_positive(pattern.get(), input.c_str(), &result);
  if (s != MBQC_OK) return fail(s);
  CString owner(result);

  const json r = json::parse(result);
  if (mode == "adaptive") {
    std::cout << "outcomes";
    for (const json& o : r["outcomes"])
      std::cout << " (" << o["row"].get<int>() << "," << o["col"].get<int>()
                << ")=" << o["m"].get<int>();
    std::cout << "\nframe x";
    for (const json& b : r["frame"]["x"]) std::cout << " " << b.get<int>();
    std::cout << "\nframe z";
    for (const json& b : r["frame"]["z"]) std::cout << " " << b.get<int>();
    std::cout << "\ncorrected amplitudes\n";
    for (const json& a : r["corrected_amplitudes"])
      std::cout << amplitude_line(a) << "\n";
  } else {
    for (const json& a : r["amplitudes"]) std::cout << amplitude_line(a) << "\n";
  }
  return kExitOk;
}

int cmd_verify(int max_n, bool as_json) {
  char* report = nullptr;
  int all_pass = 0;
  if (mbqc_status s = mbqc_verify(max_n, &report, &all_pass); s != MBQC_OK)
    return fail(s);
  CString owner(report);

  if (as_json) {
    std::cout << report;
  } else {
    for (const json& r : json::parse(report)) {
      const char* tag = r["informational"].get<bool>()
                            ? "INFO"
                            : (r["pass"].get<bool>() ? "PASS" : "FAIL");
      char dev[32];
      std::snprintf(dev, sizeof(dev), "%.3e", r["max_deviation"].get<double>());
      std::cout << tag << " " << r["name"].get<std::string>();
      if (r["n"].get<int>() > 0) std::cout << " n=" << r["n"].get<int>();
      if (r["p"].get<int>() > 0) std::cout << " p=" << r["p"].get<int>();
      std::cout << " deviation=" << dev << "\n";
    }
  }
  if (!all_pass) {
    std::cerr << "verification failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_diagram(const std::string& pattern_path) {
  Pattern pattern;
  if (int rc = load_pattern(pattern_path, pattern); rc != kExitOk) return rc;
  char* text = nullptr;
  if (mbqc_status s = mbqc_diagram(pattern.get(), &text); s != MBQC_OK)
    return fail(s);
  CString owner(text);
  std::cout << text;
  return kExitOk;
}

int cmd_bench(int rows, int cols) {
  mbqc_pattern* praw = nullptr;
  if (mbqc_status s = mbqc_pattern_all_x(rows, cols, &praw); s != MBQC_OK)
    return fail(s);
  Pattern pattern(praw);

  const auto start = std::chrono::steady_clock::now();
  char* result = nullptr;
  if (mbqc_status s = mbqc_run_positive(pattern.get(), "plus", &result);
      s != MBQC_OK)
    return fail(s);
  CString owner(result);
  const auto stop = std::chrono::steady_clock::now();

  const json r = json::parse(result);
  // Timing goes to stderr so stdout stays deterministic.
  std::cerr << "elapsed_ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                   .count()
            << "\n";
  std::cout << "geometry " << rows << "x" << cols << "\n"
            << "measured " << rows * (cols - 1) << "\n"
            << "peak_live_qubits " << r["peak_live_qubits"].get<int>() << "\n"
            << "output_dim " << r["amplitudes"].size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile quantum circuits to (X,Y)-plane measurement patterns "
               "on open-ended cluster states, execute them, and verify the "
               "underlying circuit identities."};
  app.require_subcommand(1);

  std::string circuit_path, pattern_path, out_path;
  std::string mode = "positive", input = "plus";
  std::uint64_t seed = 0;
  int max_n = 3, rows = 8, cols = 50;
  bool as_json = false;

  CLI::App* compile = app.add_subcommand("compile", "Lower a circuit document "
                                                    "to a pattern document");
  compile->add_option("circuit", circuit_path, "circuit JSON file")->required();
  compile->add_option("pattern", out_path, "output pattern JSON file")->required();

  CLI::App* run = app.add_subcommand("run", "Execute a pattern document");
  run->add_option("pattern", pattern_path, "pattern JSON file")->required();
  run->add_option("--mode", mode, "positive|adaptive")
      ->check(CLI::IsMember({"positive", "adaptive"}));
  run->add_option("--seed", seed, "RNG seed (adaptive mode)");
  run->add_option("--input", input, "plus | bitstring | amps:re,im;...");

  CLI::App* verify = app.add_subcommand("verify", "Run the identity checks");
  verify->add_option("--max-n", max_n, "largest register size (<= 5)")
      ->check(CLI::Range(1, 5));
  verify->add_flag("--json", as_json, "emit the raw JSON report");

  CLI::App* diagram = app.add_subcommand("diagram", "Render a pattern as ASCII");
  diagram->add_option("pattern", pattern_path, "pattern JSON file")->required();

  CLI::App* bench = app.add_subcommand("bench", "Time an all-X streamed run");
  bench->add_option("--rows", rows, "lattice rows");
  bench->add_option("--cols", cols, "lattice columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  if (compile->parsed()) return cmd_compile(circuit_path, out_path);
  if (run->parsed()) return cmd_run(pattern_path, mode, seed, input);
  if (verify->parsed()) return cmd_verify(max_n, as_json);
  if (diagram->parsed()) return cmd_diagram(pattern_path);
  if (bench->parsed()) return cmd_bench(rows, cols);
  return kExitParse;
}
