/* Copyright 2026 The mbqcxy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the measurement-pattern compiler and simulator. All
 * documents and results are exchanged as JSON text; handles are opaque.
 * On any failure a status code is returned and mbqc_last_error() holds a
 * human-readable message (thread-local). Strings returned through `char**`
 * must be released with mbqc_string_free(). */

#ifndef MBQC_MBQC_C_H
#define MBQC_MBQC_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mbqc_circuit mbqc_circuit;
typedef struct mbqc_pattern mbqc_pattern;

typedef enum {
  MBQC_OK = 0,
  MBQC_ERR_INVALID = 1, /* bad arguments / contract violation */
  MBQC_ERR_PARSE = 2,   /* malformed document or input spec */
  MBQC_ERR_EXEC = 3     /* execution failure (impossible branch etc.) */
} mbqc_status;

const char* mbqc_last_error(void);
void mbqc_string_free(char* s);

/* Circuit documents */
mbqc_status mbqc_circuit_parse(const char* text, mbqc_circuit** out);
mbqc_status mbqc_circuit_serialize(const mbqc_circuit* c, char** out);
void mbqc_circuit_free(mbqc_circuit* c);

/* Compilation */
mbqc_status mbqc_compile(const mbqc_circuit* c, mbqc_pattern** out);

/* Pattern documents */
mbqc_status mbqc_pattern_parse(const char* text, mbqc_pattern** out);
mbqc_status mbqc_pattern_serialize(const mbqc_pattern* p, char** out);
mbqc_status mbqc_pattern_dims(const mbqc_pattern* p, int* rows, int* cols,
                              int* n_measured);
/* All operational sites at angle 0 on an open-ended lattice (flow deps set). */
mbqc_status mbqc_pattern_all_x(int rows, int cols, mbqc_pattern** out);
void mbqc_pattern_free(mbqc_pattern* p);

/* Execution. input_spec is "plus", a bitstring (char k = logical qubit k),
 * or "amps:re,im;re,im;...". Results are JSON objects:
 *   positive: {"mode","outputs","amplitudes":[[re,im],..],"peak_live_qubits"}
 *   adaptive: adds "seed","outcomes","frame","corrected_amplitudes".
 * Adaptive runs with equal seeds are identical. */
mbqc_status mbqc_run_positive(const mbqc_pattern* p, const char* input_spec,
                              char** result_json);
mbqc_status mbqc_run_adaptive(const mbqc_pattern* p, const char* input_spec,
                              uint64_t seed, char** result_json);

/* Identity/verification suite up to max_n (<= 5); report is a JSON array.
 * all_pass is 1 iff every non-informational record passed. */
mbqc_status mbqc_verify(int max_n, char** report_json, int* all_pass);

/* ASCII diagram of a pattern. */
mbqc_status mbqc_diagram(const mbqc_pattern* p, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MBQC_MBQC_C_H */
