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

#ifndef MBQC_SERIALIZE_HPP
#define MBQC_SERIALIZE_HPP

#include <string>

#include "mbqc/verify.hpp"

namespace mbqc {

// JSON document formats. Serialization is canonical (fixed key order,
// 2-space indent, angles as decimal text with 17 significant digits) so
// serialize -> parse -> serialize is byte-identical.

std::string circuit_to_json(const LogicalCircuit& c);
LogicalCircuit circuit_from_json(const std::string& text);  // throws ParseError

std::string pattern_to_json(const MeasurementPattern& p);
MeasurementPattern pattern_from_json(const std::string& text);

/// ASCII rendering: `o` for angle-0 operational sites, `t=x.xx` for rotated
/// sites, `[ ]` for output sites.
std::string render_diagram(const MeasurementPattern& p);

/// One line per amplitude in basis-index order, "re,im" with 12 significant
/// digits.
std::string format_amplitudes(const std::vector<cplx>& amps);

/// Verification report as a JSON array of records.
std::string report_to_json(const std::vector<CheckRecord>& records);

/// "plus" | bitstring (char k = logical qubit k) | "amps:re,im;re,im;...".
InputSpec parse_input_spec(const std::string& text, int n);

/// Canonical decimal text for a double (17 significant digits).
std::string format_angle(double value);

}  // namespace mbqc

#endif  // MBQC_SERIALIZE_HPP
