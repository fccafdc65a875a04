// Copyright 2026 The qloop Authors
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

#pragma once

#include <string>
#include <string_view>

#include "qloop/code.hpp"

namespace qloop {

inline constexpr int kCodeFormatVersion = 1;

/// JSON text of `code`:
///
///   {"version":1,"num_qubits":n,"num_futures":f,"num_dumps":d,
///    "instructions":[...]}
///
/// with instructions tagged by "op": alloc, gate, measure, dump, branch.
/// Angles are written as shortest round-trip decimals, so
/// deserialize(serialize(c)) == c exactly.
std::string serialize(const QuantumCode &code, int indent = -1);

/// Parses and validates; throws MalformedCode on any failure.
QuantumCode deserialize(std::string_view text);

}  // namespace qloop
