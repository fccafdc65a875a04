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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qloop/code.hpp"
#include "qloop/engine.hpp"

namespace qloop::cli {

enum class OutputMode { Human, Json };

struct RunConfig {
  std::string target;  // example name or IR file path
  std::uint64_t seed = 0;
  std::uint64_t shots = 1;
  std::optional<std::string> format;
  OutputMode output = OutputMode::Human;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // malformed input, bad format, I/O
inline constexpr int kExitEngine = 2;  // simulator failure

/// Text printed by `run` / `run-ir`: dumps of the first shot rendered with
/// inspect::show, then one histogram per future (and a joint histogram when
/// there are several futures). In Json mode, one ExecutionResult object per
/// shot per line.
std::string render(const QuantumCode &code, const std::vector<ExecutionResult> &shots,
                   const RunConfig &config);

/// ExecutionResult as
///   {"futures":{"0":3},"dumps":{"0":{"qubits":[0,1],
///    "states":[{"basis":0,"re":0.7071067811865476,"im":0.0}]}}}
std::string result_to_json(const ExecutionResult &result);

/// Entry point. `args` excludes the program name.
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qloop::cli
