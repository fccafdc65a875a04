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
#include <map>
#include <utility>

#include "qloop/code.hpp"
#include "qloop/rng.hpp"
#include "qloop/state_vector.hpp"

namespace qloop {

/// Largest register the dense engine accepts (2^28 amplitudes = 4 GiB).
inline constexpr std::uint32_t kMaxQubits = 28;

/// Normalization slack tolerated after every instruction.
inline constexpr double kNormTolerance = 1e-9;

struct ExecutionResult {
  std::map<FutureId, std::uint64_t> futures;
  std::map<DumpId, DumpData> dumps;

  bool operator==(const ExecutionResult &) const = default;
};

/// Interprets one program on a dense state vector. One engine per run; the
/// random stream is owned by the engine and seeded once.
class Engine {
 public:
  explicit Engine(std::uint64_t seed) : rng_(seed) {}

  /// Validates `code` (MalformedCode) and runs it from the empty register.
  void run(const QuantumCode &code);

  const StateVector &state() const { return state_; }
  const ExecutionResult &result() const { return result_; }
  ExecutionResult take_result() { return std::move(result_); }

 private:
  void step(const Instruction &inst);
  void check_norm() const;

  Xoshiro256 rng_;
  StateVector state_;
  ExecutionResult result_;
};

/// Pure: identical (code, seed) gives an identical result.
ExecutionResult execute(const QuantumCode &code, std::uint64_t seed);

}  // namespace qloop
