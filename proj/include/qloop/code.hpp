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

// The quantum code IR: the instruction list a process hands to an engine in
// one piece. There is no interaction with the caller while it runs, so every
// classical decision the program makes on the quantum side is encoded as a
// Branch on a measurement future.

#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qloop/gate.hpp"

namespace qloop {

using QubitIndex = std::uint32_t;
using FutureId = std::uint32_t;
using DumpId = std::uint32_t;

struct Instruction;

struct Alloc {
  std::uint32_t count = 0;
  bool operator==(const Alloc &) const = default;
};

/// `gate` on `target`, applied only where every control qubit is |1>.
struct GateApp {
  Gate gate;
  QubitIndex target = 0;
  std::vector<QubitIndex> controls;
  bool operator==(const GateApp &) const = default;
};

/// Measures `qubits` into one integer; qubits[0] is the most significant bit.
struct Measure {
  std::vector<QubitIndex> qubits;
  FutureId future = 0;
  bool operator==(const Measure &) const = default;
};

struct Dump {
  std::vector<QubitIndex> qubits;
  DumpId dump = 0;
  bool operator==(const Dump &) const = default;
};

/// `future == literal`. A literal wider than the measured register is legal
/// and simply never matches.
struct Condition {
  FutureId future = 0;
  std::uint64_t literal = 0;
  bool operator==(const Condition &) const = default;
};

/// Structured conditional. The body holds only GateApp and nested Branch.
struct Branch {
  Condition condition;
  std::vector<Instruction> body;
  bool operator==(const Branch &) const;
};

struct Instruction {
  std::variant<Alloc, GateApp, Measure, Dump, Branch> op;

  Instruction() = default;
  template <typename T>
    requires(!std::is_same_v<std::remove_cvref_t<T>, Instruction>)
  Instruction(T &&value) : op(std::forward<T>(value)) {}  // NOLINT

  bool operator==(const Instruction &) const = default;
};

inline bool Branch::operator==(const Branch &other) const {
  return condition == other.condition && body == other.body;
}

struct QuantumCode {
  std::uint32_t num_qubits = 0;
  std::uint32_t num_futures = 0;
  std::uint32_t num_dumps = 0;
  std::vector<Instruction> instructions;

  bool operator==(const QuantumCode &) const = default;
};

/// Checks every structural invariant of `code` and throws MalformedCode with
/// a description of the first violation found:
///  - num_qubits equals the total of all Alloc counts, and each instruction
///    only references qubits allocated before it;
///  - gate targets are not controls, controls and measured/dumped qubits are
///    pairwise distinct, angles are finite and absent on fixed gates;
///  - futures and dumps are declared exactly once each, ids in range;
///  - branch conditions name a future measured earlier; branch bodies hold
///    only gates and branches.
void validate(const QuantumCode &code);

/// Number of qubits measured into each future, indexed by future id.
/// Assumes `code` is valid.
std::vector<std::uint32_t> future_widths(const QuantumCode &code);

}  // namespace qloop
