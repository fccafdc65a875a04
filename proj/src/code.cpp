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

#include "qloop/code.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "qloop/error.hpp"

namespace qloop {

namespace {

class Validator {
 public:
  explicit Validator(const QuantumCode &code)
      : code_(code),
        future_width_(code.num_futures),
        dump_seen_(code.num_dumps, false) {}

  void run() {
    for (std::size_t i = 0; i < code_.instructions.size(); ++i) {
      position_ = i;
      visit(code_.instructions[i], /*in_branch=*/false);
    }
    if (allocated_ != code_.num_qubits) {
      fail("num_qubits is " + std::to_string(code_.num_qubits) +
           " but instructions allocate " + std::to_string(allocated_));
    }
    for (FutureId f = 0; f < code_.num_futures; ++f) {
      if (!future_width_[f]) fail("future " + std::to_string(f) + " is never measured");
    }
    for (DumpId d = 0; d < code_.num_dumps; ++d) {
      if (!dump_seen_[d]) fail("dump " + std::to_string(d) + " is never produced");
    }
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw MalformedCode("instruction " + std::to_string(position_) + ": " + what);
  }

  void check_qubit(QubitIndex q) const {
    if (q >= allocated_) {
      fail("qubit index " + std::to_string(q) + " is not allocated (have " +
           std::to_string(allocated_) + ")");
    }
  }

  void check_distinct(const std::vector<QubitIndex> &qubits,
                      const char *what) const {
    std::unordered_set<QubitIndex> seen;
    for (QubitIndex q : qubits) {
      check_qubit(q);
      if (!seen.insert(q).second) {
        fail(std::string("duplicate qubit ") + std::to_string(q) + " in " + what);
      }
    }
  }

  void visit(const Instruction &inst, bool in_branch) {
    std::visit([&](const auto &op) { visit_op(op, in_branch); }, inst.op);
  }

  void visit_op(const Alloc &op, bool in_branch) {
    if (in_branch) fail("alloc inside a branch body");
    if (op.count == 0) fail("alloc of zero qubits");
    allocated_ += op.count;
  }

  void visit_op(const GateApp &op, bool) {
    check_qubit(op.target);
    check_distinct(op.controls, "control list");
    if (std::find(op.controls.begin(), op.controls.end(), op.target) !=
        op.controls.end()) {
      fail("target " + std::to_string(op.target) + " is also a control");
    }
    if (!std::isfinite(op.gate.angle)) fail("non-finite gate angle");
    if (!is_parametric(op.gate.kind) && op.gate.angle != 0.0) {
      fail("angle given for gate '" + std::string(gate_name(op.gate.kind)) + "'");
    }
  }

  void visit_op(const Measure &op, bool in_branch) {
    if (in_branch) fail("measure inside a branch body");
    if (op.qubits.empty()) fail("measure of an empty qubit list");
    if (op.qubits.size() > 63) fail("measure of more than 63 qubits");
    check_distinct(op.qubits, "measure");
    if (op.future >= code_.num_futures) {
      fail("future id " + std::to_string(op.future) + " out of range");
    }
    if (future_width_[op.future]) {
      fail("future " + std::to_string(op.future) + " measured twice");
    }
    future_width_[op.future] = static_cast<std::uint32_t>(op.qubits.size());
  }

  void visit_op(const Dump &op, bool in_branch) {
    if (in_branch) fail("dump inside a branch body");
    if (op.qubits.empty()) fail("dump of an empty qubit list");
    if (op.qubits.size() > 63) fail("dump of more than 63 qubits");
    check_distinct(op.qubits, "dump");
    if (op.dump >= code_.num_dumps) {
      fail("dump id " + std::to_string(op.dump) + " out of range");
    }
    if (dump_seen_[op.dump]) fail("dump " + std::to_string(op.dump) + " produced twice");
    dump_seen_[op.dump] = true;
  }

  void visit_op(const Branch &op, bool) {
    FutureId f = op.condition.future;
    if (f >= code_.num_futures || !future_width_[f]) {
      fail("branch on future " + std::to_string(f) +
           " that no earlier measure produces");
    }
    for (const Instruction &inner : op.body) visit(inner, /*in_branch=*/true);
  }

  const QuantumCode &code_;
  std::uint64_t allocated_ = 0;
  std::size_t position_ = 0;
  // Width of each future once its Measure has been seen, 0 before.
  std::vector<std::uint32_t> future_width_;
  std::vector<bool> dump_seen_;
};

}  // namespace

void validate(const QuantumCode &code) {
  // Each future and dump needs its own top-level instruction; reject absurd
  // counts before sizing the bookkeeping tables.
  if (code.num_futures > code.instructions.size() ||
      code.num_dumps > code.instructions.size()) {
    throw MalformedCode("declared future/dump count exceeds instruction count");
  }
  Validator(code).run();
}

std::vector<std::uint32_t> future_widths(const QuantumCode &code) {
  std::vector<std::uint32_t> widths(code.num_futures, 0);
  for (const Instruction &inst : code.instructions) {
    if (const auto *m = std::get_if<Measure>(&inst.op)) {
      if (m->future < widths.size()) {
        widths[m->future] = static_cast<std::uint32_t>(m->qubits.size());
      }
    }
  }
  return widths;
}

}  // namespace qloop
