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

#include "qloop/engine.hpp"

#include <cmath>
#include <string>

#include "qloop/error.hpp"

namespace qloop {

void Engine::run(const QuantumCode &code) {
  validate(code);
  if (code.num_qubits > kMaxQubits) {
    throw EngineFailure("program needs " + std::to_string(code.num_qubits) +
                        " qubits, the dense engine stops at " +
                        std::to_string(kMaxQubits));
  }
  state_ = StateVector();
  result_ = {};
  for (const Instruction &inst : code.instructions) {
    step(inst);
    check_norm();
  }
}

void Engine::step(const Instruction &inst) {
  if (const auto *alloc = std::get_if<Alloc>(&inst.op)) {
    state_.extend(alloc->count);
  } else if (const auto *app = std::get_if<GateApp>(&inst.op)) {
    apply_kernel(state_, gate_matrix(app->gate), app->target, app->controls);
  } else if (const auto *m = std::get_if<Measure>(&inst.op)) {
    result_.futures[m->future] = measure_kernel(state_, m->qubits, rng_);
  } else if (const auto *d = std::get_if<Dump>(&inst.op)) {
    result_.dumps[d->dump] = extract_dump(state_, d->qubits);
  } else if (const auto *b = std::get_if<Branch>(&inst.op)) {
    // Validation guarantees the future was recorded earlier.
    if (result_.futures.at(b->condition.future) == b->condition.literal) {
      for (const Instruction &inner : b->body) step(inner);
    }
  }
}

void Engine::check_norm() const {
  const double norm = state_.norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw EngineFailure("state norm drifted to " + std::to_string(norm));
  }
}

ExecutionResult execute(const QuantumCode &code, std::uint64_t seed) {
  Engine engine(seed);
  engine.run(code);
  return engine.take_result();
}

}  // namespace qloop
