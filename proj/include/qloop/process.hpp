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

// Process: the builder side of the classical/quantum loop.
//
// A process records gate, measure and dump requests into a QuantumCode
// program. Measure and dump hand back promises (FutureValue, DumpSnapshot);
// nothing runs until one of them is read. The first read ships the whole
// program to the executor in one piece, caches every result, and moves the
// process to Executed. From then on every builder call fails with
// ProcessTerminated, and all qubit handles of the process are invalid.
//
// Combinators are stream rewrites applied while recording:
//   ctrl  - adds control qubits to every gate recorded inside the scope;
//   adj   - buffers the gates recorded inside the scope and emits them
//           reversed and inverted when the scope closes;
//   around(outer, inner) - outer; inner; adj(outer);
//   branch - records gates that the engine applies only when a future
//           equals a literal. The caller never sees that value.
//
// Allocation, measurement and dumps are illegal inside ctrl, adj and branch
// scopes (ScopeViolation); a branch cannot be opened inside ctrl or adj.
//
// A process and its handles are single-threaded; distinct processes are
// independent.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qloop/code.hpp"
#include "qloop/engine.hpp"
#include "qloop/gate.hpp"

namespace qloop {

using ProcessId = std::uint64_t;

/// Runs a finished program. The default is the dense simulator.
using Executor = std::function<ExecutionResult(const QuantumCode &, std::uint64_t seed)>;

/// Reference to one qubit of one process. Validity is not stored here; it is
/// derived from the owning process (see Process::is_valid).
struct QubitHandle {
  ProcessId process_id = 0;
  QubitIndex index = 0;

  bool operator==(const QubitHandle &) const = default;
};

enum class ProcessState { Building, Executed };

namespace detail {
class ProcessCore;
}

/// Promise of a measurement result.
class FutureValue {
 public:
  ProcessId process_id() const;
  FutureId id() const { return id_; }

  /// Triggers execution of the owning process if it has not run yet.
  std::uint64_t value() const;
  /// The result if the process has already executed, without triggering.
  std::optional<std::uint64_t> cached() const;

 private:
  friend class Process;
  FutureValue(std::shared_ptr<detail::ProcessCore> core, FutureId id)
      : core_(std::move(core)), id_(id) {}

  std::shared_ptr<detail::ProcessCore> core_;
  FutureId id_;
};

/// Promise of a state snapshot; same execution rules as FutureValue.
class DumpSnapshot {
 public:
  ProcessId process_id() const;
  DumpId id() const { return id_; }

  const DumpData &data() const;
  bool ready() const;

 private:
  friend class Process;
  DumpSnapshot(std::shared_ptr<detail::ProcessCore> core, DumpId id)
      : core_(std::move(core)), id_(id) {}

  std::shared_ptr<detail::ProcessCore> core_;
  DumpId id_;
};

struct ProcessOptions {
  std::uint64_t seed = 0;
  /// Empty means the dense simulator.
  Executor executor;
  /// Re-run the IR validator after every top-level append. For tests.
  bool validate_each_append = false;
};

class Process {
 public:
  Process();
  explicit Process(ProcessOptions options);

  ProcessId id() const;
  ProcessState state() const;
  bool executed() const { return state() == ProcessState::Executed; }
  std::uint32_t num_qubits() const;
  const QuantumCode &code() const;
  std::uint64_t seed() const;

  /// True iff `q` was issued by this process and the process still builds.
  bool is_valid(QubitHandle q) const;

  std::vector<QubitHandle> alloc(std::uint32_t count);
  QubitHandle qubit() { return alloc(1).front(); }

  /// Records `g` on `target` under all open scopes; returns `target`.
  QubitHandle apply(const Gate &g, QubitHandle target);
  void apply_each(const Gate &g, const std::vector<QubitHandle> &targets);

  QubitHandle x(QubitHandle q) { return apply(Gate::x(), q); }
  QubitHandle y(QubitHandle q) { return apply(Gate::y(), q); }
  QubitHandle z(QubitHandle q) { return apply(Gate::z(), q); }
  QubitHandle h(QubitHandle q) { return apply(Gate::h(), q); }
  QubitHandle rx(double theta, QubitHandle q) { return apply(Gate::rx(theta), q); }
  QubitHandle ry(double theta, QubitHandle q) { return apply(Gate::ry(theta), q); }
  QubitHandle rz(double theta, QubitHandle q) { return apply(Gate::rz(theta), q); }
  QubitHandle phase(double lambda, QubitHandle q) {
    return apply(Gate::phase(lambda), q);
  }

  void ctrl_begin(const std::vector<QubitHandle> &controls);
  void ctrl_end();
  void adj_begin();
  void adj_end();
  /// Records `outer` now; around_end records adj(outer).
  void around_begin(std::function<void()> outer);
  void around_end();
  void branch_begin(const FutureValue &future, std::uint64_t equals);
  void branch_end();

  template <typename Body>
  void ctrl(const std::vector<QubitHandle> &controls, Body &&body) {
    ctrl_begin(controls);
    run_scoped(std::forward<Body>(body));
    ctrl_end();
  }

  template <typename Body>
  void adj(Body &&body) {
    adj_begin();
    run_scoped(std::forward<Body>(body));
    adj_end();
  }

  template <typename Inner>
  void around(std::function<void()> outer, Inner &&inner) {
    around_begin(std::move(outer));
    run_scoped(std::forward<Inner>(inner));
    around_end();
  }

  template <typename Body>
  void branch(const FutureValue &future, std::uint64_t equals, Body &&body) {
    branch_begin(future, equals);
    run_scoped(std::forward<Body>(body));
    branch_end();
  }

  FutureValue measure(const std::vector<QubitHandle> &qubits);
  FutureValue measure(QubitHandle q) { return measure(std::vector{q}); }
  DumpSnapshot dump(const std::vector<QubitHandle> &qubits);
  DumpSnapshot dump(QubitHandle q) { return dump(std::vector{q}); }

  /// Runs the program now (if it has not run) and returns every result.
  const ExecutionResult &execute();

  /// Number of open scopes of any kind.
  std::size_t scope_depth() const;

 private:
  // Closes every scope above `depth` without emitting what it buffered.
  void unwind_to(std::size_t depth);

  template <typename Body>
  void run_scoped(Body &&body) {
    const std::size_t depth = scope_depth();
    try {
      body();
    } catch (...) {
      unwind_to(depth > 0 ? depth - 1 : 0);
      throw;
    }
  }

  std::shared_ptr<detail::ProcessCore> core_;
};

}  // namespace qloop
