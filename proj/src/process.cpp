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

#include "qloop/process.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>

#include "qloop/error.hpp"

namespace qloop {

namespace detail {

namespace {

std::atomic<ProcessId> next_process_id{1};

enum class FrameKind { Ctrl, Adj, Around, Branch };

const char *frame_name(FrameKind kind) {
  switch (kind) {
    case FrameKind::Ctrl: return "ctrl";
    case FrameKind::Adj: return "adj";
    case FrameKind::Around: return "around";
    case FrameKind::Branch: return "branch";
  }
  return "?";
}

struct Frame {
  FrameKind kind;
  std::vector<QubitIndex> controls;   // Ctrl
  std::vector<Instruction> buffer;    // Adj, Branch
  Condition condition;                // Branch
  std::function<void()> outer;        // Around
};

}  // namespace

class ProcessCore {
 public:
  explicit ProcessCore(ProcessOptions options)
      : id(next_process_id.fetch_add(1)), options(std::move(options)) {
    if (!this->options.executor) {
      this->options.executor = [](const QuantumCode &code, std::uint64_t seed) {
        return qloop::execute(code, seed);
      };
    }
  }

  void require_building(const char *operation) const {
    if (state == ProcessState::Executed) {
      throw ProcessTerminated(std::string(operation) + " on process " +
                              std::to_string(id) + " after its quantum execution");
    }
  }

  QubitIndex resolve(QubitHandle q) const {
    if (q.process_id != id) {
      throw InvalidHandle("qubit belongs to process " + std::to_string(q.process_id) +
                          ", not " + std::to_string(id));
    }
    if (q.index >= code.num_qubits) {
      throw InvalidHandle("qubit index " + std::to_string(q.index) + " not allocated");
    }
    return q.index;
  }

  bool has_open(FrameKind kind) const {
    return std::any_of(stack.begin(), stack.end(),
                       [kind](const Frame &f) { return f.kind == kind; });
  }

  // Alloc, measure and dump need a bare stream.
  void require_no_quantum_scope(const char *operation) const {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (it->kind != FrameKind::Around) {
        throw ScopeViolation(std::string(operation) + " inside an open " +
                             frame_name(it->kind) + " scope");
      }
    }
  }

  bool is_control(QubitIndex q) const {
    for (const Frame &f : stack) {
      if (f.kind == FrameKind::Ctrl &&
          std::find(f.controls.begin(), f.controls.end(), q) != f.controls.end()) {
        return true;
      }
    }
    return false;
  }

  std::vector<Instruction> &sink() {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (it->kind == FrameKind::Adj || it->kind == FrameKind::Branch) {
        return it->buffer;
      }
    }
    return code.instructions;
  }

  void emit(Instruction inst) {
    auto &out = sink();
    out.push_back(std::move(inst));
    if (options.validate_each_append && &out == &code.instructions) validate(code);
  }

  void emit_gate(const Gate &g, QubitIndex target) {
    GateApp app{g, target, {}};
    for (const Frame &f : stack) {
      if (f.kind == FrameKind::Ctrl) {
        app.controls.insert(app.controls.end(), f.controls.begin(), f.controls.end());
      }
    }
    emit(std::move(app));
  }

  Frame pop(FrameKind expected, const char *operation) {
    if (stack.empty()) {
      throw ScopeUnderflow(std::string(operation) + " without an open " +
                           frame_name(expected) + " scope");
    }
    if (stack.back().kind != expected) {
      throw ScopeUnderflow(std::string(operation) + " while the innermost open scope is " +
                           frame_name(stack.back().kind));
    }
    Frame top = std::move(stack.back());
    stack.pop_back();
    return top;
  }

  const ExecutionResult &ensure_executed() {
    if (state == ProcessState::Executed) {
      if (failure) std::rethrow_exception(failure);
      return result;
    }
    if (!stack.empty()) {
      throw ScopeViolation(std::string("execution requested inside an open ") +
                           frame_name(stack.back().kind) + " scope");
    }
    // Handles die with the transition, whether or not the engine succeeds.
    state = ProcessState::Executed;
    try {
      result = options.executor(code, options.seed);
      for (FutureId f = 0; f < code.num_futures; ++f) {
        if (!result.futures.contains(f)) {
          throw EngineFailure("executor returned no value for future " + std::to_string(f));
        }
      }
      for (DumpId d = 0; d < code.num_dumps; ++d) {
        if (!result.dumps.contains(d)) {
          throw EngineFailure("executor returned no data for dump " + std::to_string(d));
        }
      }
    } catch (...) {
      failure = std::current_exception();
      throw;
    }
    return result;
  }

  const ProcessId id;
  ProcessOptions options;
  QuantumCode code;
  std::vector<Frame> stack;
  ProcessState state = ProcessState::Building;
  ExecutionResult result;
  std::exception_ptr failure;
};

}  // namespace detail

using detail::FrameKind;

ProcessId FutureValue::process_id() const { return core_->id; }

std::uint64_t FutureValue::value() const {
  return core_->ensure_executed().futures.at(id_);
}

std::optional<std::uint64_t> FutureValue::cached() const {
  if (core_->state != ProcessState::Executed || core_->failure) return std::nullopt;
  return core_->result.futures.at(id_);
}

ProcessId DumpSnapshot::process_id() const { return core_->id; }

const DumpData &DumpSnapshot::data() const {
  return core_->ensure_executed().dumps.at(id_);
}

bool DumpSnapshot::ready() const {
  return core_->state == ProcessState::Executed && !core_->failure;
}

Process::Process() : Process(ProcessOptions{}) {}

Process::Process(ProcessOptions options)
    : core_(std::make_shared<detail::ProcessCore>(std::move(options))) {}

ProcessId Process::id() const { return core_->id; }
ProcessState Process::state() const { return core_->state; }
std::uint32_t Process::num_qubits() const { return core_->code.num_qubits; }
const QuantumCode &Process::code() const { return core_->code; }
std::uint64_t Process::seed() const { return core_->options.seed; }
std::size_t Process::scope_depth() const { return core_->stack.size(); }

bool Process::is_valid(QubitHandle q) const {
  return core_->state == ProcessState::Building && q.process_id == core_->id &&
         q.index < core_->code.num_qubits;
}

std::vector<QubitHandle> Process::alloc(std::uint32_t count) {
  auto &core = *core_;
  core.require_building("alloc");
  core.require_no_quantum_scope("alloc");
  if (count == 0) throw BadArgument("alloc needs at least one qubit");
  std::vector<QubitHandle> handles;
  handles.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    handles.push_back({core.id, core.code.num_qubits + i});
  }
  core.code.num_qubits += count;
  core.emit(Alloc{count});
  return handles;
}

QubitHandle Process::apply(const Gate &g, QubitHandle target) {
  auto &core = *core_;
  core.require_building("gate");
  const QubitIndex t = core.resolve(target);
  if (core.is_control(t)) {
    throw ControlTargetOverlap("qubit " + std::to_string(t) +
                               " is a control of an open ctrl scope");
  }
  core.emit_gate(g, t);
  return target;
}

void Process::apply_each(const Gate &g, const std::vector<QubitHandle> &targets) {
  for (QubitHandle q : targets) apply(g, q);
}

void Process::ctrl_begin(const std::vector<QubitHandle> &controls) {
  auto &core = *core_;
  core.require_building("ctrl");
  detail::Frame frame{FrameKind::Ctrl, {}, {}, {}, {}};
  for (QubitHandle c : controls) {
    const QubitIndex q = core.resolve(c);
    if (core.is_control(q) ||
        std::find(frame.controls.begin(), frame.controls.end(), q) != frame.controls.end()) {
      throw DuplicateControl("qubit " + std::to_string(q) + " is already a control");
    }
    frame.controls.push_back(q);
  }
  core.stack.push_back(std::move(frame));
}

void Process::ctrl_end() {
  core_->require_building("ctrl_end");
  core_->pop(FrameKind::Ctrl, "ctrl_end");
}

void Process::adj_begin() {
  core_->require_building("adj");
  core_->stack.push_back({FrameKind::Adj, {}, {}, {}, {}});
}

void Process::adj_end() {
  auto &core = *core_;
  core.require_building("adj_end");
  detail::Frame frame = core.pop(FrameKind::Adj, "adj_end");
  // Branches cannot be opened inside adj, so the buffer holds only gates.
  for (auto it = frame.buffer.rbegin(); it != frame.buffer.rend(); ++it) {
    GateApp app = std::get<GateApp>(it->op);
    app.gate = inverse(app.gate);
    core.emit(std::move(app));
  }
}

void Process::around_begin(std::function<void()> outer) {
  core_->require_building("around");
  if (!outer) throw BadArgument("around needs an outer routine");
  core_->stack.push_back({FrameKind::Around, {}, {}, {}, outer});
  const std::size_t depth = scope_depth();
  try {
    outer();
  } catch (...) {
    unwind_to(depth - 1);
    throw;
  }
}

void Process::around_end() {
  core_->require_building("around_end");
  detail::Frame frame = core_->pop(FrameKind::Around, "around_end");
  adj(frame.outer);
}

void Process::branch_begin(const FutureValue &future, std::uint64_t equals) {
  auto &core = *core_;
  core.require_building("branch");
  if (core.has_open(FrameKind::Ctrl) || core.has_open(FrameKind::Adj)) {
    throw ScopeViolation("branch inside an open ctrl or adj scope");
  }
  if (future.process_id() != core.id || future.id() >= core.code.num_futures) {
    throw UnknownFuture("future " + std::to_string(future.id()) + " of process " +
                        std::to_string(future.process_id()) +
                        " was not measured earlier in process " + std::to_string(core.id));
  }
  core.stack.push_back({FrameKind::Branch, {}, {}, Condition{future.id(), equals}, {}});
}

void Process::branch_end() {
  auto &core = *core_;
  core.require_building("branch_end");
  detail::Frame frame = core.pop(FrameKind::Branch, "branch_end");
  core.emit(Branch{frame.condition, std::move(frame.buffer)});
}

FutureValue Process::measure(const std::vector<QubitHandle> &qubits) {
  auto &core = *core_;
  core.require_building("measure");
  core.require_no_quantum_scope("measure");
  Measure m;
  for (QubitHandle q : qubits) {
    const QubitIndex i = core.resolve(q);
    if (std::find(m.qubits.begin(), m.qubits.end(), i) != m.qubits.end()) {
      throw InvalidHandle("qubit " + std::to_string(i) + " measured twice in one call");
    }
    m.qubits.push_back(i);
  }
  if (m.qubits.empty()) throw BadArgument("measure of an empty qubit list");
  if (m.qubits.size() > 63) throw BadArgument("measure of more than 63 qubits");
  m.future = core.code.num_futures++;
  const FutureId id = m.future;
  core.emit(std::move(m));
  return FutureValue(core_, id);
}

DumpSnapshot Process::dump(const std::vector<QubitHandle> &qubits) {
  auto &core = *core_;
  core.require_building("dump");
  core.require_no_quantum_scope("dump");
  Dump d;
  for (QubitHandle q : qubits) {
    const QubitIndex i = core.resolve(q);
    if (std::find(d.qubits.begin(), d.qubits.end(), i) != d.qubits.end()) {
      throw InvalidHandle("qubit " + std::to_string(i) + " dumped twice in one call");
    }
    d.qubits.push_back(i);
  }
  if (d.qubits.empty()) throw BadArgument("dump of an empty qubit list");
  if (d.qubits.size() > 63) throw BadArgument("dump of more than 63 qubits");
  d.dump = core.code.num_dumps++;
  const DumpId id = d.dump;
  core.emit(std::move(d));
  return DumpSnapshot(core_, id);
}

const ExecutionResult &Process::execute() { return core_->ensure_executed(); }

void Process::unwind_to(std::size_t depth) {
  auto &stack = core_->stack;
  if (stack.size() > depth) stack.resize(depth);
}

}  // namespace qloop
