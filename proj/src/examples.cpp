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

#include "qloop/examples.hpp"

#include <numbers>

#include "qloop/library.hpp"

namespace qloop {

namespace {

using std::numbers::pi;

void build_bell(Process &p) {
  const auto q = p.alloc(2);
  lib::bell(p, q[0], q[1]);
  p.dump(q);
  p.measure(q);
}

void build_bell_mea(Process &p) {
  const auto q = p.alloc(2);
  lib::cnot(p, p.h(q[0]), q[1]);
  p.measure(q[0]);
  p.measure(q[1]);
}

void build_ctrlh(Process &p) {
  const auto q = p.alloc(2);
  p.ctrl({p.ry(pi / 2, q[0])}, [&] { p.h(q[1]); });
  p.dump(q);
}

void build_ctrlbell(Process &p) {
  const auto q = p.alloc(3);
  p.ctrl({p.h(q[0])}, [&] { lib::bell(p, q[1], q[2]); });
  p.dump(q);
}

void build_around_bell(Process &p) {
  const auto q = p.alloc(2);
  p.around([&] { lib::bell(p, q[0], q[1]); }, [&] { p.x(q[0]); });
  p.dump(q);
}

void build_teleport(Process &p) {
  lib::teleport(p, [](Process &proc, QubitHandle message) {
    proc.phase(pi / 4, proc.h(message));
  });
  const QubitHandle bob{p.id(), p.num_qubits() - 1};
  p.measure(bob);
}

void build_qft_demo(Process &p) {
  const auto q = p.alloc(3);
  p.x(q[0]);
  p.x(q[2]);
  lib::qft(p, q);
  p.dump(q);
  p.measure(q);
}

void build_grover_demo(Process &p) {
  const auto q = p.alloc(2);
  p.apply_each(Gate::h(), q);
  // Phase-flip |11>.
  p.ctrl({q[0]}, [&] { p.z(q[1]); });
  lib::grover_diffusor(p, q);
  p.dump(q);
  p.measure(q);
}

void build_x_gate(Process &p) {
  const QubitHandle q = p.qubit();
  p.x(q);
  p.dump(q);
}

void build_hadamard(Process &p) {
  const QubitHandle q = p.qubit();
  p.h(q);
  p.dump(q);
}

}  // namespace

const std::vector<Example> &examples() {
  static const std::vector<Example> registry = {
      {"bell", "H and CNOT on two qubits; dump, then measure both", build_bell},
      {"bell-mea", "Bell pair measured one qubit at a time", build_bell_mea},
      {"ctrlh", "RY(pi/2) on a, then H on b controlled by a", build_ctrlh},
      {"ctrlbell", "Bell preparation controlled by a qubit in superposition",
       build_ctrlbell},
      {"around-bell", "X on a between bell and adj(bell)", build_around_bell},
      {"teleport", "teleport phase(pi/4) H|0> to Bob, dump and measure Bob",
       build_teleport},
      {"qft-demo", "QFT of |101> on three qubits", build_qft_demo},
      {"grover-diffusor-demo", "one Grover iteration on two qubits marking |11>",
       build_grover_demo},
      {"x-gate", "X on |0>", build_x_gate},
      {"hadamard", "H on |0>", build_hadamard},
  };
  return registry;
}

const Example *find_example(std::string_view name) {
  for (const Example &e : examples()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace qloop
