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

#include "qloop/library.hpp"

#include <cmath>
#include <numbers>

#include "qloop/error.hpp"

namespace qloop::lib {

QubitHandle cnot(Process &p, QubitHandle control, QubitHandle target) {
  p.ctrl({control}, [&] { p.x(target); });
  return target;
}

void swap(Process &p, QubitHandle a, QubitHandle b) {
  cnot(p, a, b);
  cnot(p, b, a);
  cnot(p, a, b);
}

void bell(Process &p, QubitHandle a, QubitHandle b) {
  p.h(a);
  cnot(p, a, b);
}

void qft(Process &p, const std::vector<QubitHandle> &qubits, bool do_swaps) {
  if (qubits.empty()) throw BadArgument("qft needs at least one qubit");
  const std::size_t n = qubits.size();
  for (std::size_t i = 0; i < n; ++i) {
    p.h(qubits[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i));
      p.ctrl({qubits[j]}, [&] { p.phase(angle, qubits[i]); });
    }
  }
  if (do_swaps) {
    for (std::size_t i = 0; i < n / 2; ++i) swap(p, qubits[i], qubits[n - 1 - i]);
  }
}

void grover_diffusor(Process &p, const std::vector<QubitHandle> &qubits) {
  if (qubits.size() < 2) throw BadArgument("grover_diffusor needs at least two qubits");
  const std::vector<QubitHandle> rest(qubits.begin() + 1, qubits.end());
  p.around(
      [&] {
        p.apply_each(Gate::h(), qubits);
        p.apply_each(Gate::x(), qubits);
      },
      [&] { p.ctrl(rest, [&] { p.z(qubits.front()); }); });
}

DumpSnapshot teleport(Process &p, const Preparation &prepare) {
  const auto q = p.alloc(3);
  const QubitHandle message = q[0], alice = q[1], bob = q[2];

  if (prepare) prepare(p, message);
  bell(p, alice, bob);

  p.adj([&] { bell(p, message, alice); });
  const FutureValue m0 = p.measure(alice);
  const FutureValue m1 = p.measure(message);

  p.branch(m0, 1, [&] { p.x(bob); });
  p.branch(m1, 1, [&] { p.z(bob); });
  return p.dump(bob);
}

}  // namespace qloop::lib
