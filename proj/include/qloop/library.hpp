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

// Derived gates and routines. Everything here goes through the Process
// builder API only, so the routines compose with ctrl/adj/around like any
// primitive gate.

#pragma once

#include <functional>
#include <vector>

#include "qloop/process.hpp"

namespace qloop::lib {

/// X on `target` controlled by `control`. Returns `target`.
QubitHandle cnot(Process &p, QubitHandle control, QubitHandle target);

/// Three CNOTs.
void swap(Process &p, QubitHandle a, QubitHandle b);

/// H(a); cnot(a, b). On |00> this is (|00> + |11>)/sqrt(2).
void bell(Process &p, QubitHandle a, QubitHandle b);

/// Quantum Fourier transform, qubits[0] most significant. With `do_swaps`
/// the unitary is the DFT matrix F[j][k] = exp(2 pi i j k / N) / sqrt(N);
/// without, the output register comes out bit-reversed.
void qft(Process &p, const std::vector<QubitHandle> &qubits, bool do_swaps = true);

/// Grover diffusion: around(H then X on every qubit, ctrl(s[1:]) Z(s[0])).
/// Equals 2|u><u| - I up to a global phase of -1. Needs at least 2 qubits.
void grover_diffusor(Process &p, const std::vector<QubitHandle> &qubits);

/// Prepares the message qubit handed to it.
using Preparation = std::function<void(Process &, QubitHandle)>;

/// Teleports a prepared qubit: allocates (message, alice, bob), runs
/// `prepare` on message, shares a Bell pair between alice and bob,
/// disentangles message and alice with adj(bell), measures them, and
/// corrects bob with X / Z branches on the two results. Returns a dump of
/// bob's qubit.
DumpSnapshot teleport(Process &p, const Preparation &prepare);

}  // namespace qloop::lib
