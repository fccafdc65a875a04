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

#include <optional>
#include <string_view>

namespace qloop {

enum class GateKind { PauliX, PauliY, PauliZ, Hadamard, RX, RY, RZ, Phase };

/// True for the kinds that carry an angle (RX, RY, RZ, Phase).
constexpr bool is_parametric(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY ||
         kind == GateKind::RZ || kind == GateKind::Phase;
}

/// A single-qubit gate. `angle` is in radians and is always 0 for the
/// non-parametric kinds, so that structural equality is meaningful.
struct Gate {
  GateKind kind = GateKind::PauliX;
  double angle = 0.0;

  static Gate x() { return {GateKind::PauliX, 0.0}; }
  static Gate y() { return {GateKind::PauliY, 0.0}; }
  static Gate z() { return {GateKind::PauliZ, 0.0}; }
  static Gate h() { return {GateKind::Hadamard, 0.0}; }
  static Gate rx(double theta);
  static Gate ry(double theta);
  static Gate rz(double theta);
  static Gate phase(double lambda);

  bool operator==(const Gate &) const = default;
};

/// Adjoint of `g`. Paulis and H are self-inverse; rotations and Phase negate
/// their angle, so inverse(inverse(g)) == g bit for bit.
Gate inverse(const Gate &g);

/// Lower-case wire name ("x", "h", "rz", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

}  // namespace qloop
