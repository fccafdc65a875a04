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

#include "qloop/gate.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qloop/error.hpp"

namespace qloop {

namespace {

Gate make_parametric(GateKind kind, double angle) {
  if (!std::isfinite(angle)) {
    throw BadArgument("gate angle must be finite, got " +
                      std::to_string(angle));
  }
  return {kind, angle};
}

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kNames{{
    {GateKind::PauliX, "x"},
    {GateKind::PauliY, "y"},
    {GateKind::PauliZ, "z"},
    {GateKind::Hadamard, "h"},
    {GateKind::RX, "rx"},
    {GateKind::RY, "ry"},
    {GateKind::RZ, "rz"},
    {GateKind::Phase, "phase"},
}};

}  // namespace

Gate Gate::rx(double theta) { return make_parametric(GateKind::RX, theta); }
Gate Gate::ry(double theta) { return make_parametric(GateKind::RY, theta); }
Gate Gate::rz(double theta) { return make_parametric(GateKind::RZ, theta); }
Gate Gate::phase(double lambda) {
  return make_parametric(GateKind::Phase, lambda);
}

Gate inverse(const Gate &g) {
  if (is_parametric(g.kind)) {
    return {g.kind, -g.angle};
  }
  return g;
}

std::string_view gate_name(GateKind kind) {
  for (const auto &[k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto &[k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace qloop
