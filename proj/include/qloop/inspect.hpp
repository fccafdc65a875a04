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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qloop/state_vector.hpp"

namespace qloop::inspect {

enum class GroupBase { Binary, UnsignedInt };

struct FormatGroup {
  GroupBase base = GroupBase::Binary;
  std::uint32_t length = 0;
  bool operator==(const FormatGroup &) const = default;
};

/// Ket layout for show(). No groups means one binary group over all qubits.
struct FormatSpec {
  std::vector<FormatGroup> groups;
  bool operator==(const FormatSpec &) const = default;
};

/// Parses "b2:i1"-style specs: ':'-separated tokens, each 'b' (binary) or
/// 'i' (unsigned integer) followed by a positive qubit count. "" is the
/// default layout. Throws BadFormat.
FormatSpec parse_format(std::string_view spec);

struct SqrtFraction {
  bool negative = false;
  std::uint32_t numerator = 0;    // a
  std::uint64_t denominator = 0;  // b
  bool operator==(const SqrtFraction &) const = default;
};

inline constexpr std::uint32_t kMaxNumerator = 32;
inline constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 20;
inline constexpr double kRecognizeTolerance = 1e-9;

/// Matches a real amplitude against +-a/sqrt(b), 1 <= a <= 32,
/// 1 <= b <= 2^20, reporting the smallest b. Nothing for non-real input.
std::optional<SqrtFraction> recognize_sqrt_fraction(Amplitude amplitude);

/// Two lines per basis state, ascending:
///
///   |00⟩ (50.00%)
///    0.707107<TAB>≅<TAB>1/√2
///
/// Binary groups are zero-padded to their length, integer groups are
/// decimal. A " + I.IIIIIIi" / " - I.IIIIIIi" term follows the real part
/// when the imaginary part exceeds 1e-9; the ≅ annotation only appears for
/// recognized real amplitudes. Throws BadFormat if the spec does not cover
/// the dump's qubit count.
std::string show(const DumpData &dump, const FormatSpec &spec = {});

struct BlochCoords {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Coordinates of a one-qubit dump; WrongArity otherwise.
BlochCoords bloch_coords(const DumpData &dump);

/// "x=0.000000 y=0.000000 z=-1.000000"
std::string format_bloch(const BlochCoords &c);

/// Static SVG of the sphere (outline, equator, axes) with the state vector
/// drawn in an oblique projection.
std::string bloch_svg(const BlochCoords &c);

}  // namespace qloop::inspect
