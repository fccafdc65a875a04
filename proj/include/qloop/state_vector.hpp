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

// Dense state vector and the kernels that act on it.
//
// Qubit i of an n-qubit register occupies bit (n - 1 - i) of the basis index,
// so qubit 0 is the leftmost symbol of a ket: |10> means qubit 0 is 1.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qloop/code.hpp"
#include "qloop/gate.hpp"
#include "qloop/rng.hpp"

namespace qloop {

using Amplitude = std::complex<double>;

class StateVector {
 public:
  /// Zero qubits: the one-dimensional state with amplitude 1.
  StateVector() : amps_{Amplitude{1.0, 0.0}} {}

  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(std::uint32_t num_qubits);

  /// Takes ownership of raw amplitudes. The length must be a power of two;
  /// normalization is the caller's business.
  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  Amplitude operator[](std::uint64_t basis) const { return amps_[basis]; }

  double norm_squared() const;

  /// Tensor `extra` fresh |0> qubits onto the end of the register. Existing
  /// qubit indices keep their meaning.
  void extend(std::uint32_t extra);

  /// Basis-index bit mask of qubit `q`.
  std::uint64_t mask_of(QubitIndex q) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - q);
  }

 private:
  std::uint32_t num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// Row-major 2x2 matrix: {m00, m01, m10, m11}.
struct GateMatrix {
  std::array<Amplitude, 4> m{};

  Amplitude operator()(int row, int col) const { return m[2 * row + col]; }
  bool operator==(const GateMatrix &) const = default;
};

/// Conventions:
///   X = [[0,1],[1,0]]   Y = [[0,-i],[i,0]]   Z = diag(1,-1)
///   H = [[1,1],[1,-1]]/sqrt(2)
///   RX(t) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]]
///   RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
///   RZ(t) = diag(e^{-it/2}, e^{it/2})
///   Phase(l) = diag(1, e^{il})
GateMatrix gate_matrix(const Gate &g);

GateMatrix conjugate_transpose(const GateMatrix &m);
GateMatrix multiply(const GateMatrix &a, const GateMatrix &b);

/// Applies `m` to `target` on the subspace where every control is |1>.
/// Throws IndexOutOfRange or IndexOverlap on bad indices.
void apply_kernel(StateVector &state, const GateMatrix &m, QubitIndex target,
                  std::span<const QubitIndex> controls);

/// Samples an outcome of measuring `qubits` (qubits[0] is the most
/// significant bit of the outcome) with one uniform draw from `rng` against
/// the cumulative distribution in ascending outcome order, then collapses
/// `state` onto it. Throws DegenerateState when the total probability is
/// below 1e-12.
std::uint64_t measure_kernel(StateVector &state, std::span<const QubitIndex> qubits,
                             Xoshiro256 &rng);

/// Probability of each outcome of measuring `qubits`, without collapse.
std::vector<double> outcome_probabilities(const StateVector &state,
                                          std::span<const QubitIndex> qubits);

struct BasisAmplitude {
  std::uint64_t basis = 0;
  Amplitude amplitude;
  bool operator==(const BasisAmplitude &) const = default;
};

/// Pure state of a subset of qubits, as reported by a dump.
struct DumpData {
  std::vector<QubitIndex> qubits;
  /// Nonzero amplitudes, ascending by basis. Basis bits follow `qubits`
  /// order, first qubit most significant.
  std::vector<BasisAmplitude> basis_states;

  /// Amplitude of `basis`, zero when absent.
  Amplitude amplitude(std::uint64_t basis) const;
  bool operator==(const DumpData &) const = default;
};

/// Amplitudes with modulus at or below this are reported as absent.
inline constexpr double kDumpZero = 1e-10;
/// Tolerance on the component of a group vector orthogonal to the reference.
inline constexpr double kSeparabilityTolerance = 1e-9;

/// Standalone state of `qubits`. The full register is split into groups by
/// the values of the unselected qubits; every nonzero group must be parallel
/// to the others, otherwise the selection is entangled with the rest and
/// EntangledSelection is thrown. The returned vector is normalized with the
/// global phase chosen so that the first nonzero amplitude is real and
/// positive.
DumpData extract_dump(const StateVector &state, std::span<const QubitIndex> qubits);

}  // namespace qloop
