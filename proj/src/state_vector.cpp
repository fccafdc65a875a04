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

#include "qloop/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qloop/error.hpp"

namespace qloop {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_indices(const StateVector &state, std::span<const QubitIndex> qubits,
                   const char *what) {
  std::uint64_t seen = 0;
  for (QubitIndex q : qubits) {
    if (q >= state.num_qubits()) {
      throw IndexOutOfRange(std::string(what) + ": qubit " + std::to_string(q) +
                            " on a " + std::to_string(state.num_qubits()) +
                            "-qubit state");
    }
    if (seen & state.mask_of(q)) {
      throw IndexOverlap(std::string(what) + ": qubit " + std::to_string(q) +
                         " listed twice");
    }
    seen |= state.mask_of(q);
  }
}

// Basis-index offset of each k-bit outcome of `qubits` (qubits[0] = MSB).
std::vector<std::uint64_t> outcome_offsets(const StateVector &state,
                                           std::span<const QubitIndex> qubits) {
  const std::size_t k = qubits.size();
  std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t outcome = 0; outcome < offsets.size(); ++outcome) {
    std::uint64_t offset = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((outcome >> (k - 1 - j)) & 1U) offset |= state.mask_of(qubits[j]);
    }
    offsets[outcome] = offset;
  }
  return offsets;
}

std::uint64_t outcome_of(const StateVector &state, std::uint64_t basis,
                         std::span<const QubitIndex> qubits) {
  std::uint64_t outcome = 0;
  for (QubitIndex q : qubits) {
    outcome = (outcome << 1) | ((basis & state.mask_of(q)) ? 1U : 0U);
  }
  return outcome;
}

}  // namespace

StateVector::StateVector(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  if (amps.empty() || !std::has_single_bit(amps.size())) {
    throw BadArgument("state vector length " + std::to_string(amps.size()) +
                      " is not a power of two");
  }
  StateVector out;
  out.num_qubits_ = static_cast<std::uint32_t>(std::countr_zero(amps.size()));
  out.amps_ = std::move(amps);
  return out;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude &a : amps_) total += std::norm(a);
  return total;
}

void StateVector::extend(std::uint32_t extra) {
  if (extra == 0) return;
  std::vector<Amplitude> grown(amps_.size() << extra);
  for (std::size_t i = 0; i < amps_.size(); ++i) grown[i << extra] = amps_[i];
  amps_ = std::move(grown);
  num_qubits_ += extra;
}

GateMatrix gate_matrix(const Gate &g) {
  using std::numbers::sqrt2;
  const double half = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::PauliX:
      return {{0.0, 1.0, 1.0, 0.0}};
    case GateKind::PauliY:
      return {{0.0, -kI, kI, 0.0}};
    case GateKind::PauliZ:
      return {{1.0, 0.0, 0.0, -1.0}};
    case GateKind::Hadamard:
      return {{1.0 / sqrt2, 1.0 / sqrt2, 1.0 / sqrt2, -1.0 / sqrt2}};
    case GateKind::RX:
      return {{std::cos(half), -kI * std::sin(half), -kI * std::sin(half),
               std::cos(half)}};
    case GateKind::RY:
      return {{std::cos(half), -std::sin(half), std::sin(half), std::cos(half)}};
    case GateKind::RZ:
      return {{std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)}};
    case GateKind::Phase:
      return {{1.0, 0.0, 0.0, std::polar(1.0, g.angle)}};
  }
  return {};
}

GateMatrix conjugate_transpose(const GateMatrix &m) {
  return {{std::conj(m.m[0]), std::conj(m.m[2]), std::conj(m.m[1]),
           std::conj(m.m[3])}};
}

GateMatrix multiply(const GateMatrix &a, const GateMatrix &b) {
  GateMatrix out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.m[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

void apply_kernel(StateVector &state, const GateMatrix &m, QubitIndex target,
                  std::span<const QubitIndex> controls) {
  const QubitIndex target_list[] = {target};
  check_indices(state, target_list, "gate target");
  check_indices(state, controls, "gate controls");
  std::uint64_t control_mask = 0;
  for (QubitIndex c : controls) control_mask |= state.mask_of(c);
  const std::uint64_t target_mask = state.mask_of(target);
  if (control_mask & target_mask) {
    throw IndexOverlap("qubit " + std::to_string(target) +
                       " is both target and control");
  }

  auto amps = state.amplitudes();
  const std::uint64_t low_mask = target_mask - 1;
  const std::uint64_t pairs = amps.size() / 2;
  const Amplitude m00 = m.m[0], m01 = m.m[1], m10 = m.m[2], m11 = m.m[3];
  for (std::uint64_t j = 0; j < pairs; ++j) {
    // Insert a zero at the target bit position.
    const std::uint64_t k0 = ((j & ~low_mask) << 1) | (j & low_mask);
    if ((k0 & control_mask) != control_mask) continue;
    const std::uint64_t k1 = k0 | target_mask;
    const Amplitude a0 = amps[k0];
    const Amplitude a1 = amps[k1];
    amps[k0] = m00 * a0 + m01 * a1;
    amps[k1] = m10 * a0 + m11 * a1;
  }
}

std::vector<double> outcome_probabilities(const StateVector &state,
                                          std::span<const QubitIndex> qubits) {
  check_indices(state, qubits, "measure");
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    probs[outcome_of(state, i, qubits)] += std::norm(amps[i]);
  }
  return probs;
}

std::uint64_t measure_kernel(StateVector &state, std::span<const QubitIndex> qubits,
                             Xoshiro256 &rng) {
  const std::vector<double> probs = outcome_probabilities(state, qubits);
  double total = 0.0;
  for (double p : probs) total += p;
  if (total < 1e-12) {
    throw DegenerateState("total probability " + std::to_string(total));
  }

  const double draw = rng.uniform() * total;
  std::uint64_t outcome = probs.size();
  double cumulative = 0.0;
  std::uint64_t last_possible = 0;
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= 0.0) continue;
    last_possible = o;
    cumulative += probs[o];
    if (draw < cumulative) {
      outcome = o;
      break;
    }
  }
  // Rounding can leave draw == cumulative at the very end.
  if (outcome == probs.size()) outcome = last_possible;

  const double scale = 1.0 / std::sqrt(probs[outcome]);
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (outcome_of(state, i, qubits) == outcome) {
      amps[i] *= scale;
    } else {
      amps[i] = 0.0;
    }
  }
  return outcome;
}

Amplitude DumpData::amplitude(std::uint64_t basis) const {
  auto it = std::lower_bound(
      basis_states.begin(), basis_states.end(), basis,
      [](const BasisAmplitude &entry, std::uint64_t b) { return entry.basis < b; });
  if (it != basis_states.end() && it->basis == basis) return it->amplitude;
  return 0.0;
}

DumpData extract_dump(const StateVector &state, std::span<const QubitIndex> qubits) {
  check_indices(state, qubits, "dump");
  const std::vector<std::uint64_t> offsets = outcome_offsets(state, qubits);
  const std::size_t width = offsets.size();
  std::uint64_t selected_mask = 0;
  for (QubitIndex q : qubits) selected_mask |= state.mask_of(q);
  const std::uint64_t full_mask = state.size() - 1;
  const std::uint64_t rest_mask = full_mask & ~selected_mask;
  auto amps = state.amplitudes();

  auto group_norm = [&](std::uint64_t rest) {
    double total = 0.0;
    for (std::uint64_t off : offsets) total += std::norm(amps[rest | off]);
    return total;
  };

  // Reference group: the heaviest one. Iterate the submasks of rest_mask.
  std::uint64_t best_rest = 0;
  double best_norm = -1.0;
  for (std::uint64_t rest = 0;;) {
    const double n = group_norm(rest);
    if (n > best_norm) {
      best_norm = n;
      best_rest = rest;
    }
    if (rest == rest_mask) break;
    rest = (rest - rest_mask) & rest_mask;
  }
  if (best_norm < 1e-24) throw DegenerateState("dump of a zero state");

  std::vector<Amplitude> reference(width);
  const double inv = 1.0 / std::sqrt(best_norm);
  for (std::size_t s = 0; s < width; ++s) reference[s] = amps[best_rest | offsets[s]] * inv;

  for (std::uint64_t rest = 0;;) {
    if (rest != best_rest && group_norm(rest) > 1e-24) {
      Amplitude overlap = 0.0;
      for (std::size_t s = 0; s < width; ++s) {
        overlap += std::conj(reference[s]) * amps[rest | offsets[s]];
      }
      double residual = 0.0;
      for (std::size_t s = 0; s < width; ++s) {
        residual += std::norm(amps[rest | offsets[s]] - overlap * reference[s]);
      }
      if (std::sqrt(residual) > kSeparabilityTolerance) {
        throw EntangledSelection(
            "the selected qubits are entangled with the rest of the register");
      }
    }
    if (rest == rest_mask) break;
    rest = (rest - rest_mask) & rest_mask;
  }

  DumpData out;
  out.qubits.assign(qubits.begin(), qubits.end());
  Amplitude phase_fix = 0.0;
  double kept = 0.0;
  for (std::size_t s = 0; s < width; ++s) {
    const double mag = std::abs(reference[s]);
    if (mag <= kDumpZero) continue;
    if (phase_fix == 0.0) phase_fix = std::conj(reference[s]) / mag;
    out.basis_states.push_back({s, reference[s] * phase_fix});
    kept += mag * mag;
  }
  const double renorm = 1.0 / std::sqrt(kept);
  for (auto &entry : out.basis_states) {
    entry.amplitude *= renorm;
    // The phase-fixed leading amplitude is real by construction.
    if (&entry == &out.basis_states.front()) entry.amplitude.imag(0.0);
  }
  return out;
}

}  // namespace qloop
