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

// Brute-force dense linear algebra used as an independent reference in
// tests. Nothing here calls the simulator kernels: operators are built from
// explicit Kronecker products with qubit 0 as the leftmost factor.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "qloop/engine.hpp"
#include "qloop/process.hpp"

namespace oracle {

using Complex = std::complex<double>;

struct Matrix {
  std::size_t dim = 0;
  std::vector<Complex> data;  // row-major

  explicit Matrix(std::size_t d) : dim(d), data(d * d) {}
  Complex &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

inline Matrix identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

inline Matrix from_2x2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.dim * b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          out(i * b.dim + k, j * b.dim + l) = a(i, j) * b(k, l);
  return out;
}

inline Matrix operator*(const Matrix &a, const Matrix &b) {
  Matrix out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix operator+(const Matrix &a, const Matrix &b) {
  Matrix out(a.dim);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

inline Matrix operator-(const Matrix &a, const Matrix &b) {
  Matrix out(a.dim);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

inline Matrix scaled(const Matrix &a, Complex s) {
  Matrix out = a;
  for (auto &v : out.data) v *= s;
  return out;
}

inline Matrix adjoint(const Matrix &a) {
  Matrix out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

inline std::vector<Complex> apply(const Matrix &m, const std::vector<Complex> &v) {
  std::vector<Complex> out(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

inline double max_abs_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Rotates `b` by the global phase that best aligns it with `a`, then
/// returns the max entrywise difference.
inline double diff_up_to_phase(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(b[i]) * a[i];
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  std::vector<Complex> rotated(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rotated[i] = b[i] * phase;
  return max_abs_diff(a, rotated);
}

inline double diff_up_to_phase(const Matrix &a, const Matrix &b) {
  return diff_up_to_phase(a.data, b.data);
}

/// Tensor product over n qubits; factor(i) gives qubit i's 2x2 operator.
inline Matrix tensor(std::uint32_t n, const std::function<Matrix(std::uint32_t)> &factor) {
  Matrix out = identity(1);
  for (std::uint32_t i = 0; i < n; ++i) out = kron(out, factor(i));
  return out;
}

/// U = (I - P) + P * M_t, where P projects every control onto |1> and M_t is
/// `m` on the target tensored with identities.
inline Matrix controlled(std::uint32_t n, const Matrix &m, std::uint32_t target,
                         const std::vector<std::uint32_t> &controls) {
  const Matrix one = from_2x2(0, 0, 0, 1);
  auto is_control = [&](std::uint32_t q) {
    return std::find(controls.begin(), controls.end(), q) != controls.end();
  };
  const Matrix projector =
      tensor(n, [&](std::uint32_t q) { return is_control(q) ? one : identity(2); });
  const Matrix lifted = tensor(n, [&](std::uint32_t q) { return q == target ? m : identity(2); });
  const Matrix id = identity(std::size_t{1} << n);
  return (id - projector) + projector * lifted;
}

/// Hand-written textbook matrices, independent of qloop::gate_matrix.
inline Matrix reference_gate(const qloop::Gate &g) {
  using qloop::GateKind;
  const Complex i{0.0, 1.0};
  const double s2 = 1.0 / std::sqrt(2.0);
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  switch (g.kind) {
    case GateKind::PauliX: return from_2x2(0, 1, 1, 0);
    case GateKind::PauliY: return from_2x2(0, -i, i, 0);
    case GateKind::PauliZ: return from_2x2(1, 0, 0, -1);
    case GateKind::Hadamard: return from_2x2(s2, s2, s2, -s2);
    case GateKind::RX: return from_2x2(c, -i * s, -i * s, c);
    case GateKind::RY: return from_2x2(c, -s, s, c);
    case GateKind::RZ: return from_2x2(std::exp(-i * (g.angle / 2)), 0, 0, std::exp(i * (g.angle / 2)));
    case GateKind::Phase: return from_2x2(1, 0, 0, std::exp(i * g.angle));
  }
  return identity(2);
}

/// F[j][k] = exp(2 pi i j k / N) / sqrt(N).
inline Matrix dft(std::uint32_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix out(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      out(j, k) = std::polar(1.0 / std::sqrt(double(dim)),
                             2.0 * std::numbers::pi * double(j * k % dim) / double(dim));
  return out;
}

/// Unitary of a builder routine on n fresh qubits, assembled column by
/// column: prepare |k> with X gates, run the routine, read the final state.
inline Matrix assemble(std::uint32_t n,
                       const std::function<void(qloop::Process &,
                                                const std::vector<qloop::QubitHandle> &)> &routine) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix out(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    qloop::Process p(qloop::ProcessOptions{0, {}, true});
    const auto q = p.alloc(n);
    for (std::uint32_t i = 0; i < n; ++i)
      if ((k >> (n - 1 - i)) & 1U) p.x(q[i]);
    routine(p, q);
    qloop::Engine engine(0);
    engine.run(p.code());
    const auto amps = engine.state().amplitudes();
    for (std::size_t r = 0; r < dim; ++r) out(r, k) = amps[r];
  }
  return out;
}

inline std::vector<Complex> random_state(std::size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto &a : v) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  for (auto &a : v) a /= std::sqrt(norm);
  return v;
}

}  // namespace oracle
