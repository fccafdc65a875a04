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

#include <doctest.h>

#include <numbers>

#include "oracle.hpp"
#include "qloop/error.hpp"
#include "qloop/library.hpp"

using namespace qloop;
using oracle::Complex;
using oracle::Matrix;

namespace {

constexpr double kPi = std::numbers::pi;
using Qubits = std::vector<QubitHandle>;

Matrix on(std::uint32_t n, std::uint32_t q, const Matrix &m) {
  return oracle::tensor(n, [&](std::uint32_t i) { return i == q ? m : oracle::identity(2); });
}

Matrix H() { return oracle::reference_gate(Gate::h()); }
Matrix X() { return oracle::reference_gate(Gate::x()); }
Matrix Z() { return oracle::reference_gate(Gate::z()); }

Matrix cnot_oracle(std::uint32_t n, std::uint32_t c, std::uint32_t t) {
  return oracle::controlled(n, X(), t, {c});
}

// Bell circuit on (a, b): CNOT(a -> b) after H(a).
Matrix bell_oracle(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  return cnot_oracle(n, a, b) * on(n, a, H());
}

}  // namespace

TEST_CASE("cnot and swap match their dense matrices") {
  CHECK(oracle::max_abs_diff(oracle::assemble(2, [](Process &p, const Qubits &q) {
                               lib::cnot(p, q[0], q[1]);
                             }),
                             cnot_oracle(2, 0, 1)) < 1e-12);
  Matrix swap_expected(4);
  swap_expected(0, 0) = swap_expected(1, 2) = swap_expected(2, 1) = swap_expected(3, 3) = 1.0;
  CHECK(oracle::max_abs_diff(oracle::assemble(2, [](Process &p, const Qubits &q) {
                               lib::swap(p, q[0], q[1]);
                             }),
                             swap_expected) < 1e-12);
}

TEST_CASE("bell maps |00> to the bell state") {
  const Matrix u = oracle::assemble(2, [](Process &p, const Qubits &q) { lib::bell(p, q[0], q[1]); });
  CHECK(oracle::max_abs_diff(u, bell_oracle(2, 0, 1)) < 1e-12);
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(u(0, 0) - Complex(r)) < 1e-12);
  CHECK(std::abs(u(3, 0) - Complex(r)) < 1e-12);
}

TEST_CASE("controlled bell matches the dense oracle") {
  const Matrix u = oracle::assemble(3, [](Process &p, const Qubits &q) {
    p.ctrl({q[0]}, [&] { lib::bell(p, q[1], q[2]); });
  });
  const Matrix expected =
      oracle::controlled(3, X(), 2, {0, 1}) * oracle::controlled(3, H(), 1, {0});
  CHECK(oracle::max_abs_diff(u, expected) < 1e-12);
}

TEST_CASE("around(bell, Z) on |00> gives |10>") {
  // B^dagger Z_a B applied to |00>, computed densely.
  const Matrix b = bell_oracle(2, 0, 1);
  const Matrix expected = oracle::adjoint(b) * on(2, 0, Z()) * b;
  const Matrix u = oracle::assemble(2, [](Process &p, const Qubits &q) {
    p.around([&] { lib::bell(p, q[0], q[1]); }, [&] { p.z(q[0]); });
  });
  CHECK(oracle::max_abs_diff(u, expected) < 1e-12);
  CHECK(std::abs(std::abs(u(0b10, 0)) - 1.0) < 1e-12);
}

TEST_CASE("qft equals the DFT matrix") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Matrix u = oracle::assemble(n, [](Process &p, const Qubits &q) { lib::qft(p, q); });
    CHECK(oracle::max_abs_diff(u, oracle::dft(n)) < 1e-10);
  }
}

TEST_CASE("qft without swaps is the DFT up to bit reversal") {
  const std::uint32_t n = 3;
  const Matrix u = oracle::assemble(n, [](Process &p, const Qubits &q) { lib::qft(p, q, false); });
  const Matrix f = oracle::dft(n);
  auto reverse = [](std::size_t k) { return ((k & 1) << 2) | (k & 2) | ((k >> 2) & 1); };
  double worst = 0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) worst = std::max(worst, std::abs(u(reverse(r), c) - f(r, c)));
  CHECK(worst < 1e-10);
}

TEST_CASE("qft followed by its adjoint is the identity") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const Matrix u = oracle::assemble(n, [](Process &p, const Qubits &q) {
      lib::qft(p, q);
      p.adj([&] { lib::qft(p, q); });
    });
    CHECK(oracle::max_abs_diff(u, oracle::identity(std::size_t{1} << n)) < 1e-10);
  }
}

TEST_CASE("grover diffusor reflects about the uniform state") {
  for (std::uint32_t n : {2U, 3U, 4U}) {
    CAPTURE(n);
    const std::size_t dim = std::size_t{1} << n;
    Matrix reflection(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) reflection(r, c) = 2.0 / double(dim) - (r == c ? 1.0 : 0.0);
    const Matrix expected = oracle::scaled(reflection, -1.0);
    const Matrix u =
        oracle::assemble(n, [](Process &p, const Qubits &q) { lib::grover_diffusor(p, q); });
    CHECK(oracle::diff_up_to_phase(expected, u) < 1e-10);
  }
  Process p;
  CHECK_THROWS_AS(lib::grover_diffusor(p, p.alloc(1)), BadArgument);
}

TEST_CASE("teleport transfers random states for every seed") {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int prep = 0; prep < 20; ++prep) {
    const double theta = angle(rng), phi = angle(rng);
    const std::vector<Complex> expected =
        oracle::apply(oracle::reference_gate(Gate::rz(phi)) * oracle::reference_gate(Gate::ry(theta)),
                      {1.0, 0.0});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Process p(ProcessOptions{seed, {}, true});
      const auto d = lib::teleport(p, [&](Process &proc, QubitHandle q) {
        proc.ry(theta, q);
        proc.rz(phi, q);
      });
      const std::vector<Complex> got{d.data().amplitude(0), d.data().amplitude(1)};
      CHECK(oracle::diff_up_to_phase(expected, got) < 1e-9);
    }
  }
}
