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
#include "qloop/state_vector.hpp"

using namespace qloop;
using oracle::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

oracle::Matrix to_matrix(const GateMatrix &g) {
  return oracle::from_2x2(g(0, 0), g(0, 1), g(1, 0), g(1, 1));
}

std::vector<Complex> amps(const StateVector &s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

Gate random_gate(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  switch (rng() % 8) {
    case 0: return Gate::x();
    case 1: return Gate::y();
    case 2: return Gate::z();
    case 3: return Gate::h();
    case 4: return Gate::rx(angle(rng));
    case 5: return Gate::ry(angle(rng));
    case 6: return Gate::rz(angle(rng));
    default: return Gate::phase(angle(rng));
  }
}

std::vector<Complex> run_state(const Process &p) {
  Engine engine(0);
  engine.run(p.code());
  return amps(engine.state());
}

}  // namespace

TEST_CASE("gate matrices match textbook definitions and are unitary") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Gate g = random_gate(rng);
    const oracle::Matrix m = to_matrix(gate_matrix(g));
    CHECK(oracle::max_abs_diff(m, oracle::reference_gate(g)) < 1e-12);
    CHECK(oracle::max_abs_diff(m * oracle::adjoint(m), oracle::identity(2)) < 1e-12);
    CHECK(oracle::max_abs_diff(to_matrix(multiply(gate_matrix(inverse(g)), gate_matrix(g))),
                               oracle::identity(2)) < 1e-12);
    CHECK(oracle::max_abs_diff(to_matrix(conjugate_transpose(gate_matrix(g))),
                               to_matrix(gate_matrix(inverse(g)))) < 1e-12);
  }
}

TEST_CASE("phase gate identities") {
  const Complex i{0, 1};
  const auto s = oracle::from_2x2(1, 0, 0, i);
  const auto t = oracle::from_2x2(1, 0, 0, std::exp(i * (kPi / 4)));
  CHECK(oracle::max_abs_diff(to_matrix(gate_matrix(Gate::phase(kPi))),
                             to_matrix(gate_matrix(Gate::z()))) < 1e-12);
  CHECK(oracle::max_abs_diff(to_matrix(gate_matrix(Gate::phase(kPi / 2))), s) < 1e-12);
  CHECK(oracle::max_abs_diff(to_matrix(gate_matrix(Gate::phase(kPi / 4))), t) < 1e-12);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int k = 0; k < 20; ++k) {
    const double lambda = angle(rng);
    const auto rz = oracle::scaled(to_matrix(gate_matrix(Gate::rz(lambda))), std::exp(i * (lambda / 2)));
    CHECK(oracle::max_abs_diff(to_matrix(gate_matrix(Gate::phase(lambda))), rz) < 1e-12);
  }
}

TEST_CASE("kernel agrees with the dense oracle on random controlled gates") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + std::uint32_t(rng() % 6);
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const std::uint32_t target = order[0];
    const std::size_t ncontrols = rng() % n;
    std::vector<std::uint32_t> controls(order.begin() + 1, order.begin() + 1 + long(ncontrols));

    const Gate g = random_gate(rng);
    const auto psi = oracle::random_state(std::size_t{1} << n, rng);
    StateVector state = StateVector::from_amplitudes(psi);
    apply_kernel(state, gate_matrix(g), target, controls);
    const auto expected =
        oracle::apply(oracle::controlled(n, oracle::reference_gate(g), target, controls), psi);
    CHECK(oracle::max_abs_diff(amps(state), expected) < 1e-10);
  }
}

TEST_CASE("kernel index errors") {
  StateVector state(3);
  const std::vector<QubitIndex> none;
  const std::vector<QubitIndex> self{1};
  const std::vector<QubitIndex> far{5};
  CHECK_THROWS_AS(apply_kernel(state, gate_matrix(Gate::x()), 3, none), IndexOutOfRange);
  CHECK_THROWS_AS(apply_kernel(state, gate_matrix(Gate::x()), 0, far), IndexOutOfRange);
  CHECK_THROWS_AS(apply_kernel(state, gate_matrix(Gate::x()), 1, self), IndexOverlap);
}

TEST_CASE("hadamard and cnot truth tables") {
  const double r = 1 / std::sqrt(2.0);
  for (int bit = 0; bit < 2; ++bit) {
    StateVector s = StateVector::from_amplitudes({bit ? 0.0 : 1.0, bit ? 1.0 : 0.0});
    apply_kernel(s, gate_matrix(Gate::h()), 0, {});
    CHECK(std::abs(s[0] - Complex(r)) < 1e-12);
    CHECK(std::abs(s[1] - Complex(bit ? -r : r)) < 1e-12);
  }
  const std::uint64_t cnot_out[4] = {0b00, 0b01, 0b11, 0b10};
  const std::vector<QubitIndex> control{0};
  for (std::uint64_t in = 0; in < 4; ++in) {
    std::vector<Amplitude> v(4);
    v[in] = 1.0;
    StateVector s = StateVector::from_amplitudes(v);
    apply_kernel(s, gate_matrix(Gate::x()), 1, control);
    for (std::uint64_t k = 0; k < 4; ++k) {
      CHECK(std::abs(s[k] - Complex(k == cnot_out[in] ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("RY(pi/2) followed by X equals H on random states") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto psi = oracle::random_state(2, rng);
    StateVector a = StateVector::from_amplitudes(psi);
    StateVector b = StateVector::from_amplitudes(psi);
    apply_kernel(a, gate_matrix(Gate::ry(kPi / 2)), 0, {});
    apply_kernel(a, gate_matrix(Gate::x()), 0, {});
    apply_kernel(b, gate_matrix(Gate::h()), 0, {});
    CHECK(oracle::max_abs_diff(amps(a), amps(b)) < 1e-10);
  }
}

TEST_CASE("a sequence followed by its adjoint restores the state") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto body = [seed = rng()](Process &p, const std::vector<QubitHandle> &q) {
      std::mt19937_64 local(seed);
      for (int k = 0; k < 20; ++k) {
        const auto t = q[local() % q.size()];
        const auto c = q[local() % q.size()];
        const Gate g = random_gate(local);
        if (c == t) p.apply(g, t);
        else p.ctrl({c}, [&] { p.apply(g, t); });
      }
    };
    Process p(ProcessOptions{0, {}, true});
    const auto q = p.alloc(4);
    for (const auto &h : q) p.ry(0.3 + 0.2 * h.index, h);
    const auto before = run_state(p);
    body(p, q);
    p.adj([&] { body(p, q); });
    CHECK(oracle::max_abs_diff(run_state(p), before) < 1e-9);
  }
}

TEST_CASE("measurement collapses and renormalizes") {
  const double r = 1 / std::sqrt(2.0);
  StateVector s = StateVector::from_amplitudes({r, 0, 0, r});
  const std::vector<QubitIndex> both{0, 1};
  Xoshiro256 rng(0);
  const auto outcome = measure_kernel(s, both, rng);
  REQUIRE((outcome == 0 || outcome == 3));
  CHECK(std::abs(s[outcome] - Complex(1.0)) < 1e-12);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);

  // Prepared directly in |11>: always outcome 3, state unchanged.
  StateVector one = StateVector::from_amplitudes({0, 0, 0, 1});
  for (int i = 0; i < 10; ++i) CHECK(measure_kernel(one, both, rng) == 3);
  CHECK(std::abs(one[3] - Complex(1.0)) < 1e-12);

  StateVector zero = StateVector::from_amplitudes({0, 0, 0, 0});
  CHECK_THROWS_AS(measure_kernel(zero, both, rng), DegenerateState);
}

TEST_CASE("outcome bit order puts the first listed qubit first") {
  // |10>: qubit 0 is 1.
  StateVector s = StateVector::from_amplitudes({0, 0, 1, 0});
  Xoshiro256 rng(1);
  const std::vector<QubitIndex> fwd{0, 1};
  const std::vector<QubitIndex> rev{1, 0};
  CHECK(measure_kernel(s, fwd, rng) == 2);
  CHECK(measure_kernel(s, rev, rng) == 1);
}

TEST_CASE("bell outcome frequencies follow the Born rule") {
  const double r = 1 / std::sqrt(2.0);
  const std::vector<QubitIndex> both{0, 1};
  int counts[4] = {};
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    StateVector s = StateVector::from_amplitudes({r, 0, 0, r});
    Xoshiro256 rng(seed);
    ++counts[measure_kernel(s, both, rng)];
  }
  CHECK(counts[1] == 0);
  CHECK(counts[2] == 0);
  CHECK(counts[0] / 10000.0 >= 0.47);
  CHECK(counts[0] / 10000.0 <= 0.53);
}

TEST_CASE("unequal probabilities are sampled in proportion") {
  // RY(2 pi/3)|0>: P(1) = sin^2(pi/3) = 0.75.
  Process p;
  const auto q = p.qubit();
  p.ry(2 * kPi / 3, q);
  p.measure(q);
  int ones = 0;
  for (std::uint64_t seed = 0; seed < 20000; ++seed) ones += int(execute(p.code(), seed).futures.at(0));
  CHECK(std::abs(ones / 20000.0 - 0.75) < 0.02);
}

TEST_CASE("same program and seed give identical results") {
  Process p;
  const auto q = p.alloc(3);
  p.h(q[0]);
  p.ry(1.1, q[1]);
  p.ctrl({q[0]}, [&] { p.x(q[2]); });
  p.measure(q);
  p.dump(q[1]);
  p.measure(q[1]);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(execute(p.code(), seed) == execute(p.code(), seed));
  }
}

TEST_CASE("the engine rejects oversized programs") {
  QuantumCode code{kMaxQubits + 1, 0, 0, {Alloc{kMaxQubits + 1}}};
  CHECK_THROWS_AS(execute(code, 0), EngineFailure);
}

TEST_CASE("extract_dump of a bell pair keeps both basis states") {
  Process p;
  const auto q = p.alloc(2);
  lib::bell(p, q[0], q[1]);
  const auto d = p.dump(q);
  const double r = 1 / std::sqrt(2.0);
  REQUIRE(d.data().basis_states.size() == 2);
  CHECK(d.data().basis_states[0].basis == 0);
  CHECK(d.data().basis_states[1].basis == 3);
  CHECK(std::abs(d.data().amplitude(0) - Complex(r)) < 1e-12);
  CHECK(std::abs(d.data().amplitude(3) - Complex(r)) < 1e-12);
  CHECK(d.data().amplitude(1) == Complex(0));
}

TEST_CASE("extract_dump refuses entangled selections") {
  const double r = 1 / std::sqrt(2.0);
  StateVector s = StateVector::from_amplitudes({r, 0, 0, r});
  const std::vector<QubitIndex> first{0};
  CHECK_THROWS_AS(extract_dump(s, first), EntangledSelection);
}

TEST_CASE("extract_dump of a product factor matches the oracle up to phase") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_state(2, rng);
    const auto b = oracle::random_state(4, rng);
    // Qubit 0 carries a; qubits 1..2 carry b.
    std::vector<Complex> joint(8);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) joint[std::size_t(i * 4 + j)] = a[std::size_t(i)] * b[std::size_t(j)];
    const StateVector s = StateVector::from_amplitudes(joint);
    const std::vector<QubitIndex> sel{0};
    const DumpData d = extract_dump(s, sel);
    std::vector<Complex> got{d.amplitude(0), d.amplitude(1)};
    CHECK(oracle::diff_up_to_phase(a, got) < 1e-9);
    // First nonzero amplitude is real and positive.
    CHECK(d.basis_states.front().amplitude.real() > 0);
    CHECK(std::abs(d.basis_states.front().amplitude.imag()) < 1e-15);

    const std::vector<QubitIndex> rest{2, 1};
    const DumpData e = extract_dump(s, rest);
    // Selection order is {2,1}: basis bit 1 is qubit 2.
    std::vector<Complex> swapped{b[0], b[2], b[1], b[3]};
    std::vector<Complex> got_rest{e.amplitude(0), e.amplitude(1), e.amplitude(2), e.amplitude(3)};
    CHECK(oracle::diff_up_to_phase(swapped, got_rest) < 1e-9);
  }
}

TEST_CASE("controlled-bell dump") {
  Process p;
  const auto q = p.alloc(3);
  p.h(q[0]);
  p.ctrl({q[0]}, [&] { lib::bell(p, q[1], q[2]); });
  const auto d = p.dump(q);
  const auto &states = d.data().basis_states;
  REQUIRE(states.size() == 3);
  CHECK(std::abs(std::norm(d.data().amplitude(0b000)) - 0.5) < 1e-9);
  CHECK(std::abs(std::norm(d.data().amplitude(0b100)) - 0.25) < 1e-9);
  CHECK(std::abs(std::norm(d.data().amplitude(0b111)) - 0.25) < 1e-9);
}

TEST_CASE("teleported qubit measures with the prepared probability") {
  // Prepared RY(pi/2)|0>: P(1) = 0.5.
  int ones = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Process p(ProcessOptions{seed, {}, false});
    lib::teleport(p, [](Process &proc, QubitHandle q) { proc.ry(kPi / 2, q); });
    ones += int(p.measure(QubitHandle{p.id(), p.num_qubits() - 1}).value());
  }
  CHECK(ones / 2000.0 >= 0.42);
  CHECK(ones / 2000.0 <= 0.58);
}

TEST_CASE("rng is a reproducible uniform source") {
  Xoshiro256 a(123), b(123), c(124);
  bool differs = false;
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    differs |= (u != c.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(differs);
  CHECK(std::abs(sum / 10000 - 0.5) < 0.02);
}
