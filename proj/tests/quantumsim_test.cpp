// Copyright 2026 The ptlab Authors.
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

#include "ptlab/quantumsim.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ptlab {
namespace {

const ExactAmplitude kH = ExactAmplitude::inv_sqrt2();
const RealSqrt2 kHalf(make_rational(1, 2));

std::vector<int> bits_of(unsigned v, int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) b[q] = (v >> (n - 1 - q)) & 1;
  return b;
}

TEST(Prepare, NamedStates) {
  const StateVector ghz = ghz_state();
  EXPECT_EQ(ghz.qubits(), 3);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(ghz.amp(k), (k == 0 || k == 7) ? kH : ExactAmplitude()) << k;

  const StateVector eprp = epr_prime_state();
  EXPECT_EQ(eprp.amp(0), kH);
  EXPECT_EQ(eprp.amp(3), -kH);
  EXPECT_TRUE(eprp.amp(1).is_zero());

  const std::vector<int> b01 = {0, 1};
  EXPECT_EQ(basis_state(b01).amp(1), ExactAmplitude(1));
}

TEST(Prepare, CustomRequiresNormalization) {
  try {
    StateVector::from_amplitudes({ExactAmplitude(1), ExactAmplitude(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormalized);
  }
  EXPECT_NO_THROW(StateVector::from_amplitudes({kH, kH * ExactAmplitude::i()}));
}

TEST(Apply, MajOnBasisStates) {
  const std::vector<int> s110 = {1, 1, 0};
  const std::vector<int> s100 = {1, 0, 0};
  EXPECT_EQ(apply(basis_state(s110), Gate::MAJ, {0, 1, 2}).amp(6), ExactAmplitude(-1));
  EXPECT_EQ(apply(basis_state(s100), Gate::MAJ, {0, 1, 2}).amp(4), ExactAmplitude(1));
}

TEST(Apply, MajEqualsThreeControlledZ) {
  for (unsigned v = 0; v < 8; ++v) {
    const StateVector s = basis_state(bits_of(v, 3));
    StateVector viaCz = apply(s, Gate::CZ, {0, 1});
    viaCz = apply(viaCz, Gate::CZ, {1, 2});
    viaCz = apply(viaCz, Gate::CZ, {0, 2});
    EXPECT_EQ(viaCz, apply(s, Gate::MAJ, {0, 1, 2})) << v;
  }
}

TEST(Apply, RejectsBadTargets) {
  const StateVector s(3);
  for (auto targets : {std::vector<int>{0, 0}, std::vector<int>{0, 3}, std::vector<int>{0}}) {
    try {
      apply(s, Gate::CZ, targets);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadTargets);
    }
  }
}

TEST(HadamardOnParty, GhzSplitsIntoEprPair) {
  const std::vector<int> charlie = {2};
  const StateVector lhs = hadamard_on_party(ghz_state(), charlie);
  // (1/sqrt2) |EPR>|0> + (1/sqrt2) |EPR'>|1>, assembled coefficient by coefficient.
  const StateVector epr = epr_state(), eprp = epr_prime_state();
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t pair = k >> 1;
    const ExactAmplitude expected = (k & 1) ? kH * eprp.amp(pair) : kH * epr.amp(pair);
    EXPECT_EQ(lhs.amp(k), expected) << bitstring(k, 3);
  }
}

TEST(HadamardOnParty, SingleQubitAndInvolution) {
  const std::vector<int> q0 = {0};
  const StateVector plus = hadamard_on_party(StateVector(1), q0);
  EXPECT_EQ(plus.amp(0), kH);
  EXPECT_EQ(plus.amp(1), kH);
  const std::vector<int> all = {0, 1, 2};
  EXPECT_EQ(hadamard_on_party(hadamard_on_party(ghz_state(), all), all), ghz_state());
}

TEST(MeasureAll, Examples) {
  auto p = measure_all(ghz_state());
  EXPECT_EQ(p[0], kHalf);
  EXPECT_EQ(p[7], kHalf);
  for (std::size_t k = 1; k < 7; ++k) EXPECT_TRUE(p[k].is_zero());

  std::vector<ExactAmplitude> amps(8);
  amps[0] = kH;
  amps[7] = ExactAmplitude(make_rational(1, 2), 0, make_rational(-1, 2), 0);
  p = measure_all(StateVector::from_amplitudes(amps));
  EXPECT_EQ(p[0], kHalf);
  EXPECT_EQ(p[7], kHalf);

  const std::vector<int> all = {0, 1, 2};
  p = measure_all(hadamard_on_party(ghz_state(), all));
  for (std::size_t k = 0; k < 8; ++k) {
    const bool even = __builtin_parity(static_cast<unsigned>(k)) == 0;
    EXPECT_EQ(p[k], even ? RealSqrt2(make_rational(1, 4)) : RealSqrt2()) << k;
  }
}

TEST(Tensor, Examples) {
  const std::vector<StateVector> two_epr = {epr_state(), epr_state()};
  const StateVector s = tensor(two_epr);
  EXPECT_EQ(s.qubits(), 4);
  for (std::size_t k = 0; k < 16; ++k) {
    const bool on = k == 0b0000 || k == 0b0011 || k == 0b1100 || k == 0b1111;
    EXPECT_EQ(s.amp(k), on ? ExactAmplitude(kHalf) : ExactAmplitude()) << k;
  }
  const std::vector<StateVector> one = {StateVector(1)};
  EXPECT_EQ(tensor(one), StateVector(1));

  const std::vector<StateVector> three_ghz = {ghz_state(), ghz_state(), ghz_state()};
  const StateVector big = tensor(three_ghz);
  EXPECT_EQ(big.qubits(), 9);
  int support = 0;
  for (const auto& a : big.amplitudes()) {
    if (a.is_zero()) continue;
    ++support;
    EXPECT_EQ(a, ExactAmplitude(RealSqrt2(0, make_rational(1, 4))));
  }
  EXPECT_EQ(support, 8);

  const std::vector<StateVector> too_many = {ghz_state(), ghz_state(), ghz_state(), epr_state()};
  try {
    tensor(too_many);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyQubits);
  }
}

TEST(GateProperties, MatricesAreUnitary) {
  for (Gate g : {Gate::H, Gate::X, Gate::Z, Gate::S, Gate::CZ, Gate::MAJ}) {
    const auto m = gate_matrix(g);
    const std::size_t d = std::size_t{1} << gate_arity(g);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        ExactAmplitude s;
        for (std::size_t k = 0; k < d; ++k) s = s + m[r * d + k] * m[c * d + k].conj();
        EXPECT_EQ(s, ExactAmplitude(r == c ? 1 : 0)) << gate_name(g);
      }
    }
    EXPECT_EQ(parse_gate(gate_name(g)), g);
  }
}

// Random circuits: the fast in-place update agrees with the dense matrix and
// the norm stays exactly 1.
TEST(GateProperties, ApplyMatchesMatrixAndPreservesNorm) {
  std::mt19937 rng(5);
  const std::vector<Gate> gates = {Gate::H, Gate::X, Gate::Z, Gate::S, Gate::CZ, Gate::MAJ};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    StateVector s = basis_state(bits_of(std::uniform_int_distribution<unsigned>(0, (1u << n) - 1)(rng), n));
    for (int step = 0; step < 12; ++step) {
      const Gate g = gates[std::uniform_int_distribution<std::size_t>(0, gates.size() - 1)(rng)];
      std::vector<int> q(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) q[i] = i;
      std::shuffle(q.begin(), q.end(), rng);
      q.resize(static_cast<std::size_t>(gate_arity(g)));

      const StateVector next = apply(s, g, q);
      const auto m = gate_matrix(g);
      const std::size_t d = std::size_t{1} << q.size();
      for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t local = 0;
        for (int t : q) local = (local << 1) | ((i & qubit_mask(n, t)) ? 1 : 0);
        ExactAmplitude expected;
        for (std::size_t k = 0; k < d; ++k) {
          std::size_t j = i;
          for (std::size_t b = 0; b < q.size(); ++b) {
            const std::size_t mask = qubit_mask(n, q[b]);
            j = ((k >> (q.size() - 1 - b)) & 1) ? (j | mask) : (j & ~mask);
          }
          expected = expected + m[local * d + k] * s.amp(j);
        }
        ASSERT_EQ(next.amp(i), expected);
      }
      ASSERT_EQ(next.norm_sq(), RealSqrt2(1));
      RealSqrt2 total;
      for (const auto& p : measure_all(next)) total += p;
      ASSERT_EQ(total, RealSqrt2(1));
      s = next;
    }
  }
}

}  // namespace
}  // namespace ptlab
