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

// Exact dense state-vector simulation over Q(i, sqrt2), up to 10 qubits.
// Qubit 0 is the most significant bit of the basis index.

#ifndef PTLAB_QUANTUMSIM_HPP_
#define PTLAB_QUANTUMSIM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"

namespace ptlab {

inline constexpr int kMaxQubits = 10;

class StateVector {
 public:
  StateVector() : StateVector(0) {}

  // |0...0> on n qubits.
  explicit StateVector(int qubits) : qubits_(qubits) {
    if (qubits < 0 || qubits > kMaxQubits) {
      throw Error(ErrorCode::kTooManyQubits, std::to_string(qubits) + " qubits requested");
    }
    amps_.assign(std::size_t{1} << qubits, ExactAmplitude());
    amps_[0] = ExactAmplitude(1);
  }

  // Checks exact normalization.
  static StateVector from_amplitudes(std::vector<ExactAmplitude> amps) {
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if (amps.empty() || (std::size_t{1} << n) != amps.size()) {
      throw Error(ErrorCode::kMalformed, "amplitude count is not a power of two");
    }
    if (n > kMaxQubits) throw Error(ErrorCode::kTooManyQubits, std::to_string(n) + " qubits");
    StateVector s;
    s.qubits_ = n;
    s.amps_ = std::move(amps);
    if (s.norm_sq() != RealSqrt2(1)) {
      throw Error(ErrorCode::kNotNormalized, "state has squared norm " + to_string(s.norm_sq()));
    }
    return s;
  }

  int qubits() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const ExactAmplitude& amp(std::size_t index) const { return amps_[index]; }
  std::span<const ExactAmplitude> amplitudes() const { return amps_; }

  RealSqrt2 norm_sq() const {
    RealSqrt2 total;
    for (const auto& a : amps_) total += ptlab::norm_sq(a);
    return total;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  friend class StateAccess;
  int qubits_ = 0;
  std::vector<ExactAmplitude> amps_;
};

// Internal mutable access for gate application.
class StateAccess {
 public:
  static std::vector<ExactAmplitude>& amps(StateVector& s) { return s.amps_; }
};

inline std::size_t qubit_mask(int qubits, int q) { return std::size_t{1} << (qubits - 1 - q); }

// ---------------------------------------------------------------------------
// States.

inline StateVector basis_state(std::span<const int> bits) {
  StateVector s(static_cast<int>(bits.size()));
  std::size_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error(ErrorCode::kMalformed, "basis bits must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(b);
  }
  std::vector<ExactAmplitude> amps(s.dim());
  amps[index] = ExactAmplitude(1);
  return StateVector::from_amplitudes(std::move(amps));
}

// (|00> + sign |11>) / sqrt2
inline StateVector epr_state(int sign = 1) {
  std::vector<ExactAmplitude> amps(4);
  amps[0] = ExactAmplitude::inv_sqrt2();
  amps[3] = sign > 0 ? ExactAmplitude::inv_sqrt2() : -ExactAmplitude::inv_sqrt2();
  return StateVector::from_amplitudes(std::move(amps));
}

inline StateVector epr_prime_state() { return epr_state(-1); }

inline StateVector ghz_state() {
  std::vector<ExactAmplitude> amps(8);
  amps[0] = ExactAmplitude::inv_sqrt2();
  amps[7] = ExactAmplitude::inv_sqrt2();
  return StateVector::from_amplitudes(std::move(amps));
}

inline StateVector tensor(std::span<const StateVector> states) {
  int total = 0;
  for (const auto& s : states) total += s.qubits();
  if (total > kMaxQubits) throw Error(ErrorCode::kTooManyQubits, std::to_string(total) + " qubits");
  std::vector<ExactAmplitude> amps = {ExactAmplitude(1)};
  for (const auto& s : states) {
    std::vector<ExactAmplitude> next(amps.size() * s.dim());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (amps[i].is_zero()) continue;
      for (std::size_t j = 0; j < s.dim(); ++j) {
        if (!s.amp(j).is_zero()) next[i * s.dim() + j] = amps[i] * s.amp(j);
      }
    }
    amps = std::move(next);
  }
  return StateVector::from_amplitudes(std::move(amps));
}

// ---------------------------------------------------------------------------
// Gates.

enum class Gate { H, X, Z, S, CZ, MAJ };

inline int gate_arity(Gate g) {
  switch (g) {
    case Gate::CZ: return 2;
    case Gate::MAJ: return 3;
    default: return 1;
  }
}

inline const char* gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::S: return "S";
    case Gate::CZ: return "CZ";
    case Gate::MAJ: return "MAJ";
  }
  return "?";
}

inline Gate parse_gate(const std::string& name) {
  for (Gate g : {Gate::H, Gate::X, Gate::Z, Gate::S, Gate::CZ, Gate::MAJ}) {
    if (name == gate_name(g)) return g;
  }
  throw Error(ErrorCode::kParse, "unknown gate '" + name + "'");
}

// Dense matrix of a gate on its own qubits, row-major, first target most
// significant.
inline std::vector<ExactAmplitude> gate_matrix(Gate g) {
  const std::size_t d = std::size_t{1} << gate_arity(g);
  std::vector<ExactAmplitude> m(d * d);
  const ExactAmplitude h = ExactAmplitude::inv_sqrt2();
  switch (g) {
    case Gate::H:
      m = {h, h, h, -h};
      break;
    case Gate::X:
      m = {0, 1, 1, 0};
      break;
    case Gate::Z:
      m = {1, 0, 0, -1};
      break;
    case Gate::S:
      m = {1, 0, 0, ExactAmplitude::i()};
      break;
    case Gate::CZ:
      for (std::size_t k = 0; k < d; ++k) m[k * d + k] = k == 3 ? -1 : 1;
      break;
    case Gate::MAJ:
      for (std::size_t k = 0; k < d; ++k) {
        const int ones = __builtin_popcount(static_cast<unsigned>(k));
        m[k * d + k] = ones >= 2 ? -1 : 1;
      }
      break;
  }
  return m;
}

inline StateVector apply(const StateVector& state, Gate g, std::span<const int> targets) {
  const int n = state.qubits();
  if (static_cast<int>(targets.size()) != gate_arity(g)) {
    throw Error(ErrorCode::kBadTargets, std::string(gate_name(g)) + " needs " +
                                            std::to_string(gate_arity(g)) + " targets");
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (targets[k] < 0 || targets[k] >= n) throw Error(ErrorCode::kBadTargets, "target out of range");
    for (std::size_t l = 0; l < k; ++l) {
      if (targets[l] == targets[k]) throw Error(ErrorCode::kBadTargets, "repeated target");
    }
  }
  StateVector out = state;
  auto& amps = StateAccess::amps(out);
  if (g == Gate::H || g == Gate::X) {
    const std::size_t mask = qubit_mask(n, targets[0]);
    const ExactAmplitude h = ExactAmplitude::inv_sqrt2();
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & mask) continue;
      const ExactAmplitude a0 = state.amp(i);
      const ExactAmplitude a1 = state.amp(i | mask);
      if (g == Gate::X) {
        amps[i] = a1;
        amps[i | mask] = a0;
      } else {
        amps[i] = h * (a0 + a1);
        amps[i | mask] = h * (a0 - a1);
      }
    }
    return out;
  }
  // Diagonal gates.
  std::vector<std::size_t> masks;
  for (int t : targets) masks.push_back(qubit_mask(n, t));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (amps[i].is_zero()) continue;
    int ones = 0;
    for (auto m : masks) ones += (i & m) ? 1 : 0;
    switch (g) {
      case Gate::Z:
      case Gate::CZ:
        if (ones == static_cast<int>(masks.size())) amps[i] = -amps[i];
        break;
      case Gate::S:
        if (ones == 1) amps[i] = amps[i] * ExactAmplitude::i();
        break;
      case Gate::MAJ:
        if (ones >= 2) amps[i] = -amps[i];
        break;
      default:
        break;
    }
  }
  return out;
}

inline StateVector apply(const StateVector& state, Gate g, std::initializer_list<int> targets) {
  return apply(state, g, std::span<const int>(targets.begin(), targets.size()));
}

inline StateVector hadamard_on_party(const StateVector& state, std::span<const int> qubits) {
  StateVector s = state;
  for (int q : qubits) s = apply(s, Gate::H, std::span<const int>(&q, 1));
  return s;
}

// Born rule in the computational basis; entry k is the probability of basis
// index k.
inline std::vector<RealSqrt2> measure_all(const StateVector& state) {
  std::vector<RealSqrt2> p(state.dim());
  RealSqrt2 total;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (state.amp(k).is_zero()) continue;
    p[k] = norm_sq(state.amp(k));
    total += p[k];
  }
  if (total != RealSqrt2(1)) throw Error(ErrorCode::kInternalInconsistency, "measurement does not sum to 1");
  return p;
}

inline std::string bitstring(std::size_t index, int qubits) {
  std::string s(static_cast<std::size_t>(qubits), '0');
  for (int q = 0; q < qubits; ++q) {
    if (index & qubit_mask(qubits, q)) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

}  // namespace ptlab

#endif  // PTLAB_QUANTUMSIM_HPP_
