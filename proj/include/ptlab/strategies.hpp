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

// Strategy classes (deterministic, shared randomness, PR-box wirings and
// quantum) and their exact evaluation to behaviours.
//
// Players see their *local input*: the mixed-radix value of the slots they
// read (see Layout::local_input). All output functions are explicit tables.

#ifndef PTLAB_STRATEGIES_HPP_
#define PTLAB_STRATEGIES_HPP_

#include <optional>
#include <regex>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ptlab/behaviour.hpp"
#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"
#include "ptlab/games.hpp"
#include "ptlab/quantumsim.hpp"

namespace ptlab {

struct DeterministicStrategy {
  std::vector<std::vector<int>> outputs;  // outputs[player][local input]

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

struct SharedRandomnessStrategy {
  std::vector<RealSqrt2> weights;
  std::vector<DeterministicStrategy> branches;
  // Slots whose two values were swapped when the strategy was derived; the
  // branches are already expressed in the original labels.
  std::vector<int> relabelled_slots;
};

// Non-adaptive wiring of PR boxes. Box k joins boxes[k].first (port x) and
// boxes[k].second (port y) and returns bits with a ^ b = x & y, uniformly.
struct PRWiring {
  std::vector<std::pair<int, int>> boxes;
  // settings[p][local input][j]: bit fed to the j-th box incident to p, in
  // the order boxes are listed.
  std::vector<std::vector<std::vector<int>>> settings;
  // outputs[p][local input][outcomes]: outcomes packs the incident boxes'
  // bits, first incident box most significant.
  std::vector<std::vector<std::vector<int>>> outputs;
};

struct QuantumOp {
  Gate gate;
  std::vector<int> targets;  // positions in the owning player's qubit list
};

struct QuantumStrategy {
  std::vector<StateVector> resources;  // tensored in this order
  std::vector<std::vector<int>> qubits;  // global qubits owned by each player
  std::vector<std::vector<std::vector<QuantumOp>>> circuits;  // [player][local input]
  // [player][local input][measured bits, first owned qubit most significant];
  // an empty table means the bits themselves are the output.
  std::vector<std::vector<std::vector<int>>> outputs;
};

using Strategy = std::variant<DeterministicStrategy, SharedRandomnessStrategy, PRWiring, QuantumStrategy>;

// ---------------------------------------------------------------------------
// Evaluation.

namespace detail {

inline void check_table(const Layout& l, int p, const std::vector<int>& table, const char* what) {
  if (static_cast<int>(table.size()) != l.local_input_count(p)) {
    throw Error(ErrorCode::kAlphabetMismatch, std::string(what) + ": player " + std::to_string(p) +
                                                  " needs one entry per local input");
  }
  for (int o : table) {
    if (o < 0 || o >= l.output_sizes[p]) {
      throw Error(ErrorCode::kAlphabetMismatch, std::string(what) + ": output out of range for player " +
                                                    std::to_string(p));
    }
  }
}

inline void check_players(const Layout& l, std::size_t n, const char* what) {
  if (static_cast<int>(n) != l.players()) {
    throw Error(ErrorCode::kAlphabetMismatch, std::string(what) + ": wrong number of players");
  }
}

inline std::vector<std::vector<int>> local_inputs_by_joint(const Layout& l) {
  std::vector<std::vector<int>> out(l.input_count());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const auto xs = l.decode_input(x);
    for (int p = 0; p < l.players(); ++p) out[x].push_back(l.local_input(p, xs));
  }
  return out;
}

}  // namespace detail

inline void validate(const DeterministicStrategy& s, const Layout& l) {
  detail::check_players(l, s.outputs.size(), "deterministic strategy");
  for (int p = 0; p < l.players(); ++p) detail::check_table(l, p, s.outputs[p], "deterministic strategy");
}

inline Behaviour evaluate(const DeterministicStrategy& s, const Layout& l) {
  validate(s, l);
  const auto locals = detail::local_inputs_by_joint(l);
  std::vector<Behaviour::Row> rows(l.input_count());
  std::vector<int> a(static_cast<std::size_t>(l.players()));
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (int p = 0; p < l.players(); ++p) a[p] = s.outputs[p][locals[x][p]];
    rows[x].emplace_back(static_cast<std::uint32_t>(l.encode_output(a)), RealSqrt2(1));
  }
  return make_behaviour(l, std::move(rows));
}

inline Behaviour evaluate(const SharedRandomnessStrategy& s, const Layout& l) {
  if (s.weights.size() != s.branches.size() || s.branches.empty()) {
    throw Error(ErrorCode::kWeightMismatch, "need one weight per branch");
  }
  RealSqrt2 total;
  for (const auto& w : s.weights) {
    if (w.sign() < 0) throw Error(ErrorCode::kWeightMismatch, "negative weight");
    total += w;
  }
  if (total != RealSqrt2(1)) throw Error(ErrorCode::kWeightMismatch, "weights sum to " + to_string(total));
  const auto locals = detail::local_inputs_by_joint(l);
  std::vector<Behaviour::Row> rows(l.input_count());
  std::vector<int> a(static_cast<std::size_t>(l.players()));
  for (std::size_t k = 0; k < s.branches.size(); ++k) {
    validate(s.branches[k], l);
    if (s.weights[k].is_zero()) continue;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (int p = 0; p < l.players(); ++p) a[p] = s.branches[k].outputs[p][locals[x][p]];
      rows[x].emplace_back(static_cast<std::uint32_t>(l.encode_output(a)), s.weights[k]);
    }
  }
  return make_behaviour(l, std::move(rows));
}

inline Behaviour evaluate(const PRWiring& w, const Layout& l) {
  detail::check_players(l, w.settings.size(), "PR wiring settings");
  detail::check_players(l, w.outputs.size(), "PR wiring outputs");
  const int nboxes = static_cast<int>(w.boxes.size());
  // Incident boxes of each player, with the port (0 = x side, 1 = y side).
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(l.players()));
  for (int k = 0; k < nboxes; ++k) {
    const auto [p, q] = w.boxes[k];
    if (p < 0 || q < 0 || p >= l.players() || q >= l.players() || p == q) {
      throw Error(ErrorCode::kMalformed, "PR box must join two distinct players");
    }
    incident[p].emplace_back(k, 0);
    incident[q].emplace_back(k, 1);
  }
  for (int p = 0; p < l.players(); ++p) {
    const int li = l.local_input_count(p);
    if (static_cast<int>(w.settings[p].size()) != li || static_cast<int>(w.outputs[p].size()) != li) {
      throw Error(ErrorCode::kAlphabetMismatch, "PR wiring tables must cover every local input");
    }
    for (int x = 0; x < li; ++x) {
      if (w.settings[p][x].size() != incident[p].size()) {
        throw Error(ErrorCode::kMalformed, "one setting per incident box");
      }
      if (w.outputs[p][x].size() != (std::size_t{1} << incident[p].size())) {
        throw Error(ErrorCode::kMalformed, "output table must cover all box outcomes");
      }
      for (int o : w.outputs[p][x]) {
        if (o < 0 || o >= l.output_sizes[p]) throw Error(ErrorCode::kAlphabetMismatch, "PR wiring output out of range");
      }
    }
  }
  const RealSqrt2 weight = RealSqrt2(make_rational(1, 1L << nboxes));
  const auto locals = detail::local_inputs_by_joint(l);
  std::vector<Behaviour::Row> rows(l.input_count());
  std::vector<int> box_x(static_cast<std::size_t>(nboxes)), box_y(static_cast<std::size_t>(nboxes));
  std::vector<int> a(static_cast<std::size_t>(l.players()));
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (int p = 0; p < l.players(); ++p) {
      for (std::size_t j = 0; j < incident[p].size(); ++j) {
        const auto [k, port] = incident[p][j];
        (port == 0 ? box_x : box_y)[k] = w.settings[p][locals[x][p]][j];
      }
    }
    // The x-side bit of every box ranges freely; the y side is forced.
    for (unsigned alpha = 0; alpha < (1u << nboxes); ++alpha) {
      for (int p = 0; p < l.players(); ++p) {
        unsigned packed = 0;
        for (const auto& [k, port] : incident[p]) {
          const int ax = (alpha >> k) & 1;
          const int bit = port == 0 ? ax : ax ^ (box_x[k] & box_y[k]);
          packed = (packed << 1) | static_cast<unsigned>(bit);
        }
        a[p] = w.outputs[p][locals[x][p]][packed];
      }
      rows[x].emplace_back(static_cast<std::uint32_t>(l.encode_output(a)), weight);
    }
  }
  return make_behaviour(l, std::move(rows));
}

inline Behaviour evaluate(const QuantumStrategy& s, const Layout& l) {
  detail::check_players(l, s.qubits.size(), "quantum strategy qubits");
  detail::check_players(l, s.circuits.size(), "quantum strategy circuits");
  const StateVector initial = tensor(s.resources);
  const int n = initial.qubits();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < l.players(); ++p) {
    for (int q : s.qubits[p]) {
      if (q < 0 || q >= n || owner[q] != -1) throw Error(ErrorCode::kMalformed, "each qubit needs exactly one owner");
      owner[q] = p;
    }
  }
  for (int q = 0; q < n; ++q) {
    if (owner[q] == -1) throw Error(ErrorCode::kMalformed, "unowned qubit " + std::to_string(q));
  }
  for (int p = 0; p < l.players(); ++p) {
    const int li = l.local_input_count(p);
    if (static_cast<int>(s.circuits[p].size()) != li) {
      throw Error(ErrorCode::kAlphabetMismatch, "one circuit per local input");
    }
    const std::size_t outcomes = std::size_t{1} << s.qubits[p].size();
    const bool identity = s.outputs.empty() || s.outputs[p].empty();
    if (identity && outcomes != static_cast<std::size_t>(l.output_sizes[p])) {
      throw Error(ErrorCode::kAlphabetMismatch, "measured bits do not match output alphabet of player " +
                                                    std::to_string(p));
    }
    if (!identity) {
      if (static_cast<int>(s.outputs[p].size()) != li) throw Error(ErrorCode::kAlphabetMismatch, "one output table per input");
      for (const auto& t : s.outputs[p]) {
        if (t.size() != outcomes) throw Error(ErrorCode::kMalformed, "output table must cover all outcomes");
        for (int o : t) {
          if (o < 0 || o >= l.output_sizes[p]) throw Error(ErrorCode::kAlphabetMismatch, "output out of range");
        }
      }
    }
  }

  const auto locals = detail::local_inputs_by_joint(l);
  std::vector<Behaviour::Row> rows(l.input_count());
  std::vector<int> a(static_cast<std::size_t>(l.players()));
  for (std::size_t x = 0; x < rows.size(); ++x) {
    StateVector st = initial;
    for (int p = 0; p < l.players(); ++p) {
      for (const auto& op : s.circuits[p][locals[x][p]]) {
        std::vector<int> global;
        for (int t : op.targets) {
          if (t < 0 || t >= static_cast<int>(s.qubits[p].size())) {
            throw Error(ErrorCode::kBadTargets, "circuit acts outside the player's qubits");
          }
          global.push_back(s.qubits[p][t]);
        }
        st = apply(st, op.gate, global);
      }
    }
    const auto probs = measure_all(st);
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k].is_zero()) continue;
      for (int p = 0; p < l.players(); ++p) {
        unsigned bits = 0;
        for (int q : s.qubits[p]) bits = (bits << 1) | ((k & qubit_mask(n, q)) ? 1u : 0u);
        const bool identity = s.outputs.empty() || s.outputs[p].empty();
        a[p] = identity ? static_cast<int>(bits) : s.outputs[p][locals[x][p]][bits];
      }
      rows[x].emplace_back(static_cast<std::uint32_t>(l.encode_output(a)), probs[k]);
    }
  }
  return make_behaviour(l, std::move(rows));
}

inline Behaviour evaluate(const Strategy& s, const Layout& l) {
  return std::visit([&](const auto& v) { return evaluate(v, l); }, s);
}

inline Behaviour evaluate(const Strategy& s, const Game& g) { return evaluate(s, g.layout); }

// ---------------------------------------------------------------------------
// Winning probabilities.

enum class Mode { kWorst, kAverage };

inline const char* mode_name(Mode m) { return m == Mode::kWorst ? "worst" : "average"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "worst") return Mode::kWorst;
  if (s == "average") return Mode::kAverage;
  throw Error(ErrorCode::kParse, "mode must be worst or average, got '" + s + "'");
}

struct InstanceWin {
  std::size_t input;
  RealSqrt2 probability;
};

inline std::vector<InstanceWin> instance_win_probabilities(const Behaviour& b, const Game& g) {
  if (!(b.layout() == g.layout)) throw Error(ErrorCode::kAlphabetMismatch, "behaviour does not fit game " + g.id);
  std::vector<InstanceWin> out;
  for (std::size_t x : enumerate_instances(g)) {
    const auto xs = g.layout.decode_input(x);
    RealSqrt2 p;
    for (const auto& [a, q] : b.row(x)) {
      if (g.win(xs, g.layout.decode_output(a))) p += q;
    }
    out.push_back({x, std::move(p)});
  }
  return out;
}

inline RealSqrt2 aggregate(std::span<const InstanceWin> per, Mode mode) {
  if (per.empty()) throw Error(ErrorCode::kMalformed, "game has no instances");
  if (mode == Mode::kWorst) {
    RealSqrt2 worst = per[0].probability;
    for (const auto& w : per) worst = std::min(worst, w.probability);
    return worst;
  }
  RealSqrt2 total;
  for (const auto& w : per) total += w.probability;
  return total / RealSqrt2(static_cast<long>(per.size()));
}

inline RealSqrt2 win_probability(const Behaviour& b, const Game& g, Mode mode) {
  return aggregate(instance_win_probabilities(b, g), mode);
}

// ---------------------------------------------------------------------------
// Registry.

inline PRWiring ghz_mermin_prbox() {
  PRWiring w;
  w.boxes = {{0, 1}};
  w.settings = {{{0}, {1}}, {{0}, {1}}, {{}, {}}};
  w.outputs = {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}, {{0}, {1}}};
  return w;
}

inline PRWiring majority_prbox() {
  PRWiring w;
  w.boxes = {{0, 1}, {1, 2}, {0, 2}};
  // Each player feeds its bit to both incident boxes and XORs the outcomes.
  const std::vector<std::vector<int>> xor2 = {{0, 1, 1, 0}, {0, 1, 1, 0}};
  w.settings.assign(3, {{0, 0}, {1, 1}});
  w.outputs.assign(3, xor2);
  return w;
}

namespace detail {

inline QuantumStrategy single_resource_circuits(StateVector state,
                                                std::vector<QuantumOp> on0,
                                                std::vector<QuantumOp> on1) {
  QuantumStrategy s;
  s.resources.push_back(std::move(state));
  s.qubits = {{0}, {1}, {2}};
  s.circuits.assign(3, {on0, on1});
  return s;
}

}  // namespace detail

// Input 0 measures X, input 1 measures -Y (S then H).
inline QuantumStrategy ghz_mermin_quantum() {
  return detail::single_resource_circuits(ghz_state(), {{Gate::H, {0}}},
                                          {{Gate::S, {0}}, {Gate::H, {0}}});
}

// 1/sqrt2 |000> + (1 - i)/2 |111>; input 1 applies S before H.
inline QuantumStrategy majority_quantum() {
  std::vector<ExactAmplitude> amps(8);
  amps[0] = ExactAmplitude::inv_sqrt2();
  amps[7] = ExactAmplitude(make_rational(1, 2), 0, make_rational(-1, 2), 0);
  return detail::single_resource_circuits(StateVector::from_amplitudes(std::move(amps)), {{Gate::H, {0}}},
                                          {{Gate::S, {0}}, {Gate::H, {0}}});
}

namespace detail {

inline std::vector<QuantumOp> bob_pentagram_circuit() {
  return {{Gate::MAJ, {0, 1, 2}}, {Gate::H, {0}}, {Gate::H, {1}}, {Gate::H, {2}}};
}

inline std::vector<std::vector<QuantumOp>> alice_pentagram_circuits() {
  return {{{Gate::H, {0}}}, {}};
}

}  // namespace detail

// c_k stored as bit k of c. Qubits: (Alice1, Bob), (Alice2, Bob), (Alice3, Bob).
inline QuantumStrategy pentagram_quantum(unsigned c) {
  QuantumStrategy s;
  for (int i = 0; i < 3; ++i) s.resources.push_back(((c >> i) & 1) ? epr_prime_state() : epr_state());
  s.qubits = {{0}, {2}, {4}, {1, 3, 5}};
  const auto alice = detail::alice_pentagram_circuits();
  s.circuits = {alice, alice, alice, {detail::bob_pentagram_circuit()}};
  return s;
}

// Three GHZ states (Alice_i, Bob, Charlie).
inline QuantumStrategy main_quantum() {
  QuantumStrategy s;
  s.resources = {ghz_state(), ghz_state(), ghz_state()};
  s.qubits = {{0}, {3}, {6}, {1, 4, 7}, {2, 5, 8}};
  const auto alice = detail::alice_pentagram_circuits();
  const std::vector<QuantumOp> charlie0 = {{Gate::H, {0}}, {Gate::H, {1}}, {Gate::H, {2}}};
  s.circuits = {alice, alice, alice, {detail::bob_pentagram_circuit(), {}}, {charlie0, {}}};
  return s;
}

// One PR box between Alice and Bob; the first row of the square is fixed to
// zeros. Bob's local input is (y*4 + y1*2 + y2)*2 + z.
inline PRWiring combo_prbox() {
  PRWiring w;
  w.boxes = {{0, 1}};
  w.settings = {{{0}, {0}, {1}}, {}, {{}, {}}};
  w.outputs = {{{0, 0}, {0, 1}, {2, 3}}, {}, {{0}, {0}}};
  for (int local = 0; local < 24; ++local) {
    const int z = local % 2;
    const int y = local / 8;
    if (z == 1 || y == 0) {
      w.settings[1].push_back({0});
      w.outputs[1].push_back({0, 0});
    } else {
      w.settings[1].push_back({2 - y});
      w.outputs[1].push_back({0, 1});
    }
  }
  return w;
}

inline std::vector<std::string> strategy_ids() {
  std::vector<std::string> ids = {"ghz_mermin_quantum", "ghz_mermin_prbox", "majority_quantum", "majority_prbox"};
  for (unsigned c = 0; c < 8; ++c) {
    ids.push_back("pentagram_quantum_" + std::to_string(c & 1) + std::to_string((c >> 1) & 1) +
                  std::to_string((c >> 2) & 1));
  }
  ids.push_back("main_quantum");
  ids.push_back("combo_prbox");
  return ids;
}

inline Strategy registry_strategy(const std::string& id) {
  if (id == "ghz_mermin_quantum") return ghz_mermin_quantum();
  if (id == "ghz_mermin_prbox") return ghz_mermin_prbox();
  if (id == "majority_quantum") return majority_quantum();
  if (id == "majority_prbox") return majority_prbox();
  if (id == "main_quantum") return main_quantum();
  if (id == "combo_prbox") return combo_prbox();
  static const std::regex kPentagram(R"(pentagram_quantum(?:_([01])([01])([01])|\(([01]),([01]),([01])\)))");
  std::smatch m;
  if (std::regex_match(id, m, kPentagram)) {
    const int base = m[1].matched ? 1 : 4;
    unsigned c = 0;
    for (int k = 0; k < 3; ++k) c |= static_cast<unsigned>(m[base + k].str()[0] - '0') << k;
    return pentagram_quantum(c);
  }
  throw Error(ErrorCode::kUnknownStrategy, "unknown strategy '" + id + "'");
}

// ---------------------------------------------------------------------------
// JSON.

inline Json strategy_to_json(const DeterministicStrategy& s) {
  return Json{{"kind", "deterministic"}, {"outputs", s.outputs}};
}

inline Json strategy_to_json(const SharedRandomnessStrategy& s) {
  Json branches = Json::array();
  for (std::size_t k = 0; k < s.branches.size(); ++k) {
    branches.push_back(Json{{"weight", to_string(s.weights[k])}, {"outputs", s.branches[k].outputs}});
  }
  Json j{{"kind", "shared_randomness"}, {"branches", std::move(branches)}};
  if (!s.relabelled_slots.empty()) j["relabelled_slots"] = s.relabelled_slots;
  return j;
}

inline Json strategy_to_json(const PRWiring& w) {
  Json boxes = Json::array();
  for (const auto& [p, q] : w.boxes) boxes.push_back({p, q});
  return Json{{"kind", "pr_wiring"}, {"boxes", std::move(boxes)}, {"settings", w.settings}, {"outputs", w.outputs}};
}

inline Json strategy_to_json(const QuantumStrategy& s) {
  Json resources = Json::array();
  for (const auto& r : s.resources) {
    Json amps = Json::object();
    for (std::size_t k = 0; k < r.dim(); ++k) {
      if (!r.amp(k).is_zero()) amps[bitstring(k, r.qubits())] = to_string(r.amp(k));
    }
    resources.push_back(std::move(amps));
  }
  Json circuits = Json::array();
  for (const auto& per_player : s.circuits) {
    Json pc = Json::array();
    for (const auto& circuit : per_player) {
      Json ops = Json::array();
      for (const auto& op : circuit) ops.push_back(Json{{"gate", gate_name(op.gate)}, {"targets", op.targets}});
      pc.push_back(std::move(ops));
    }
    circuits.push_back(std::move(pc));
  }
  Json j{{"kind", "quantum"}, {"resources", std::move(resources)}, {"qubits", s.qubits}, {"circuits", std::move(circuits)}};
  if (!s.outputs.empty()) j["outputs"] = s.outputs;
  return j;
}

inline Json strategy_to_json(const Strategy& s) {
  return std::visit([](const auto& v) { return strategy_to_json(v); }, s);
}

}  // namespace ptlab

#endif  // PTLAB_STRATEGIES_HPP_
