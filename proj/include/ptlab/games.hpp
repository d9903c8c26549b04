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

// Registry of nonlocal games as promise and win predicates over the slot
// layout of behaviour.hpp.
//
// Conventions shared by every game below:
//  * 3-valued inputs written 1..3 in the literature are stored as 0..2.
//  * Multi-bit outputs put the first bit in the most significant position,
//    so Bob's (b1, b2, b3) is the index b1*4 + b2*2 + b3.
//  * A player with no input reads a slot of size 1.

#ifndef PTLAB_GAMES_HPP_
#define PTLAB_GAMES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/behaviour.hpp"
#include "ptlab/error.hpp"

namespace ptlab {

struct Game {
  std::string id;
  Layout layout;
  std::vector<std::string> player_names;
  std::vector<std::string> slot_names;
  std::function<bool(std::span<const int> x)> promise;
  std::function<bool(std::span<const int> x, std::span<const int> a)> win;

  int players() const { return layout.players(); }
};

// Promise-allowed joint inputs as encoded indices, increasing.
inline std::vector<std::size_t> enumerate_instances(const Game& g) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.layout.input_count(); ++x) {
    if (g.promise(g.layout.decode_input(x))) out.push_back(x);
  }
  return out;
}

// Winning joint outputs for each promise instance, as a bitmap per instance.
struct WinTable {
  std::vector<std::size_t> instances;
  std::vector<std::vector<std::uint8_t>> wins;  // wins[i][a]
};

inline WinTable build_win_table(const Game& g) {
  WinTable t;
  t.instances = enumerate_instances(g);
  const std::size_t outputs = g.layout.output_count();
  t.wins.assign(t.instances.size(), std::vector<std::uint8_t>(outputs, 0));
  for (std::size_t i = 0; i < t.instances.size(); ++i) {
    const auto x = g.layout.decode_input(t.instances[i]);
    for (std::size_t a = 0; a < outputs; ++a) {
      t.wins[i][a] = g.win(x, g.layout.decode_output(a)) ? 1 : 0;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Pentagram hypergraph with Bob on the edge {P4, I4, I0, P1}.

enum class PentagramNode : int { P0, P1, P2, P3, P4, I0, I1, I2, I3, I4 };

inline const char* node_name(PentagramNode n) {
  static constexpr std::array<const char*, 10> kNames = {"P0", "P1", "P2", "P3", "P4",
                                                         "I0", "I1", "I2", "I3", "I4"};
  return kNames[static_cast<int>(n)];
}

// Which of Bob's output bits labels a node of his edge; kParityNode is P1,
// whose label b1^b2^b3^1 makes Bob's edge odd.
enum class BobSlot : int { kB1, kB2, kB3, kParityNode };

struct PentagramIncidence {
  std::array<std::array<PentagramNode, 4>, 5> edges;
  int bob_edge;
  // Node owned by Alice_i on input x_i: alice_nodes[i][x_i].
  std::array<std::array<PentagramNode, 2>, 3> alice_nodes;
};

inline const PentagramIncidence& pentagram() {
  using N = PentagramNode;
  static const PentagramIncidence kIncidence{
      {{{N::P0, N::I0, N::I1, N::P2},
        {N::P1, N::I1, N::I2, N::P3},
        {N::P2, N::I2, N::I3, N::P4},
        {N::P3, N::I3, N::I4, N::P0},
        {N::P4, N::I4, N::I0, N::P1}}},
      4,
      {{{N::I2, N::P0}, {N::P3, N::P2}, {N::I1, N::I3}}}};
  return kIncidence;
}

inline std::optional<BobSlot> bob_slot_of(PentagramNode n) {
  switch (n) {
    case PentagramNode::P4: return BobSlot::kB1;
    case PentagramNode::I4: return BobSlot::kB2;
    case PentagramNode::I0: return BobSlot::kB3;
    case PentagramNode::P1: return BobSlot::kParityNode;
    default: return std::nullopt;
  }
}

struct PentagramEdge {
  int edge;           // index into pentagram().edges
  PentagramNode intersection;
  BobSlot bob_slot;
  // Required parity is the XOR of the constants c_k with mask bit k set.
  std::uint8_t parity_mask;
};

inline PentagramEdge pentagram_edge(int x1, int x2, int x3) {
  if (((x1 ^ x2 ^ x3) & 1) != 0 || x1 < 0 || x1 > 1 || x2 < 0 || x2 > 1 || x3 < 0 || x3 > 1) {
    throw Error(ErrorCode::kPromiseViolated, "pentagram edge needs x1^x2^x3 = 0");
  }
  const auto& pg = pentagram();
  const std::array<PentagramNode, 3> alice = {pg.alice_nodes[0][x1], pg.alice_nodes[1][x2],
                                              pg.alice_nodes[2][x3]};
  for (int e = 0; e < 5; ++e) {
    if (e == pg.bob_edge) continue;
    const auto& nodes = pg.edges[e];
    int hits = 0;
    std::optional<PentagramNode> rest;
    for (auto n : nodes) {
      if (std::find(alice.begin(), alice.end(), n) != alice.end()) {
        ++hits;
      } else {
        rest = n;
      }
    }
    if (hits != 3) continue;
    const BobSlot slot = *bob_slot_of(*rest);
    // The parity constant of each Alices' edge follows the Bob slot it meets.
    const std::uint8_t mask = slot == BobSlot::kParityNode ? 0b111
                              : slot == BobSlot::kB1       ? 0b001
                              : slot == BobSlot::kB2       ? 0b010
                                                           : 0b100;
    return PentagramEdge{e, *rest, slot, mask};
  }
  throw Error(ErrorCode::kInternalInconsistency, "no Alices' edge for input");
}

// Value Bob assigns to the node of his edge that the Alices' edge meets.
inline int bob_label(BobSlot slot, int bob_output) {
  const int b1 = (bob_output >> 2) & 1, b2 = (bob_output >> 1) & 1, b3 = bob_output & 1;
  switch (slot) {
    case BobSlot::kB1: return b1;
    case BobSlot::kB2: return b2;
    case BobSlot::kB3: return b3;
    case BobSlot::kParityNode: return b1 ^ b2 ^ b3 ^ 1;
  }
  return 0;
}

// c_k stored as bit k of c (c1 is bit 0).
inline int required_parity(const PentagramEdge& e, unsigned c) {
  return __builtin_parity(e.parity_mask & c);
}

// Number of 0/1 labellings of the 10 nodes giving every edge the parity in
// `edge_parity`, by brute force over all 2^10.
inline int count_satisfying_labellings(const std::array<int, 5>& edge_parity) {
  const auto& pg = pentagram();
  int count = 0;
  for (unsigned labels = 0; labels < 1024; ++labels) {
    bool ok = true;
    for (int e = 0; e < 5 && ok; ++e) {
      int s = 0;
      for (auto n : pg.edges[e]) s ^= (labels >> static_cast<int>(n)) & 1;
      ok = s == edge_parity[e];
    }
    if (ok) ++count;
  }
  return count;
}

// Edge parities induced by constants c: Bob's edge odd, each Alices' edge
// the XOR of its constants.
inline std::array<int, 5> pentagram_parities(unsigned c) {
  std::array<int, 5> parity{};
  parity[pentagram().bob_edge] = 1;
  for (int x = 0; x < 8; ++x) {
    const int x1 = (x >> 2) & 1, x2 = (x >> 1) & 1, x3 = x & 1;
    if ((x1 ^ x2 ^ x3) != 0) continue;
    const auto e = pentagram_edge(x1, x2, x3);
    parity[e.edge] = required_parity(e, c);
  }
  return parity;
}

// ---------------------------------------------------------------------------
// Game constructors.

inline int majority3(int x, int y, int z) { return (x & y) | (y & z) | (x & z); }

inline Game chsh_game() {
  Game g;
  g.id = "chsh";
  g.layout = Layout::simple({2, 2}, {2, 2});
  g.player_names = {"Alice", "Bob"};
  g.slot_names = {"x", "y"};
  g.promise = [](std::span<const int>) { return true; };
  g.win = [](std::span<const int> x, std::span<const int> a) { return (a[0] ^ a[1]) == (x[0] & x[1]); };
  return g;
}

inline Game ghz_mermin_game() {
  Game g;
  g.id = "ghz_mermin";
  g.layout = Layout::simple({2, 2, 2}, {2, 2, 2});
  g.player_names = {"Alice", "Bob", "Charlie"};
  g.slot_names = {"x", "y", "z"};
  g.promise = [](std::span<const int> x) { return (x[0] ^ x[1] ^ x[2]) == 0; };
  g.win = [](std::span<const int> x, std::span<const int> a) {
    return (a[0] ^ a[1] ^ a[2]) == (x[0] | x[1] | x[2]);
  };
  return g;
}

inline Game equality3_game() {
  Game g;
  g.id = "equality3";
  g.layout = Layout::simple({1, 1, 1}, {2, 2, 2});
  g.player_names = {"Alice", "Bob", "Charlie"};
  g.slot_names = {"x", "y", "z"};
  g.promise = [](std::span<const int>) { return true; };
  g.win = [](std::span<const int>, std::span<const int> a) { return a[0] == a[1] && a[1] == a[2]; };
  return g;
}

inline Game majority_game() {
  Game g;
  g.id = "majority";
  g.layout = Layout::simple({2, 2, 2}, {2, 2, 2});
  g.player_names = {"Alice", "Bob", "Charlie"};
  g.slot_names = {"x", "y", "z"};
  g.promise = [](std::span<const int>) { return true; };
  g.win = [](std::span<const int> x, std::span<const int> a) {
    return (a[0] ^ a[1] ^ a[2]) == majority3(x[0], x[1], x[2]);
  };
  return g;
}

// Two-bit answers extended by parity: row [a1, a2, a1^a2] is even and
// column [b1, b2, b1^b2^1] is odd. Row x and column y meet at row[y], col[x].
inline bool magic_square_wins(int row, int col, int alice, int bob) {
  const int a1 = (alice >> 1) & 1, a2 = alice & 1;
  const int b1 = (bob >> 1) & 1, b2 = bob & 1;
  const std::array<int, 3> r = {a1, a2, a1 ^ a2};
  const std::array<int, 3> c = {b1, b2, b1 ^ b2 ^ 1};
  return r[col] == c[row];
}

inline Game magic_square_game() {
  Game g;
  g.id = "magic_square";
  g.layout = Layout::simple({3, 3}, {4, 4});
  g.player_names = {"Alice", "Bob"};
  g.slot_names = {"row", "column"};
  g.promise = [](std::span<const int>) { return true; };
  g.win = [](std::span<const int> x, std::span<const int> a) { return magic_square_wins(x[0], x[1], a[0], a[1]); };
  return g;
}

// Win test shared by the pentagram game and the z = 0 half of the main game.
inline bool pentagram_wins(int x1, int x2, int x3, int a1, int a2, int a3, int bob, int parity) {
  const auto e = pentagram_edge(x1, x2, x3);
  return (a1 ^ a2 ^ a3 ^ bob_label(e.bob_slot, bob)) == parity;
}

// c_k stored as bit k of c (c1 is bit 0).
inline Game pentagram_tailored_game(unsigned c) {
  if (c > 7) throw Error(ErrorCode::kUnknownGame, "pentagram constants must be 3 bits");
  Game g;
  g.id = "pentagram_tailored_" + std::to_string(c & 1) + std::to_string((c >> 1) & 1) +
         std::to_string((c >> 2) & 1);
  g.layout = Layout::simple({2, 2, 2, 1}, {2, 2, 2, 8});
  g.player_names = {"Alice1", "Alice2", "Alice3", "Bob"};
  g.slot_names = {"x1", "x2", "x3", "none"};
  g.promise = [](std::span<const int> x) { return (x[0] ^ x[1] ^ x[2]) == 0; };
  g.win = [c](std::span<const int> x, std::span<const int> a) {
    const int parity = required_parity(pentagram_edge(x[0], x[1], x[2]), c);
    return pentagram_wins(x[0], x[1], x[2], a[0], a[1], a[2], a[3], parity);
  };
  return g;
}

// Charlie's bits (c1, c2, c3) as the constant mask with c1 at bit 0.
inline unsigned charlie_constants(int charlie_output) {
  const unsigned c1 = (charlie_output >> 2) & 1, c2 = (charlie_output >> 1) & 1, c3 = charlie_output & 1;
  return c1 | (c2 << 1) | (c3 << 2);
}

inline Game main_game() {
  Game g;
  g.id = "main_game";
  g.layout.slot_sizes = {2, 2, 2, 2};
  g.layout.output_sizes = {2, 2, 2, 8, 8};
  g.layout.player_slots = {{0}, {1}, {2}, {3}, {3}};
  g.layout.validate();
  g.player_names = {"Alice1", "Alice2", "Alice3", "Bob", "Charlie"};
  g.slot_names = {"x1", "x2", "x3", "z"};
  g.promise = [](std::span<const int> x) {
    if (x[3] == 0) return (x[0] ^ x[1] ^ x[2]) == 0;
    return x[0] == 1 && x[1] == 1 && x[2] == 1;
  };
  g.win = [](std::span<const int> x, std::span<const int> a) {
    if (x[3] == 1) {
      for (int i = 0; i < 3; ++i) {
        const int bit = 2 - i;
        if (a[i] != ((a[3] >> bit) & 1) || a[i] != ((a[4] >> bit) & 1)) return false;
      }
      return true;
    }
    const int c1 = (a[4] >> 2) & 1, c2 = (a[4] >> 1) & 1, c3 = a[4] & 1;
    const int parity = (c1 & (x[0] ^ 1)) ^ (c2 & (x[1] ^ 1)) ^ (c3 & (x[2] ^ 1));
    return pentagram_wins(x[0], x[1], x[2], a[0], a[1], a[2], a[3], parity);
  };
  return g;
}

// Bob's private symbol packs (y, y1, y2) as y*4 + y1*2 + y2.
inline Game square_equality_combo_game() {
  Game g;
  g.id = "square_equality_combo";
  g.layout.slot_sizes = {3, 12, 2};
  g.layout.output_sizes = {4, 4, 4};
  g.layout.player_slots = {{0}, {1, 2}, {2}};
  g.layout.validate();
  g.player_names = {"Alice", "Bob", "Charlie"};
  g.slot_names = {"x", "y_y1_y2", "z"};
  g.promise = [](std::span<const int> x) { return x[2] == 0 || x[0] == 0; };
  g.win = [](std::span<const int> x, std::span<const int> a) {
    if (x[2] == 1) return a[0] == a[1] && a[1] == a[2];
    const int y = x[1] / 4;
    const int y12 = x[1] % 4;
    return y12 != a[2] || magic_square_wins(x[0], y, a[0], a[1]);
  };
  return g;
}

inline std::vector<std::string> game_ids() {
  std::vector<std::string> ids = {"chsh", "ghz_mermin", "equality3", "majority", "magic_square"};
  for (unsigned c = 0; c < 8; ++c) ids.push_back(pentagram_tailored_game(c).id);
  ids.push_back("main_game");
  ids.push_back("square_equality_combo");
  return ids;
}

// Accepts "pentagram_tailored_011" and "pentagram_tailored(0,1,1)" (c1 first).
inline std::optional<unsigned> parse_pentagram_constants(const std::string& id) {
  static const std::regex kForm(R"(pentagram_tailored(?:_([01])([01])([01])|\(([01]),([01]),([01])\)))");
  std::smatch m;
  if (!std::regex_match(id, m, kForm)) return std::nullopt;
  const int base = m[1].matched ? 1 : 4;
  unsigned c = 0;
  for (int k = 0; k < 3; ++k) c |= static_cast<unsigned>(m[base + k].str()[0] - '0') << k;
  return c;
}

inline Game build_game(const std::string& id) {
  if (id == "chsh") return chsh_game();
  if (id == "ghz_mermin") return ghz_mermin_game();
  if (id == "equality3") return equality3_game();
  if (id == "majority") return majority_game();
  if (id == "magic_square") return magic_square_game();
  if (id == "main_game") return main_game();
  if (id == "square_equality_combo") return square_equality_combo_game();
  if (auto c = parse_pentagram_constants(id)) return pentagram_tailored_game(*c);
  throw Error(ErrorCode::kUnknownGame, "unknown game '" + id + "'");
}

// {"id", "players", "inputs", "outputs", ["slots"], "instances": [[x...]],
//  "wins": [[[a...], ...] per instance]}
inline Json game_to_json(const Game& g) {
  Json j;
  j["id"] = g.id;
  const Json l = layout_to_json(g.layout);
  for (const auto& [k, v] : l.items()) j[k] = v;
  j["player_names"] = g.player_names;
  j["slot_names"] = g.slot_names;
  const WinTable t = build_win_table(g);
  Json instances = Json::array();
  Json wins = Json::array();
  for (std::size_t i = 0; i < t.instances.size(); ++i) {
    instances.push_back(g.layout.decode_input(t.instances[i]));
    Json w = Json::array();
    for (std::size_t a = 0; a < t.wins[i].size(); ++a) {
      if (t.wins[i][a]) w.push_back(g.layout.decode_output(a));
    }
    wins.push_back(std::move(w));
  }
  j["instances"] = std::move(instances);
  j["wins"] = std::move(wins);
  return j;
}

}  // namespace ptlab

#endif  // PTLAB_GAMES_HPP_
