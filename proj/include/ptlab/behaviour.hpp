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

// Behaviours ("boxes"): exact conditional distributions P(a_1..a_N | x) over
// the full input rectangle.
//
// Inputs are organised in *slots*. Each player reads one or more slots and
// several players may read the same slot (Bob and Charlie both receive the
// common bit z in the five-player game). A joint input assigns a value to
// every slot; a joint output assigns a value to every player. Both are
// encoded mixed-radix with the first coordinate most significant.
//
// Nonsignalling is checked per slot: the marginal of the players that do not
// read slot s must not depend on the value of s.

#ifndef PTLAB_BEHAVIOUR_HPP_
#define PTLAB_BEHAVIOUR_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"

namespace ptlab {

using Json = nlohmann::ordered_json;

// Mixed-radix helpers; digit 0 is the most significant.
inline std::size_t radix_product(std::span<const int> sizes) {
  std::size_t n = 1;
  for (int s : sizes) n *= static_cast<std::size_t>(s);
  return n;
}

inline std::vector<int> radix_decode(std::size_t index, std::span<const int> sizes) {
  std::vector<int> digits(sizes.size());
  for (std::size_t k = sizes.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % static_cast<std::size_t>(sizes[k]));
    index /= static_cast<std::size_t>(sizes[k]);
  }
  return digits;
}

inline std::size_t radix_encode(std::span<const int> digits, std::span<const int> sizes) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    index = index * static_cast<std::size_t>(sizes[k]) + static_cast<std::size_t>(digits[k]);
  }
  return index;
}

// Alphabets of a scenario.
struct Layout {
  std::vector<int> slot_sizes;                // input alphabet size per slot
  std::vector<int> output_sizes;              // output alphabet size per player
  std::vector<std::vector<int>> player_slots;  // slots read by each player, in order

  // One private slot per player.
  static Layout simple(std::vector<int> input_sizes, std::vector<int> output_sizes) {
    Layout l;
    l.slot_sizes = std::move(input_sizes);
    l.output_sizes = std::move(output_sizes);
    for (std::size_t p = 0; p < l.output_sizes.size(); ++p) {
      l.player_slots.push_back({static_cast<int>(p)});
    }
    l.validate();
    return l;
  }

  int players() const { return static_cast<int>(output_sizes.size()); }
  int slots() const { return static_cast<int>(slot_sizes.size()); }
  std::size_t input_count() const { return radix_product(slot_sizes); }
  std::size_t output_count() const { return radix_product(output_sizes); }

  bool is_simple() const {
    if (player_slots.size() != slot_sizes.size()) return false;
    for (std::size_t p = 0; p < player_slots.size(); ++p) {
      if (player_slots[p].size() != 1 || player_slots[p][0] != static_cast<int>(p)) return false;
    }
    return true;
  }

  // Number of distinct local inputs of a player.
  int local_input_count(int player) const {
    int n = 1;
    for (int s : player_slots[player]) n *= slot_sizes[s];
    return n;
  }

  int local_input(int player, std::span<const int> joint_input) const {
    int v = 0;
    for (int s : player_slots[player]) v = v * slot_sizes[s] + joint_input[s];
    return v;
  }

  std::vector<int> decode_input(std::size_t index) const { return radix_decode(index, slot_sizes); }
  std::vector<int> decode_output(std::size_t index) const { return radix_decode(index, output_sizes); }
  std::size_t encode_input(std::span<const int> x) const { return radix_encode(x, slot_sizes); }
  std::size_t encode_output(std::span<const int> a) const { return radix_encode(a, output_sizes); }

  bool reads(int player, int slot) const {
    const auto& ps = player_slots[player];
    return std::find(ps.begin(), ps.end(), slot) != ps.end();
  }

  void validate() const {
    if (output_sizes.empty()) throw Error(ErrorCode::kMalformed, "layout has no players");
    if (player_slots.size() != output_sizes.size()) {
      throw Error(ErrorCode::kMalformed, "player_slots size differs from player count");
    }
    for (int s : slot_sizes) {
      if (s < 1) throw Error(ErrorCode::kMalformed, "empty input alphabet");
    }
    for (int o : output_sizes) {
      if (o < 1) throw Error(ErrorCode::kMalformed, "empty output alphabet");
    }
    for (const auto& ps : player_slots) {
      for (int s : ps) {
        if (s < 0 || s >= slots()) throw Error(ErrorCode::kMalformed, "player reads unknown slot");
      }
    }
  }

  friend bool operator==(const Layout&, const Layout&) = default;
};

// Validated, immutable behaviour. Each row (one per joint input) is a sorted
// list of (joint output, probability) with zero entries dropped.
class Behaviour {
 public:
  using Entry = std::pair<std::uint32_t, RealSqrt2>;
  using Row = std::vector<Entry>;

  Behaviour() = default;

  const Layout& layout() const { return layout_; }
  int players() const { return layout_.players(); }
  std::size_t input_count() const { return rows_.size(); }
  std::span<const Entry> row(std::size_t input) const { return rows_[input]; }

  RealSqrt2 prob(std::size_t input, std::size_t output) const {
    const Row& r = rows_[input];
    auto it = std::lower_bound(r.begin(), r.end(), output,
                               [](const Entry& e, std::size_t o) { return e.first < o; });
    if (it == r.end() || it->first != output) return RealSqrt2();
    return it->second;
  }

  friend bool operator==(const Behaviour& x, const Behaviour& y) {
    return x.layout_ == y.layout_ && x.rows_ == y.rows_;
  }

  friend Behaviour make_behaviour(Layout layout, std::vector<Row> rows);

 private:
  Layout layout_;
  std::vector<Row> rows_;
};

// Sorts, merges duplicate outputs, drops zeros and validates.
inline Behaviour make_behaviour(Layout layout, std::vector<Behaviour::Row> rows) {
  layout.validate();
  const std::size_t inputs = layout.input_count();
  const std::size_t outputs = layout.output_count();
  if (rows.size() < inputs) {
    throw Error(ErrorCode::kMissingInput, "no distribution for joint input " + std::to_string(rows.size()));
  }
  if (rows.size() > inputs) throw Error(ErrorCode::kMalformed, "more rows than joint inputs");
  for (std::size_t x = 0; x < inputs; ++x) {
    auto& r = rows[x];
    std::sort(r.begin(), r.end(), [](const auto& e, const auto& f) { return e.first < f.first; });
    Behaviour::Row merged;
    merged.reserve(r.size());
    for (auto& e : r) {
      if (e.first >= outputs) throw Error(ErrorCode::kMalformed, "output index out of range");
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    RealSqrt2 total;
    Behaviour::Row kept;
    kept.reserve(merged.size());
    for (auto& e : merged) {
      if (e.second.sign() < 0) {
        throw Error(ErrorCode::kNegativeProbability, "negative probability at input " + std::to_string(x));
      }
      total += e.second;
      if (!e.second.is_zero()) kept.push_back(std::move(e));
    }
    if (total != RealSqrt2(1)) {
      throw Error(ErrorCode::kNotNormalized,
                  "input " + std::to_string(x) + " sums to " + to_string(total));
    }
    r = std::move(kept);
  }
  Behaviour b;
  b.layout_ = std::move(layout);
  b.rows_ = std::move(rows);
  return b;
}

// Dense construction from a probability function p(x, a).
inline Behaviour make_behaviour(
    const Layout& layout,
    const std::function<RealSqrt2(std::span<const int>, std::span<const int>)>& p) {
  std::vector<Behaviour::Row> rows(layout.input_count());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    const auto xs = layout.decode_input(x);
    for (std::size_t a = 0; a < layout.output_count(); ++a) {
      RealSqrt2 v = p(xs, layout.decode_output(a));
      if (!v.is_zero()) rows[x].emplace_back(static_cast<std::uint32_t>(a), std::move(v));
    }
  }
  return make_behaviour(layout, std::move(rows));
}

// Sub-behaviour of a set of players. `slots` are the slots they read (sorted);
// `box` is a behaviour over those slots and players.
struct Marginal {
  std::vector<int> players;
  std::vector<int> slots;
  Behaviour box;
};

namespace detail {

// Projects a joint output index onto a subset of players.
class OutputProjector {
 public:
  OutputProjector(const Layout& layout, std::span<const int> subset)
      : subset_(subset.begin(), subset.end()) {
    strides_.assign(layout.output_sizes.size(), 1);
    for (std::size_t k = layout.output_sizes.size(); k-- > 1;) {
      strides_[k - 1] = strides_[k] * static_cast<std::size_t>(layout.output_sizes[k]);
    }
    sizes_ = layout.output_sizes;
  }

  std::size_t operator()(std::size_t a) const {
    std::size_t r = 0;
    for (int p : subset_) {
      const std::size_t digit = (a / strides_[p]) % static_cast<std::size_t>(sizes_[p]);
      r = r * static_cast<std::size_t>(sizes_[p]) + digit;
    }
    return r;
  }

 private:
  std::vector<int> subset_;
  std::vector<std::size_t> strides_;
  std::vector<int> sizes_;
};

// Sorted sparse marginal of a row onto a player subset.
inline Behaviour::Row project_row(std::span<const Behaviour::Entry> row, const OutputProjector& proj) {
  Behaviour::Row out;
  out.reserve(row.size());
  for (const auto& [a, p] : row) out.emplace_back(static_cast<std::uint32_t>(proj(a)), p);
  std::sort(out.begin(), out.end(), [](const auto& e, const auto& f) { return e.first < f.first; });
  Behaviour::Row merged;
  merged.reserve(out.size());
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

inline std::vector<int> complement(int n, std::span<const int> subset) {
  std::vector<int> rest;
  for (int p = 0; p < n; ++p) {
    if (std::find(subset.begin(), subset.end(), p) == subset.end()) rest.push_back(p);
  }
  return rest;
}

}  // namespace detail

// Marginal over `subset` (player indices, any order, reported in that order).
// Slots not read by the subset are fixed to `fixed_inputs[slot]`; entries for
// slots read by the subset are ignored.
inline Marginal marginalize(const Behaviour& b, std::vector<int> subset,
                            std::span<const int> fixed_inputs) {
  const Layout& l = b.layout();
  if (subset.empty()) throw Error(ErrorCode::kMalformed, "empty marginal subset");
  if (static_cast<int>(fixed_inputs.size()) != l.slots()) {
    throw Error(ErrorCode::kMalformed, "fixed_inputs must have one entry per slot");
  }
  std::vector<int> slots;
  for (int p : subset) {
    if (p < 0 || p >= l.players()) throw Error(ErrorCode::kMalformed, "bad player index");
    for (int s : l.player_slots[p]) slots.push_back(s);
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

  Layout sub;
  for (int s : slots) sub.slot_sizes.push_back(l.slot_sizes[s]);
  for (int p : subset) {
    sub.output_sizes.push_back(l.output_sizes[p]);
    std::vector<int> local;
    for (int s : l.player_slots[p]) {
      local.push_back(static_cast<int>(std::find(slots.begin(), slots.end(), s) - slots.begin()));
    }
    sub.player_slots.push_back(std::move(local));
  }

  const detail::OutputProjector proj(l, subset);
  std::vector<Behaviour::Row> rows(sub.input_count());
  std::vector<int> x(fixed_inputs.begin(), fixed_inputs.end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto xs = sub.decode_input(i);
    for (std::size_t k = 0; k < slots.size(); ++k) x[slots[k]] = xs[k];
    rows[i] = detail::project_row(b.row(l.encode_input(x)), proj);
  }
  return Marginal{std::move(subset), std::move(slots), make_behaviour(std::move(sub), std::move(rows))};
}

// Evidence that some players' marginal depends on a slot they do not read.
struct SignallingWitness {
  int slot = 0;
  std::vector<int> observers;     // players not reading `slot`
  std::size_t input_a = 0;        // joint inputs differing only at `slot`
  std::size_t input_b = 0;
  std::size_t observer_output = 0;  // joint output of `observers`
  RealSqrt2 prob_a;
  RealSqrt2 prob_b;
};

struct NsVerdict {
  std::optional<SignallingWitness> violation;
  bool ok() const { return !violation.has_value(); }
};

// Scans slots, then joint inputs with that slot at 0, then the slot's other
// values, in increasing order; reports the first difference.
inline NsVerdict is_nonsignalling(const Behaviour& b) {
  const Layout& l = b.layout();
  for (int s = 0; s < l.slots(); ++s) {
    if (l.slot_sizes[s] < 2) continue;
    std::vector<int> readers;
    for (int p = 0; p < l.players(); ++p) {
      if (l.reads(p, s)) readers.push_back(p);
    }
    const std::vector<int> observers = detail::complement(l.players(), readers);
    if (observers.empty()) continue;
    const detail::OutputProjector proj(l, observers);
    for (std::size_t x = 0; x < l.input_count(); ++x) {
      auto xs = l.decode_input(x);
      if (xs[s] != 0) continue;
      const auto base = detail::project_row(b.row(x), proj);
      for (int v = 1; v < l.slot_sizes[s]; ++v) {
        xs[s] = v;
        const std::size_t y = l.encode_input(xs);
        const auto other = detail::project_row(b.row(y), proj);
        if (base == other) continue;
        // First observer output where the two rows differ.
        std::size_t i = 0, j = 0;
        while (true) {
          const std::size_t oa = i < base.size() ? base[i].first : SIZE_MAX;
          const std::size_t ob = j < other.size() ? other[j].first : SIZE_MAX;
          const std::size_t o = std::min(oa, ob);
          RealSqrt2 pa = oa == o ? base[i].second : RealSqrt2();
          RealSqrt2 pb = ob == o ? other[j].second : RealSqrt2();
          if (pa != pb) {
            return NsVerdict{SignallingWitness{s, observers, x, y, o, std::move(pa), std::move(pb)}};
          }
          if (oa == o) ++i;
          if (ob == o) ++j;
        }
      }
    }
  }
  return NsVerdict{};
}

namespace detail {

// Player's single-party marginal for a fixed joint input.
inline std::vector<RealSqrt2> player_marginal(const Behaviour& b, int player, std::size_t x) {
  const Layout& l = b.layout();
  std::vector<RealSqrt2> m(static_cast<std::size_t>(l.output_sizes[player]));
  const OutputProjector proj(l, std::vector<int>{player});
  for (const auto& [a, p] : b.row(x)) m[proj(a)] += p;
  return m;
}

// Same as deterministic_output_on, without the nonsignalling precondition.
inline std::optional<int> deterministic_output_unchecked(const Behaviour& b, int player, int local_input) {
  const Layout& l = b.layout();
  std::optional<int> seen;
  bool any = false;
  for (std::size_t x = 0; x < l.input_count(); ++x) {
    const auto xs = l.decode_input(x);
    if (l.local_input(player, xs) != local_input) continue;
    any = true;
    const auto m = player_marginal(b, player, x);
    std::optional<int> point;
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (m[o] == RealSqrt2(1)) point = static_cast<int>(o);
    }
    if (!point || (seen && *seen != *point)) return std::nullopt;
    seen = point;
  }
  if (!any) return std::nullopt;
  return seen;
}

}  // namespace detail

// The output the player gives with certainty on `local_input`, if any.
inline std::optional<int> deterministic_output_on(const Behaviour& b, int player, int local_input) {
  const Layout& l = b.layout();
  if (player < 0 || player >= l.players()) throw Error(ErrorCode::kMalformed, "bad player index");
  if (local_input < 0 || local_input >= l.local_input_count(player)) {
    throw Error(ErrorCode::kMalformed, "bad local input");
  }
  if (!is_nonsignalling(b).ok()) {
    throw Error(ErrorCode::kNotNonsignalling, "deterministic_output_on needs a nonsignalling behaviour");
  }
  return detail::deterministic_output_unchecked(b, player, local_input);
}

inline Behaviour convex_mix(std::span<const RealSqrt2> weights, std::span<const Behaviour> boxes) {
  if (weights.size() != boxes.size() || boxes.empty()) {
    throw Error(ErrorCode::kWeightMismatch, "need one weight per behaviour");
  }
  RealSqrt2 total;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw Error(ErrorCode::kWeightMismatch, "negative weight");
    total += w;
  }
  if (total != RealSqrt2(1)) throw Error(ErrorCode::kWeightMismatch, "weights sum to " + to_string(total));
  const Layout& l = boxes[0].layout();
  for (const auto& b : boxes) {
    if (!(b.layout() == l)) throw Error(ErrorCode::kAlphabetMismatch, "behaviours have different alphabets");
  }
  std::vector<Behaviour::Row> rows(l.input_count());
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (weights[k].is_zero()) continue;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (const auto& [a, p] : boxes[k].row(x)) rows[x].emplace_back(a, weights[k] * p);
    }
  }
  return make_behaviour(l, std::move(rows));
}

// ---------------------------------------------------------------------------
// JSON: {"players": N, "inputs": [slot sizes], "outputs": [sizes],
//        "slots": [[...] per player]   (omitted when each player has its own slot)
//        "table": {"x1,...,xM": {"a1,...,aN": "num/den"}}}

namespace detail {

inline std::string join_digits(std::span<const int> digits) {
  std::string s;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(digits[k]);
  }
  return s;
}

inline std::vector<int> split_digits(const std::string& key, std::size_t expected) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw Error(ErrorCode::kParse, "bad key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse, "bad key '" + key + "'");
    }
  }
  if (out.size() != expected) throw Error(ErrorCode::kParse, "key '" + key + "' has wrong arity");
  return out;
}

}  // namespace detail

inline Json layout_to_json(const Layout& l) {
  Json j;
  j["players"] = l.players();
  j["inputs"] = l.slot_sizes;
  j["outputs"] = l.output_sizes;
  if (!l.is_simple()) j["slots"] = l.player_slots;
  return j;
}

inline Layout layout_from_json(const Json& j) {
  try {
    Layout l;
    l.slot_sizes = j.at("inputs").get<std::vector<int>>();
    l.output_sizes = j.at("outputs").get<std::vector<int>>();
    if (j.contains("slots")) {
      l.player_slots = j.at("slots").get<std::vector<std::vector<int>>>();
    } else {
      for (std::size_t p = 0; p < l.output_sizes.size(); ++p) l.player_slots.push_back({static_cast<int>(p)});
    }
    if (j.at("players").get<int>() != l.players()) throw Error(ErrorCode::kParse, "players != outputs size");
    l.validate();
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline Json behaviour_to_json(const Behaviour& b) {
  const Layout& l = b.layout();
  Json j = layout_to_json(l);
  Json table = Json::object();
  for (std::size_t x = 0; x < b.input_count(); ++x) {
    Json row = Json::object();
    for (const auto& [a, p] : b.row(x)) row[detail::join_digits(l.decode_output(a))] = to_string(p);
    table[detail::join_digits(l.decode_input(x))] = std::move(row);
  }
  j["table"] = std::move(table);
  return j;
}

inline Behaviour behaviour_from_json(const Json& j) {
  const Layout l = layout_from_json(j);
  std::vector<Behaviour::Row> rows(l.input_count());
  std::vector<bool> present(rows.size(), false);
  try {
    for (const auto& [key, row] : j.at("table").items()) {
      const auto xs = detail::split_digits(key, l.slot_sizes.size());
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (xs[k] < 0 || xs[k] >= l.slot_sizes[k]) throw Error(ErrorCode::kParse, "input out of range: " + key);
      }
      const std::size_t x = l.encode_input(xs);
      present[x] = true;
      for (const auto& [okey, val] : row.items()) {
        const auto as = detail::split_digits(okey, l.output_sizes.size());
        for (std::size_t k = 0; k < as.size(); ++k) {
          if (as[k] < 0 || as[k] >= l.output_sizes[k]) throw Error(ErrorCode::kParse, "output out of range: " + okey);
        }
        rows[x].emplace_back(static_cast<std::uint32_t>(l.encode_output(as)),
                             parse_real_sqrt2(val.get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  for (std::size_t x = 0; x < present.size(); ++x) {
    if (!present[x]) {
      throw Error(ErrorCode::kMissingInput, "no row for input " + detail::join_digits(l.decode_input(x)));
    }
  }
  return make_behaviour(l, std::move(rows));
}

}  // namespace ptlab

#endif  // PTLAB_BEHAVIOUR_HPP_
