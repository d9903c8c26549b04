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

// Game values. Classical values come from exhaustive enumeration of
// deterministic strategies (plus a minimax LP for the worst case); the
// nonsignalling value comes from an exact LP over the full input rectangle.
// Also the two reductions from majority-game boxes to CHSH boxes.

#ifndef PTLAB_ANALYSIS_HPP_
#define PTLAB_ANALYSIS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ptlab/behaviour.hpp"
#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"
#include "ptlab/games.hpp"
#include "ptlab/lp.hpp"
#include "ptlab/strategies.hpp"

namespace ptlab {

inline constexpr std::uint64_t kMaxStrategies = std::uint64_t{1} << 24;

enum class Model { kDeterministic, kSharedRandomness, kNonsignalling };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::kDeterministic: return "deterministic";
    case Model::kSharedRandomness: return "classical-with-SR";
    case Model::kNonsignalling: return "nonsignalling";
  }
  return "?";
}

struct ValueReport {
  std::string game;
  Mode mode = Mode::kAverage;
  Model model = Model::kDeterministic;
  RealSqrt2 value;
  std::optional<Strategy> strategy;    // classical witness
  std::optional<Behaviour> behaviour;  // nonsignalling witness
  std::optional<LpVerdict> lp;         // certificate, when an LP was involved
  std::string method;
  std::uint64_t strategies_enumerated = 0;
};

// ---------------------------------------------------------------------------
// Deterministic strategy space: player p picks one of O_p^{I_p} local tables.
// Index order is mixed radix with player 0 most significant and, inside a
// player's table, local input 0 most significant.

class StrategySpace {
 public:
  explicit StrategySpace(const Layout& l) : layout_(l) {
    for (int p = 0; p < l.players(); ++p) {
      std::uint64_t c = 1;
      for (int i = 0; i < l.local_input_count(p); ++i) {
        c *= static_cast<std::uint64_t>(l.output_sizes[p]);
        if (c > (std::uint64_t{1} << 62)) break;
      }
      counts_.push_back(c);
    }
  }

  // Saturates at 2^63.
  std::uint64_t size() const { return size_excluding(-1); }

  std::uint64_t size_excluding(int skip) const {
    std::uint64_t n = 1;
    for (int p = 0; p < static_cast<int>(counts_.size()); ++p) {
      if (p == skip) continue;
      if (n > (std::uint64_t{1} << 63) / counts_[p]) return std::uint64_t{1} << 63;
      n *= counts_[p];
    }
    return n;
  }

  std::uint64_t count(int p) const { return counts_[p]; }

  std::vector<int> local_table(int p, std::uint64_t index) const {
    const int li = layout_.local_input_count(p);
    std::vector<int> t(static_cast<std::size_t>(li));
    for (int i = li; i-- > 0;) {
      t[i] = static_cast<int>(index % static_cast<std::uint64_t>(layout_.output_sizes[p]));
      index /= static_cast<std::uint64_t>(layout_.output_sizes[p]);
    }
    return t;
  }

  std::vector<std::uint64_t> split(std::uint64_t index) const {
    std::vector<std::uint64_t> parts(counts_.size());
    for (std::size_t p = counts_.size(); p-- > 0;) {
      parts[p] = index % counts_[p];
      index /= counts_[p];
    }
    return parts;
  }

  DeterministicStrategy strategy(std::uint64_t index) const {
    DeterministicStrategy s;
    const auto parts = split(index);
    for (int p = 0; p < static_cast<int>(counts_.size()); ++p) s.outputs.push_back(local_table(p, parts[p]));
    return s;
  }

 private:
  Layout layout_;
  std::vector<std::uint64_t> counts_;
};

namespace detail {

// Precomputed scoring data: for instance i, player p's local input, the
// output stride and the win bitmap over joint outputs.
struct Scorer {
  const Layout* layout;
  std::vector<std::size_t> instances;
  std::vector<std::vector<int>> local;  // [instance][player]
  std::vector<std::size_t> stride;      // output stride of each player
  std::vector<std::vector<std::uint8_t>> wins;

  explicit Scorer(const Game& g) : layout(&g.layout) {
    const WinTable t = build_win_table(g);
    instances = t.instances;
    wins = t.wins;
    const Layout& l = g.layout;
    for (std::size_t x : instances) {
      const auto xs = l.decode_input(x);
      std::vector<int> li;
      for (int p = 0; p < l.players(); ++p) li.push_back(l.local_input(p, xs));
      local.push_back(std::move(li));
    }
    stride.assign(static_cast<std::size_t>(l.players()), 1);
    for (int p = l.players() - 1; p-- > 0;) stride[p] = stride[p + 1] * static_cast<std::size_t>(l.output_sizes[p + 1]);
  }

  std::uint64_t pattern(const std::vector<std::vector<int>>& tables) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      std::size_t a = 0;
      for (std::size_t p = 0; p < tables.size(); ++p) a += static_cast<std::size_t>(tables[p][local[i][p]]) * stride[p];
      if (wins[i][a]) mask |= std::uint64_t{1} << i;
    }
    return mask;
  }
};

struct EnumerationResult {
  std::uint64_t best_index = 0;
  int best_wins = -1;
  std::map<std::uint64_t, std::uint64_t> first_index_of_pattern;
};

inline EnumerationResult enumerate_range(const Scorer& scorer, const StrategySpace& space, std::uint64_t begin,
                                         std::uint64_t end, bool collect_patterns) {
  EnumerationResult r;
  const int players = scorer.layout->players();
  // Local tables are decoded once per player and index.
  std::vector<std::vector<std::vector<int>>> tables(static_cast<std::size_t>(players));
  for (int p = 0; p < players; ++p) {
    for (std::uint64_t k = 0; k < space.count(p); ++k) tables[p].push_back(space.local_table(p, k));
  }
  std::vector<std::vector<int>> chosen(static_cast<std::size_t>(players));
  for (std::uint64_t s = begin; s < end; ++s) {
    const auto parts = space.split(s);
    for (int p = 0; p < players; ++p) chosen[p] = tables[p][parts[p]];
    const std::uint64_t mask = scorer.pattern(chosen);
    const int w = std::popcount(mask);
    if (w > r.best_wins) {
      r.best_wins = w;
      r.best_index = s;
    }
    if (collect_patterns) r.first_index_of_pattern.emplace(mask, s);
  }
  return r;
}

inline EnumerationResult enumerate_all(const Scorer& scorer, const StrategySpace& space, bool collect_patterns,
                                       int jobs) {
  const std::uint64_t total = space.size();
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<EnumerationResult> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j) {
    const std::uint64_t b = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t e = total * static_cast<std::uint64_t>(j + 1) / static_cast<std::uint64_t>(jobs);
    if (jobs == 1) {
      parts[0] = enumerate_range(scorer, space, b, e, collect_patterns);
    } else {
      threads.emplace_back([&, j, b, e] { parts[j] = enumerate_range(scorer, space, b, e, collect_patterns); });
    }
  }
  for (auto& t : threads) t.join();
  // Ranges are ordered, so the first strict improvement keeps the lowest index.
  EnumerationResult merged;
  for (auto& part : parts) {
    if (part.best_wins > merged.best_wins) {
      merged.best_wins = part.best_wins;
      merged.best_index = part.best_index;
    }
    for (const auto& [mask, index] : part.first_index_of_pattern) merged.first_index_of_pattern.emplace(mask, index);
  }
  return merged;
}

// Average value when one player's table is chosen per local input as a best
// response to the others; exact because the average is a sum over instances
// and each instance involves exactly one local input of the responder.
inline std::pair<int, DeterministicStrategy> best_response_search(const Scorer& scorer, const StrategySpace& space,
                                                                  int responder, std::uint64_t* enumerated) {
  const Layout& l = *scorer.layout;
  const int players = l.players();
  const int li = l.local_input_count(responder);
  std::vector<std::vector<std::size_t>> by_local(static_cast<std::size_t>(li));
  for (std::size_t i = 0; i < scorer.instances.size(); ++i) by_local[scorer.local[i][responder]].push_back(i);

  std::vector<int> others;
  for (int p = 0; p < players; ++p) {
    if (p != responder) others.push_back(p);
  }
  std::uint64_t total = 1;
  for (int p : others) total *= space.count(p);

  int best = -1;
  DeterministicStrategy witness;
  std::vector<std::vector<int>> tables(static_cast<std::size_t>(players));
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t rest = s;
    for (std::size_t k = others.size(); k-- > 0;) {
      const int p = others[k];
      tables[p] = space.local_table(p, rest % space.count(p));
      rest /= space.count(p);
    }
    int wins = 0;
    std::vector<int> response(static_cast<std::size_t>(li), 0);
    for (int r = 0; r < li; ++r) {
      int best_here = -1;
      for (int o = 0; o < l.output_sizes[responder]; ++o) {
        int w = 0;
        for (std::size_t i : by_local[r]) {
          std::size_t a = static_cast<std::size_t>(o) * scorer.stride[responder];
          for (int p : others) a += static_cast<std::size_t>(tables[p][scorer.local[i][p]]) * scorer.stride[p];
          w += scorer.wins[i][a];
        }
        if (w > best_here) {
          best_here = w;
          response[r] = o;
        }
      }
      wins += best_here;
    }
    if (wins > best) {
      best = wins;
      tables[responder] = response;
      witness.outputs = tables;
    }
  }
  *enumerated = total;
  return {best, witness};
}

}  // namespace detail

// Exact classical value. Average mode maximises over deterministic
// strategies; worst mode solves the minimax LP over shared randomness.
inline ValueReport classical_value(const Game& g, Mode mode, int jobs = 1) {
  const detail::Scorer scorer(g);
  const StrategySpace space(g.layout);
  ValueReport rep;
  rep.game = g.id;
  rep.mode = mode;
  const long n_inst = static_cast<long>(scorer.instances.size());
  if (n_inst == 0) throw Error(ErrorCode::kMalformed, "game has no instances");

  if (space.size() > kMaxStrategies || n_inst > 64) {
    if (mode == Mode::kWorst) {
      throw Error(ErrorCode::kSpaceTooLarge, g.id + " has " + std::to_string(space.size()) +
                                                 " deterministic strategies; worst mode needs full enumeration");
    }
    int responder = 0;
    for (int p = 1; p < g.players(); ++p) {
      if (space.count(p) > space.count(responder)) responder = p;
    }
    if (space.size_excluding(responder) > kMaxStrategies) {
      throw Error(ErrorCode::kSpaceTooLarge, g.id + ": strategy space too large even with a best-response player");
    }
    auto [wins, witness] = detail::best_response_search(scorer, space, responder, &rep.strategies_enumerated);
    rep.model = Model::kDeterministic;
    rep.value = RealSqrt2(make_rational(wins, n_inst));
    rep.strategy = std::move(witness);
    rep.method = "enumeration with best response of " + g.player_names[responder];
    return rep;
  }

  const auto res = detail::enumerate_all(scorer, space, mode == Mode::kWorst, jobs);
  rep.strategies_enumerated = space.size();
  if (mode == Mode::kAverage) {
    rep.model = Model::kDeterministic;
    rep.value = RealSqrt2(make_rational(res.best_wins, n_inst));
    rep.strategy = space.strategy(res.best_index);
    rep.method = "exhaustive enumeration";
    return rep;
  }

  // Minimax LP: maximise t with sum_s q_s W[i][s] >= t on every instance.
  rep.model = Model::kSharedRandomness;
  rep.method = "minimax LP over distinct win patterns";
  std::vector<std::uint64_t> patterns, reps;
  for (const auto& [mask, index] : res.first_index_of_pattern) {
    patterns.push_back(mask);
    reps.push_back(index);
  }
  LinearProgram lp;
  for (std::size_t s = 0; s < patterns.size(); ++s) lp.add_variable("q" + std::to_string(s));
  const int t = lp.add_variable("t");
  for (long i = 0; i < n_inst; ++i) {
    SparseRow row;
    for (std::size_t s = 0; s < patterns.size(); ++s) {
      if ((patterns[s] >> i) & 1) row.emplace_back(static_cast<int>(s), Rational(1));
    }
    row.emplace_back(t, Rational(-1));
    lp.add_constraint(std::move(row), Relation::kGe, Rational(0), "instance" + std::to_string(i));
  }
  SparseRow norm;
  for (std::size_t s = 0; s < patterns.size(); ++s) norm.emplace_back(static_cast<int>(s), Rational(1));
  lp.add_constraint(std::move(norm), Relation::kEq, Rational(1), "normalization");
  lp.set_objective({{t, Rational(1)}}, Sense::kMaximize);
  LpVerdict v = solve(lp);
  SharedRandomnessStrategy mix;
  for (std::size_t s = 0; s < patterns.size(); ++s) {
    if (sgn(v.point[s]) == 0) continue;
    mix.weights.emplace_back(v.point[s]);
    mix.branches.push_back(space.strategy(reps[s]));
  }
  rep.value = RealSqrt2(v.value);
  rep.strategy = std::move(mix);
  rep.lp = std::move(v);
  return rep;
}

// ---------------------------------------------------------------------------
// Nonsignalling LP.

struct NsProgram {
  LinearProgram lp;
  int t = -1;  // epigraph variable (worst mode)
  std::size_t outputs = 0;
  std::vector<std::size_t> instances;
  // Row index of the normalization constraint of each joint input.
  std::vector<int> normalization_row;
  std::vector<int> epigraph_row;  // per instance, worst mode only
};

inline int ns_variable(const Layout& l, std::size_t x, std::size_t a) {
  return static_cast<int>(x * l.output_count() + a);
}

// Variables P(x, a) for the whole input rectangle, then t in worst mode.
inline NsProgram build_ns_program(const Game& g, Mode mode) {
  const Layout& l = g.layout;
  NsProgram ns;
  ns.outputs = l.output_count();
  for (std::size_t x = 0; x < l.input_count(); ++x) {
    for (std::size_t a = 0; a < ns.outputs; ++a) {
      ns.lp.add_variable("P[" + detail::join_digits(l.decode_input(x)) + "|" + detail::join_digits(l.decode_output(a)) + "]");
    }
  }
  if (mode == Mode::kWorst) ns.t = ns.lp.add_variable("t");

  for (std::size_t x = 0; x < l.input_count(); ++x) {
    SparseRow row;
    for (std::size_t a = 0; a < ns.outputs; ++a) row.emplace_back(ns_variable(l, x, a), Rational(1));
    ns.normalization_row.push_back(static_cast<int>(ns.lp.constraints().size()));
    ns.lp.add_constraint(std::move(row), Relation::kEq, Rational(1), "norm" + std::to_string(x));
  }

  for (int s = 0; s < l.slots(); ++s) {
    if (l.slot_sizes[s] < 2) continue;
    std::vector<int> readers;
    for (int p = 0; p < l.players(); ++p) {
      if (l.reads(p, s)) readers.push_back(p);
    }
    const auto observers = detail::complement(l.players(), readers);
    if (observers.empty()) continue;
    const detail::OutputProjector proj(l, observers);
    std::vector<std::vector<std::size_t>> by_obs;
    for (std::size_t a = 0; a < ns.outputs; ++a) {
      const std::size_t r = proj(a);
      if (r >= by_obs.size()) by_obs.resize(r + 1);
      by_obs[r].push_back(a);
    }
    for (std::size_t x = 0; x < l.input_count(); ++x) {
      auto xs = l.decode_input(x);
      if (xs[s] != 0) continue;
      for (int v = 1; v < l.slot_sizes[s]; ++v) {
        xs[s] = v;
        const std::size_t y = l.encode_input(xs);
        for (std::size_t r = 0; r < by_obs.size(); ++r) {
          SparseRow row;
          for (std::size_t a : by_obs[r]) {
            row.emplace_back(ns_variable(l, x, a), Rational(1));
            row.emplace_back(ns_variable(l, y, a), Rational(-1));
          }
          ns.lp.add_constraint(std::move(row), Relation::kEq, Rational(0),
                               "ns_s" + std::to_string(s) + "_" + std::to_string(x) + "_" + std::to_string(y) + "_" +
                                   std::to_string(r));
        }
      }
    }
  }

  const WinTable wt = build_win_table(g);
  ns.instances = wt.instances;
  SparseRow objective;
  const Rational share = make_rational(1, static_cast<long>(wt.instances.size()));
  for (std::size_t i = 0; i < wt.instances.size(); ++i) {
    SparseRow row;
    for (std::size_t a = 0; a < ns.outputs; ++a) {
      if (!wt.wins[i][a]) continue;
      const int var = ns_variable(l, wt.instances[i], a);
      if (mode == Mode::kWorst) {
        row.emplace_back(var, Rational(1));
      } else {
        objective.emplace_back(var, share);
      }
    }
    if (mode == Mode::kWorst) {
      row.emplace_back(ns.t, Rational(-1));
      ns.epigraph_row.push_back(static_cast<int>(ns.lp.constraints().size()));
      ns.lp.add_constraint(std::move(row), Relation::kGe, Rational(0), "win" + std::to_string(i));
    }
  }
  if (mode == Mode::kWorst) objective = {{ns.t, Rational(1)}};
  ns.lp.set_objective(std::move(objective), Sense::kMaximize);
  return ns;
}

namespace detail {

inline Behaviour behaviour_from_point(const Layout& l, const std::vector<Rational>& point) {
  std::vector<Behaviour::Row> rows(l.input_count());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t a = 0; a < l.output_count(); ++a) {
      const Rational& p = point[static_cast<std::size_t>(ns_variable(l, x, a))];
      if (sgn(p) != 0) rows[x].emplace_back(static_cast<std::uint32_t>(a), RealSqrt2(p));
    }
  }
  return make_behaviour(l, std::move(rows));
}

// Certifies value 1 from a witness behaviour: the witness is an LP point and
// the normalization rows bound the objective by 1.
inline LpVerdict certify_with_witness(const NsProgram& ns, const Game& g, Mode mode, const Behaviour& w) {
  const Layout& l = g.layout;
  std::vector<Rational> point(static_cast<std::size_t>(ns.lp.variable_count()));
  for (std::size_t x = 0; x < l.input_count(); ++x) {
    for (const auto& [a, p] : w.row(x)) {
      if (!p.is_rational()) throw Error(ErrorCode::kSpaceTooLarge, "witness has irrational entries");
      point[static_cast<std::size_t>(ns_variable(l, x, a))] = p.rational_part();
    }
  }
  const RealSqrt2 value = win_probability(w, g, mode);
  if (value != RealSqrt2(1)) {
    throw Error(ErrorCode::kSpaceTooLarge, "LP too large for the dense solver and the witness does not reach 1");
  }
  if (mode == Mode::kWorst) point[static_cast<std::size_t>(ns.t)] = 1;
  std::vector<Rational> y(ns.lp.constraints().size());
  if (mode == Mode::kWorst) {
    y[static_cast<std::size_t>(ns.epigraph_row[0])] = -1;
    y[static_cast<std::size_t>(ns.normalization_row[ns.instances[0]])] = 1;
  } else {
    const Rational share = make_rational(1, static_cast<long>(ns.instances.size()));
    for (std::size_t x : ns.instances) y[static_cast<std::size_t>(ns.normalization_row[x])] = share;
  }
  LpVerdict v;
  v.status = LpStatus::kOptimal;
  v.point = std::move(point);
  v.value = 1;
  v.multipliers = std::move(y);
  if (!verify(ns.lp, v)) throw Error(ErrorCode::kInternalInconsistency, "witness certificate failed to verify");
  return v;
}

}  // namespace detail

// Exact nonsignalling value. When the LP is beyond the dense solver, a
// winning nonsignalling `witness` can still certify the value 1.
inline ValueReport ns_value(const Game& g, Mode mode, const std::optional<Behaviour>& witness = std::nullopt) {
  NsProgram ns = build_ns_program(g, mode);
  ValueReport rep;
  rep.game = g.id;
  rep.mode = mode;
  rep.model = Model::kNonsignalling;
  LpVerdict v;
  try {
    v = solve(ns.lp);
    rep.method = "exact simplex";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSpaceTooLarge || !witness) throw;
    if (!(witness->layout() == g.layout)) throw Error(ErrorCode::kAlphabetMismatch, "witness does not fit " + g.id);
    if (!is_nonsignalling(*witness).ok()) throw Error(ErrorCode::kNotNonsignalling, "witness is signalling");
    v = detail::certify_with_witness(ns, g, mode, *witness);
    rep.method = "witness point with normalization dual bound";
  }
  if (v.status != LpStatus::kOptimal) throw Error(ErrorCode::kInternalInconsistency, "NS LP not optimal");
  rep.value = RealSqrt2(v.value);
  rep.behaviour = detail::behaviour_from_point(g.layout, v.point);
  rep.lp = std::move(v);
  return rep;
}

// ---------------------------------------------------------------------------
// Majority to CHSH.

namespace detail {

inline void require_majority_shape(const Behaviour& b) {
  if (!(b.layout() == majority_game().layout)) {
    throw Error(ErrorCode::kAlphabetMismatch, "expected a 3-player binary behaviour");
  }
}

// P'(a', b | x', y') summed from P(a, b, c | x, y, z) with a' = a ^ c ^ flip.
inline void accumulate_branch(const Behaviour& b, int xp, int yp, bool flipped, const RealSqrt2& weight,
                              Behaviour::Row& row) {
  const Layout& l = b.layout();
  const int x = flipped ? xp ^ 1 : xp;
  const int y = flipped ? yp ^ 1 : yp;
  const int z = flipped ? 1 : 0;
  const std::vector<int> in = {x, y, z};
  for (const auto& [a, p] : b.row(l.encode_input(in))) {
    const auto out = l.decode_output(a);
    const int ap = out[0] ^ out[2] ^ (flipped ? 1 : 0);
    row.emplace_back(static_cast<std::uint32_t>(ap * 2 + out[1]), weight * p);
  }
}

}  // namespace detail

// Alice' plays Alice and Charlie with z = 0 and answers a ^ c.
inline Behaviour chsh_from_majority_worst(const Behaviour& b) {
  detail::require_majority_shape(b);
  const Layout l = chsh_game().layout;
  std::vector<Behaviour::Row> rows(4);
  for (int xp = 0; xp < 2; ++xp) {
    for (int yp = 0; yp < 2; ++yp) detail::accumulate_branch(b, xp, yp, false, RealSqrt2(1), rows[xp * 2 + yp]);
  }
  return make_behaviour(l, std::move(rows));
}

// Mixes the branch above with a shared coin that flips both inputs, sets
// z = 1 and complements Alice's answer.
inline Behaviour chsh_from_majority_average(const Behaviour& b) {
  detail::require_majority_shape(b);
  const Layout l = chsh_game().layout;
  const RealSqrt2 half(make_rational(1, 2));
  std::vector<Behaviour::Row> rows(4);
  for (int xp = 0; xp < 2; ++xp) {
    for (int yp = 0; yp < 2; ++yp) {
      detail::accumulate_branch(b, xp, yp, false, half, rows[xp * 2 + yp]);
      detail::accumulate_branch(b, xp, yp, true, half, rows[xp * 2 + yp]);
    }
  }
  return make_behaviour(l, std::move(rows));
}

// ---------------------------------------------------------------------------
// JSON.

inline Json value_report_to_json(const ValueReport& r, bool include_witness = true) {
  Json j;
  j["game"] = r.game;
  j["mode"] = mode_name(r.mode);
  j["model"] = model_name(r.model);
  j["value"] = to_string(r.value);
  j["value_float"] = to_double(r.value);
  j["method"] = r.method;
  if (r.strategies_enumerated) j["strategies_enumerated"] = r.strategies_enumerated;
  if (include_witness) {
    if (r.strategy) j["witness"] = strategy_to_json(*r.strategy);
    if (r.behaviour) j["witness"] = behaviour_to_json(*r.behaviour);
  }
  if (r.lp) {
    Json c{{"status", lp_status_name(r.lp->status)}, {"recheck", "pass"}};
    if (include_witness) {
      Json dual = Json::object();
      for (std::size_t i = 0; i < r.lp->multipliers.size(); ++i) {
        if (sgn(r.lp->multipliers[i]) != 0) dual[std::to_string(i)] = to_string(r.lp->multipliers[i]);
      }
      c["dual_support"] = std::move(dual);
    }
    j["certificate"] = std::move(c);
  }
  return j;
}

}  // namespace ptlab

#endif  // PTLAB_ANALYSIS_HPP_
