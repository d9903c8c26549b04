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

// Inflation of networks with bipartite sources, plus the reductions from
// winning strategies to classical ones that the five-player certificate uses.
//
// In an inflated network, copies that share a source copy reproduce the pair
// marginal of their originals, and copies with no common source are
// independent. For fixed original marginals both facts are linear in the
// inflated distribution, so compatibility is an LP feasibility question.

#ifndef PTLAB_INFLATION_HPP_
#define PTLAB_INFLATION_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/analysis.hpp"
#include "ptlab/behaviour.hpp"
#include "ptlab/error.hpp"
#include "ptlab/games.hpp"
#include "ptlab/lp.hpp"
#include "ptlab/strategies.hpp"

namespace ptlab {

// Parties joined pairwise by sources.
struct Scenario {
  std::vector<std::string> parties;
  std::vector<std::pair<int, int>> sources;
};

struct PartyCopy {
  std::string name;
  int original;
};

struct SourceCopy {
  int a;         // party copy
  int b;         // party copy
  int original;  // source in the scenario
};

struct InflationMap {
  std::vector<PartyCopy> copies;
  std::vector<SourceCopy> sources;

  bool share_source(int i, int j) const {
    for (const auto& s : sources) {
      if ((s.a == i && s.b == j) || (s.a == j && s.b == i)) return true;
    }
    return false;
  }
};

// Each copy must touch exactly one copy of each source its original touches,
// and each source copy must join copies of the original's endpoints.
inline void validate_inflation(const Scenario& sc, const InflationMap& inf) {
  for (const auto& s : inf.sources) {
    const auto [p, q] = sc.sources[s.original];
    const int op = inf.copies[s.a].original, oq = inf.copies[s.b].original;
    if (!((op == p && oq == q) || (op == q && oq == p))) {
      throw Error(ErrorCode::kMalformed, "source copy joins the wrong parties");
    }
  }
  for (int c = 0; c < static_cast<int>(inf.copies.size()); ++c) {
    const int orig = inf.copies[c].original;
    for (int s = 0; s < static_cast<int>(sc.sources.size()); ++s) {
      const bool touches = sc.sources[s].first == orig || sc.sources[s].second == orig;
      int seen = 0;
      for (const auto& sc_copy : inf.sources) {
        if (sc_copy.original == s && (sc_copy.a == c || sc_copy.b == c)) ++seen;
      }
      if (seen != (touches ? 1 : 0)) {
        throw Error(ErrorCode::kMalformed, "copy " + inf.copies[c].name + " is not locally isomorphic to its original");
      }
    }
  }
}

// Three parties with a source on every pair: sources AB, BC, CA.
inline Scenario triangle_scenario() { return Scenario{{"A", "B", "C"}, {{0, 1}, {1, 2}, {2, 0}}}; }

// Six copies in a ring: A^ - C^ - B^ - A' - C' - B' - A^.
inline InflationMap hexagon_inflation() {
  InflationMap inf;
  inf.copies = {{"A^", 0}, {"C^", 2}, {"B^", 1}, {"A'", 0}, {"C'", 2}, {"B'", 1}};
  inf.sources = {{0, 1, 2}, {1, 2, 1}, {2, 3, 0}, {3, 4, 2}, {4, 5, 1}, {5, 0, 0}};
  return inf;
}

struct CoinflipReport {
  Rational p;
  LinearProgram lp;
  LpVerdict verdict;
  // Probability that A^ and B^ agree if they are independent, p^2 + (1-p)^2;
  // the ring of pair constraints forces it to be 1.
  Rational independent_agreement;
};

// Is "all three players output the same fair-or-biased bit, 0 with
// probability p" compatible with bipartite sources? Solves the hexagon
// inflation LP with exact certificates.
inline CoinflipReport coinflip_inflation_check(const Rational& p) {
  if (sgn(p) < 0 || p > 1) throw Error(ErrorCode::kBadProbability, "p must lie in [0, 1], got " + to_string(p));
  const Scenario sc = triangle_scenario();
  const InflationMap inf = hexagon_inflation();
  validate_inflation(sc, inf);
  const int n = static_cast<int>(inf.copies.size());
  const Rational q = 1 - p;
  const std::array<Rational, 2> single = {p, q};

  CoinflipReport rep;
  rep.p = p;
  rep.independent_agreement = p * p + q * q;
  LinearProgram& lp = rep.lp;
  const int outcomes = 1 << n;
  for (int v = 0; v < outcomes; ++v) {
    std::string name = "P[";
    for (int k = 0; k < n; ++k) name += ((v >> (n - 1 - k)) & 1) ? '1' : '0';
    lp.add_variable(name + "]");
  }
  SparseRow all;
  for (int v = 0; v < outcomes; ++v) all.emplace_back(v, Rational(1));
  lp.add_constraint(std::move(all), Relation::kEq, Rational(1), "normalization");

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool linked = inf.share_source(i, j);
      for (int u = 0; u < 2; ++u) {
        for (int w = 0; w < 2; ++w) {
          SparseRow row;
          for (int v = 0; v < outcomes; ++v) {
            if (((v >> (n - 1 - i)) & 1) == u && ((v >> (n - 1 - j)) & 1) == w) row.emplace_back(v, Rational(1));
          }
          // Linked copies: the original pair always agrees. Otherwise the
          // product of the original single-party marginals.
          Rational target = linked ? (u == w ? single[u] : Rational(0)) : Rational(single[u] * single[w]);
          lp.add_constraint(std::move(row), Relation::kEq, std::move(target),
                            inf.copies[i].name + inf.copies[j].name + "=" + std::to_string(u) + std::to_string(w));
        }
      }
    }
  }
  rep.verdict = solve(lp);
  return rep;
}

// ---------------------------------------------------------------------------
// Derandomization.

// A slice of a winning shared-randomness strategy that wins on its own.
inline DeterministicStrategy lemma1_derandomize(const SharedRandomnessStrategy& s, const Game& g) {
  const Behaviour b = evaluate(s, g.layout);
  const auto per = instance_win_probabilities(b, g);
  for (const auto& w : per) {
    if (w.probability != RealSqrt2(1)) {
      throw Error(ErrorCode::kNotWinning, "strategy wins instance " +
                                              detail::join_digits(g.layout.decode_input(w.input)) +
                                              " with probability " + to_string(w.probability));
    }
  }
  for (std::size_t k = 0; k < s.branches.size(); ++k) {
    if (s.weights[k].sign() <= 0) continue;
    const Behaviour slice = evaluate(s.branches[k], g.layout);
    if (win_probability(slice, g, Mode::kWorst) != RealSqrt2(1)) {
      throw Error(ErrorCode::kInternalInconsistency, "positive-weight slice of a winning strategy loses");
    }
    return s.branches[k];
  }
  throw Error(ErrorCode::kInternalInconsistency, "no branch with positive weight");
}

// Shared-randomness strategy reproducing a nonsignalling behaviour in which
// every player has a binary input and answers deterministically on one of
// its values. The hidden variable is the joint output on the input where
// every player is on its nondeterministic value.
inline SharedRandomnessStrategy lemma2_classicalize(const Behaviour& b) {
  const Layout& l = b.layout();
  for (int p = 0; p < l.players(); ++p) {
    if (l.player_slots[p].size() != 1 || l.slot_sizes[l.player_slots[p][0]] != 2) {
      throw Error(ErrorCode::kMalformed, "every player must read exactly one binary input");
    }
  }
  if (!is_nonsignalling(b).ok()) throw Error(ErrorCode::kNotNonsignalling, "behaviour is signalling");

  // det[p][v]: player p's certain answer on input v, if any.
  std::vector<std::array<std::optional<int>, 2>> det(static_cast<std::size_t>(l.players()));
  for (int p = 0; p < l.players(); ++p) {
    for (int v = 0; v < 2; ++v) det[p][v] = detail::deterministic_output_unchecked(b, p, v);
    if (!det[p][0] && !det[p][1]) {
      throw Error(ErrorCode::kNotDeterministicOnOne, "player " + std::to_string(p) + " is random on both inputs");
    }
  }
  // Deterministic value per slot, preferring 1; slots set to 0 are relabelled.
  SharedRandomnessStrategy out;
  std::vector<int> d(static_cast<std::size_t>(l.slots()), 1);
  for (int s = 0; s < l.slots(); ++s) {
    bool ok1 = true, ok0 = true;
    int first_reader = -1;
    for (int p = 0; p < l.players(); ++p) {
      if (l.player_slots[p][0] != s) continue;
      if (first_reader < 0) first_reader = p;
      ok1 = ok1 && det[p][1].has_value();
      ok0 = ok0 && det[p][0].has_value();
    }
    if (first_reader < 0) continue;
    if (!ok1 && !ok0) {
      throw Error(ErrorCode::kNotDeterministicOnOne, "players reading input " + std::to_string(s) +
                                                         " are deterministic on different values; first is player " +
                                                         std::to_string(first_reader));
    }
    d[s] = ok1 ? 1 : 0;
    if (d[s] == 0) out.relabelled_slots.push_back(s);
  }
  std::vector<int> random_input(static_cast<std::size_t>(l.slots()));
  for (int s = 0; s < l.slots(); ++s) random_input[s] = 1 - d[s];
  for (const auto& [a, w] : b.row(l.encode_input(random_input))) {
    const auto lambda = l.decode_output(a);
    DeterministicStrategy branch;
    for (int p = 0; p < l.players(); ++p) {
      const int s = l.player_slots[p][0];
      std::vector<int> table(2);
      table[1 - d[s]] = lambda[p];
      table[d[s]] = *det[p][d[s]];
      branch.outputs.push_back(std::move(table));
    }
    out.weights.push_back(w);
    out.branches.push_back(std::move(branch));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Five-player pipeline.

enum class CertificateKind { kNotWinning, kNotBipartite, kClassicalContradiction };

inline const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kNotWinning: return "NotWinning";
    case CertificateKind::kNotBipartite: return "NotBipartite";
    case CertificateKind::kClassicalContradiction: return "ClassicalContradiction";
  }
  return "?";
}

struct Certificate {
  CertificateKind kind = CertificateKind::kNotWinning;
  std::size_t instance = 0;  // NotWinning, ClassicalContradiction
  std::size_t output = 0;    // NotWinning: a losing joint output with positive probability
  RealSqrt2 win_probability;  // NotWinning, ClassicalContradiction
  int player = 0;            // NotBipartite
  int local_input = 0;       // NotBipartite
  std::vector<RealSqrt2> marginal;  // NotBipartite
  std::optional<SharedRandomnessStrategy> strategy;  // ClassicalContradiction
};

namespace detail {

inline std::optional<Certificate> first_loss(const Behaviour& b, const Game& g) {
  for (const auto& w : instance_win_probabilities(b, g)) {
    if (w.probability == RealSqrt2(1)) continue;
    Certificate c;
    c.kind = CertificateKind::kNotWinning;
    c.instance = w.input;
    c.win_probability = w.probability;
    const auto xs = g.layout.decode_input(w.input);
    for (const auto& [a, p] : b.row(w.input)) {
      if (!g.win(xs, g.layout.decode_output(a))) {
        c.output = a;
        break;
      }
    }
    return c;
  }
  return std::nullopt;
}

inline std::size_t all_ones_input(const Layout& l) {
  return l.encode_input(std::vector<int>(static_cast<std::size_t>(l.slots()), 1));
}

}  // namespace detail

// The answers (a1, a2, a3) forced on the equality instance, if every player
// is deterministic there and the answers agree.
inline std::optional<std::array<int, 3>> forced_equality_outputs(const Behaviour& b) {
  const Game g = main_game();
  if (!(b.layout() == g.layout)) throw Error(ErrorCode::kAlphabetMismatch, "expected a main_game behaviour");
  if (!is_nonsignalling(b).ok()) throw Error(ErrorCode::kNotNonsignalling, "behaviour is signalling");
  const std::size_t eq = detail::all_ones_input(g.layout);
  const auto xs = g.layout.decode_input(eq);
  RealSqrt2 win;
  for (const auto& [a, p] : b.row(eq)) {
    if (g.win(xs, g.layout.decode_output(a))) win += p;
  }
  if (win != RealSqrt2(1)) {
    throw Error(ErrorCode::kNotWinning, "equality instance won with probability " + to_string(win));
  }
  std::array<int, 3> bits{};
  for (int i = 0; i < 3; ++i) {
    const auto o = detail::deterministic_output_unchecked(b, i, 1);
    if (!o) return std::nullopt;
    bits[i] = *o;
  }
  const int packed = bits[0] * 4 + bits[1] * 2 + bits[2];
  for (int p = 3; p < 5; ++p) {
    const auto o = detail::deterministic_output_unchecked(b, p, 1);
    if (!o || *o != packed) return std::nullopt;
  }
  return bits;
}

// Classicalize b, then look for an instance the classical strategy loses.
// A behaviour that wins g can never produce one.
inline std::optional<Certificate> classical_contradiction(const Behaviour& b, const Game& g) {
  SharedRandomnessStrategy s = lemma2_classicalize(b);
  const Behaviour replay = evaluate(s, g.layout);
  if (!(replay == b)) throw Error(ErrorCode::kInternalInconsistency, "classicalization does not reproduce b");
  auto loss = detail::first_loss(replay, g);
  if (!loss) return std::nullopt;
  loss->kind = CertificateKind::kClassicalContradiction;
  loss->strategy = std::move(s);
  return loss;
}

inline Certificate theorem1_pipeline(const Behaviour& b) {
  const Game g = main_game();
  if (!(b.layout() == g.layout)) throw Error(ErrorCode::kAlphabetMismatch, "expected a main_game behaviour");
  if (!is_nonsignalling(b).ok()) throw Error(ErrorCode::kNotNonsignalling, "behaviour is signalling");

  if (auto loss = detail::first_loss(b, g)) return *loss;

  if (!forced_equality_outputs(b)) {
    const std::size_t eq = detail::all_ones_input(g.layout);
    for (int p = 0; p < g.players(); ++p) {
      const auto m = detail::player_marginal(b, p, eq);
      const bool point = std::any_of(m.begin(), m.end(), [](const RealSqrt2& v) { return v == RealSqrt2(1); });
      if (point) continue;
      Certificate c;
      c.kind = CertificateKind::kNotBipartite;
      c.player = p;
      c.local_input = 1;
      c.marginal = m;
      return c;
    }
    throw Error(ErrorCode::kInternalInconsistency, "deterministic equality answers that disagree yet win");
  }

  if (auto c = classical_contradiction(b, g)) return *c;
  throw Error(ErrorCode::kInternalInconsistency, "classical strategy reproducing a winning behaviour wins every instance");
}

// Re-derives a certificate's claim from the behaviour.
inline bool recheck(const Certificate& c, const Behaviour& b, const Game& g) {
  if (!(b.layout() == g.layout)) return false;
  const Layout& l = g.layout;
  switch (c.kind) {
    case CertificateKind::kNotWinning: {
      if (c.instance >= l.input_count() || !g.promise(l.decode_input(c.instance))) return false;
      if (b.prob(c.instance, c.output).sign() <= 0) return false;
      return !g.win(l.decode_input(c.instance), l.decode_output(c.output));
    }
    case CertificateKind::kNotBipartite: {
      if (c.player < 0 || c.player >= l.players()) return false;
      if (detail::deterministic_output_unchecked(b, c.player, c.local_input)) return false;
      return detail::player_marginal(b, c.player, detail::all_ones_input(l)) == c.marginal;
    }
    case CertificateKind::kClassicalContradiction: {
      if (!c.strategy) return false;
      const Behaviour replay = evaluate(*c.strategy, l);
      for (const auto& w : instance_win_probabilities(replay, g)) {
        if (w.input == c.instance) return w.probability != RealSqrt2(1) && replay == b;
      }
      return false;
    }
  }
  return false;
}

inline Json certificate_to_json(const Certificate& c, const Behaviour& b, const Game& g) {
  const Layout& l = g.layout;
  Json w = Json::object();
  switch (c.kind) {
    case CertificateKind::kNotWinning:
      w["instance"] = l.decode_input(c.instance);
      w["losing_output"] = l.decode_output(c.output);
      w["win_probability"] = to_string(c.win_probability);
      break;
    case CertificateKind::kNotBipartite: {
      w["player"] = g.player_names[c.player];
      w["input"] = c.local_input;
      Json m = Json::array();
      for (const auto& v : c.marginal) m.push_back(to_string(v));
      w["marginal"] = std::move(m);
      break;
    }
    case CertificateKind::kClassicalContradiction:
      w["instance"] = l.decode_input(c.instance);
      w["win_probability"] = to_string(c.win_probability);
      w["strategy"] = strategy_to_json(*c.strategy);
      break;
  }
  return Json{{"kind", certificate_kind_name(c.kind)}, {"witness", std::move(w)},
              {"recheck", recheck(c, b, g) ? "pass" : "fail"}};
}

}  // namespace ptlab

#endif  // PTLAB_INFLATION_HPP_
