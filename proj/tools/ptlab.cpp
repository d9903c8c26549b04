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

// ptlab: exact verification of nonlocal games from the command line.
//
// Every report is JSON on stdout (or --out FILE). Exit status: 0 verified,
// 1 negative result, 2 usage or input error. JSON output carries no timing
// so reruns are byte-identical; --pretty prints a table with elapsed time.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptlab/ptlab.hpp"

namespace {

using ptlab::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Outcome {
  Json report;
  int exit_code = kOk;
  std::optional<std::string> raw;  // non-JSON payload (LP text)
};

struct GlobalOptions {
  std::string mode = "worst";
  int jobs = 1;
  bool pretty = false;
  std::string out;
};

Json exact(const ptlab::RealSqrt2& v) { return Json{{"exact", ptlab::to_string(v)}, {"float", ptlab::to_double(v)}}; }

// Input-side failures are usage errors; the rest are negative results.
int exit_code_for(ptlab::ErrorCode c) {
  using ptlab::ErrorCode;
  switch (c) {
    case ErrorCode::kSpaceTooLarge:
    case ErrorCode::kNotWinning:
    case ErrorCode::kNotDeterministicOnOne:
    case ErrorCode::kInternalInconsistency:
      return kNegative;
    default:
      return kUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ptlab::Error(ptlab::ErrorCode::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ptlab::Behaviour load_behaviour(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ptlab::Error(ptlab::ErrorCode::kParse, path + ": " + e.what());
  }
  return ptlab::behaviour_from_json(j);
}

// A registered strategy id, evaluated on g, or a behaviour file.
ptlab::Behaviour witness_behaviour(const std::string& source, const ptlab::Game& g) {
  for (const auto& id : ptlab::strategy_ids()) {
    if (id == source) return ptlab::evaluate(ptlab::registry_strategy(id), g);
  }
  return load_behaviour(source);
}

Outcome cmd_verify(const std::string& game_id, const std::string& strategy_id, ptlab::Mode mode) {
  const ptlab::Game g = ptlab::build_game(game_id);
  const ptlab::Strategy s = ptlab::registry_strategy(strategy_id);
  const ptlab::Behaviour b = ptlab::evaluate(s, g);
  const auto per = ptlab::instance_win_probabilities(b, g);
  const auto value = ptlab::aggregate(per, mode);

  Json instances = Json::array();
  for (const auto& w : per) {
    Json row{{"input", g.layout.decode_input(w.input)}};
    row.update(exact(w.probability));
    instances.push_back(std::move(row));
  }
  const bool ns = ptlab::is_nonsignalling(b).ok();
  const bool pass = value == ptlab::RealSqrt2(1);
  Outcome o;
  o.report = Json{{"command", "verify"}, {"game", g.id},          {"strategy", strategy_id},
                  {"mode", ptlab::mode_name(mode)}, {"instances", std::move(instances)},
                  {"value", exact(value)},          {"nonsignalling", ns}, {"pass", pass}};
  o.exit_code = pass ? kOk : kNegative;
  return o;
}

Outcome cmd_value(const std::string& game_id, const std::string& model, ptlab::Mode mode, int jobs,
                  const std::string& witness) {
  const ptlab::Game g = ptlab::build_game(game_id);
  ptlab::ValueReport r;
  if (model == "classical") {
    r = ptlab::classical_value(g, mode, jobs);
  } else {
    std::optional<ptlab::Behaviour> w;
    if (!witness.empty()) w = witness_behaviour(witness, g);
    try {
      r = ptlab::ns_value(g, mode, w);
    } catch (const ptlab::Error& e) {
      if (e.code() != ptlab::ErrorCode::kSpaceTooLarge || w) throw;
      throw ptlab::Error(e.code(), std::string(e.what()) + "; pass --witness STRATEGY|FILE");
    }
  }
  Json j{{"command", "value"}};
  j.update(ptlab::value_report_to_json(r));
  return Outcome{std::move(j), kOk, std::nullopt};
}

Outcome cmd_coinflip(const std::string& p_text) {
  const ptlab::Rational p = ptlab::parse_rational(p_text);
  const auto rep = ptlab::coinflip_inflation_check(p);
  const bool verified = ptlab::verify(rep.lp, rep.verdict);
  Json cert{{"status", ptlab::lp_status_name(rep.verdict.status)}, {"recheck", verified ? "pass" : "fail"}};
  Json support = Json::object();
  const auto& names = rep.lp.variable_names();
  if (rep.verdict.status == ptlab::LpStatus::kInfeasible) {
    const auto& rows = rep.lp.constraints();
    for (std::size_t i = 0; i < rep.verdict.multipliers.size(); ++i) {
      const auto& y = rep.verdict.multipliers[i];
      if (sgn(y) != 0) support[rows[i].name] = ptlab::to_string(y);
    }
    cert["farkas"] = std::move(support);
  } else {
    for (std::size_t v = 0; v < rep.verdict.point.size(); ++v) {
      if (sgn(rep.verdict.point[v]) != 0) support[names[v]] = ptlab::to_string(rep.verdict.point[v]);
    }
    cert["point"] = std::move(support);
  }
  Outcome o;
  o.report = Json{{"command", "inflation coinflip"},
                  {"p", ptlab::to_string(p)},
                  {"inflation", "hexagon"},
                  {"variables", rep.lp.variable_count()},
                  {"constraints", rep.lp.constraints().size()},
                  {"independent_agreement", ptlab::to_string(rep.independent_agreement)},
                  {"forced_agreement", "1/1"},
                  {"certificate", std::move(cert)}};
  o.exit_code = (verified && rep.verdict.status == ptlab::LpStatus::kFeasible) ? kOk : kNegative;
  return o;
}

Outcome cmd_pipeline(const std::string& path) {
  const ptlab::Behaviour b = load_behaviour(path);
  const ptlab::Game g = ptlab::main_game();
  const auto c = ptlab::theorem1_pipeline(b);
  Json j{{"command", "inflation pipeline"}, {"behaviour", path}, {"certificate", ptlab::certificate_to_json(c, b, g)}};
  // Every certificate is a negative result for the behaviour.
  return Outcome{std::move(j), kNegative, std::nullopt};
}

Outcome cmd_export_game(const std::string& id) {
  return Outcome{ptlab::game_to_json(ptlab::build_game(id)), kOk, std::nullopt};
}

Outcome cmd_export_behaviour(const std::string& game_id, const std::string& strategy_id) {
  const ptlab::Game g = ptlab::build_game(game_id);
  return Outcome{ptlab::behaviour_to_json(ptlab::evaluate(ptlab::registry_strategy(strategy_id), g)), kOk,
                 std::nullopt};
}

Outcome cmd_export_lp(const std::string& game_id, ptlab::Mode mode) {
  const auto ns = ptlab::build_ns_program(ptlab::build_game(game_id), mode);
  return Outcome{Json(), kOk, ptlab::export_lp(ns.lp)};
}

Outcome cmd_list() {
  return Outcome{Json{{"games", ptlab::game_ids()}, {"strategies", ptlab::strategy_ids()}}, kOk, std::nullopt};
}

// Flattened "key  value" lines.
void render_pretty(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_pretty(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_pretty(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << std::left << std::setw(40) << prefix << ' ' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

int emit(const Outcome& o, const GlobalOptions& opt, double seconds) {
  std::ostringstream body;
  if (o.raw) {
    body << *o.raw;
  } else if (opt.pretty) {
    render_pretty(o.report, "", body);
    body << std::left << std::setw(40) << "elapsed_seconds" << ' ' << std::fixed << std::setprecision(3) << seconds
         << '\n';
  } else {
    body << o.report.dump(2) << '\n';
  }
  if (opt.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << opt.out << '\n';
      return kUsage;
    }
    f << body.str();
  }
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of nonlocal games, inflation arguments and winning strategies."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  std::string mode_flag;
  app.add_option("--mode", mode_flag, "worst or average (default worst)")
      ->check(CLI::IsMember({"worst", "average"}));
  app.add_option("--jobs", opt.jobs, "threads for strategy enumeration")->check(CLI::Range(1, 256));
  app.add_flag("--pretty", opt.pretty, "human-readable table with timing");
  app.add_option("--out", opt.out, "write the report to FILE instead of stdout");

  std::string game, strategy, model, mode_pos, witness, p_text, path;

  auto* verify = app.add_subcommand("verify", "win probability of a registered strategy");
  verify->add_option("game", game)->required();
  verify->add_option("strategy", strategy)->required();
  verify->add_option("mode", mode_pos)->check(CLI::IsMember({"worst", "average"}));

  auto* value = app.add_subcommand("value", "classical or nonsignalling value of a game");
  value->add_option("game", game)->required();
  value->add_option("model", model)->required()->check(CLI::IsMember({"classical", "ns"}));
  value->add_option("mode", mode_pos)->check(CLI::IsMember({"worst", "average"}));
  value->add_option("--witness", witness, "strategy id or behaviour file used when the LP is too large");

  auto* inflation = app.add_subcommand("inflation", "inflation arguments");
  inflation->require_subcommand(1);
  auto* coinflip = inflation->add_subcommand("coinflip", "hexagon inflation LP for a shared coin with P(0) = P");
  coinflip->add_option("p", p_text)->required();
  auto* pipeline = inflation->add_subcommand("pipeline", "certificate for a main_game behaviour file");
  pipeline->add_option("file", path)->required();

  auto* exp = app.add_subcommand("export", "machine-readable descriptions");
  exp->require_subcommand(1);
  auto* exp_game = exp->add_subcommand("game", "game description with win table");
  exp_game->add_option("game", game)->required();
  auto* exp_beh = exp->add_subcommand("behaviour", "behaviour of a registered strategy");
  exp_beh->add_option("game", game)->required();
  exp_beh->add_option("strategy", strategy)->required();
  auto* exp_lp = exp->add_subcommand("lp", "nonsignalling value LP in text form");
  exp_lp->add_option("game", game)->required();

  auto* list = app.add_subcommand("list", "registered games and strategies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (!mode_pos.empty() && !mode_flag.empty() && mode_pos != mode_flag) {
    std::cerr << "conflicting modes: " << mode_pos << " and --mode " << mode_flag << '\n';
    return kUsage;
  }
  if (!mode_pos.empty()) opt.mode = mode_pos;
  if (!mode_flag.empty()) opt.mode = mode_flag;

  const auto start = std::chrono::steady_clock::now();
  std::string command = "?";
  try {
    const ptlab::Mode mode = ptlab::parse_mode(opt.mode);
    Outcome o;
    if (*verify) {
      command = "verify";
      o = cmd_verify(game, strategy, mode);
    } else if (*value) {
      command = "value";
      o = cmd_value(game, model, mode, opt.jobs, witness);
    } else if (*coinflip) {
      command = "inflation coinflip";
      o = cmd_coinflip(p_text);
    } else if (*pipeline) {
      command = "inflation pipeline";
      o = cmd_pipeline(path);
    } else if (*exp_game) {
      command = "export game";
      o = cmd_export_game(game);
    } else if (*exp_beh) {
      command = "export behaviour";
      o = cmd_export_behaviour(game, strategy);
    } else if (*exp_lp) {
      command = "export lp";
      o = cmd_export_lp(game, mode);
    } else if (*list) {
      command = "list";
      o = cmd_list();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(o, opt, secs);
  } catch (const ptlab::Error& e) {
    Outcome o;
    o.report = Json{{"command", command},
                    {"error", {{"code", std::string(ptlab::error_code_name(e.code()))}, {"detail", e.what()}}}};
    o.exit_code = exit_code_for(e.code());
    std::cerr << e.what() << '\n';
    return emit(o, opt, 0.0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
