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

// Exact rational linear programming: a dense two-phase tableau simplex with
// Bland's rule. Every variable is nonnegative.
//
// Certificates use one sign convention for row multipliers y:
//   y_i >= 0 on <= rows, y_i <= 0 on >= rows, y_i free on = rows.
// With it, yA >= 0 and y.b < 0 proves infeasibility (Farkas), and for the
// maximisation form max s*c.x (s = +1 to maximise, -1 to minimise),
// yA >= s*c together with y.b = s*value proves optimality.
// Every verdict is re-verified against the original rows before return.

#ifndef PTLAB_LP_HPP_
#define PTLAB_LP_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"

namespace ptlab {

using Json = nlohmann::ordered_json;

enum class Relation { kLe, kGe, kEq };
enum class Sense { kMaximize, kMinimize };

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kGe: return ">=";
    case Relation::kEq: return "=";
  }
  return "?";
}

using SparseRow = std::vector<std::pair<int, Rational>>;

struct Constraint {
  SparseRow terms;
  Relation relation = Relation::kEq;
  Rational rhs;
  std::string name;
};

struct Objective {
  SparseRow terms;
  Sense sense = Sense::kMaximize;
};

class LinearProgram {
 public:
  int add_variable(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
  }

  void add_constraint(SparseRow terms, Relation rel, Rational rhs, std::string name = "") {
    for (const auto& [v, c] : terms) {
      if (v < 0 || v >= variable_count()) throw Error(ErrorCode::kMalformed, "constraint uses undeclared variable");
    }
    constraints_.push_back(Constraint{std::move(terms), rel, std::move(rhs), std::move(name)});
  }

  void set_objective(SparseRow terms, Sense sense) {
    for (const auto& [v, c] : terms) {
      if (v < 0 || v >= variable_count()) throw Error(ErrorCode::kMalformed, "objective uses undeclared variable");
    }
    objective_ = Objective{std::move(terms), sense};
  }

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<Objective>& objective() const { return objective_; }

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
  std::optional<Objective> objective_;
};

enum class LpStatus { kFeasible, kInfeasible, kOptimal, kUnbounded };

inline const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kFeasible: return "Feasible";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "?";
}

struct LpVerdict {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> point;       // Feasible / Optimal
  Rational value;                    // Optimal, in the objective's own sense
  std::vector<Rational> multipliers;  // Infeasible (Farkas) / Optimal (dual)
  std::vector<Rational> ray;         // Unbounded
};

// ---------------------------------------------------------------------------
// Exact checks on the original rows.

namespace detail {

inline Rational dot(const SparseRow& row, const std::vector<Rational>& x) {
  Rational s;
  for (const auto& [v, c] : row) s += c * x[v];
  return s;
}

inline bool satisfies(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::kLe: return lhs <= rhs;
    case Relation::kGe: return lhs >= rhs;
    case Relation::kEq: return lhs == rhs;
  }
  return false;
}

inline bool multiplier_sign_ok(Relation r, const Rational& y) {
  if (r == Relation::kLe) return sgn(y) >= 0;
  if (r == Relation::kGe) return sgn(y) <= 0;
  return true;
}

// y^T A as a dense vector over the variables.
inline std::vector<Rational> combine_rows(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> out(static_cast<std::size_t>(lp.variable_count()));
  for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    for (const auto& [v, c] : lp.constraints()[i].terms) out[v] += y[i] * c;
  }
  return out;
}

inline Rational objective_sign(const LinearProgram& lp) {
  return lp.objective() && lp.objective()->sense == Sense::kMinimize ? Rational(-1) : Rational(1);
}

}  // namespace detail

inline bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.variable_count()) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    if (!detail::satisfies(detail::dot(c.terms, x), c.relation, c.rhs)) return false;
  }
  return true;
}

inline bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.constraints().size()) return false;
  Rational yb;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!detail::multiplier_sign_ok(lp.constraints()[i].relation, y[i])) return false;
    yb += y[i] * lp.constraints()[i].rhs;
  }
  if (sgn(yb) >= 0) return false;
  for (const auto& v : detail::combine_rows(lp, y)) {
    if (sgn(v) < 0) return false;
  }
  return true;
}

inline bool is_dual_certificate(const LinearProgram& lp, const std::vector<Rational>& y, const Rational& value) {
  if (!lp.objective() || y.size() != lp.constraints().size()) return false;
  const Rational s = detail::objective_sign(lp);
  Rational yb;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!detail::multiplier_sign_ok(lp.constraints()[i].relation, y[i])) return false;
    yb += y[i] * lp.constraints()[i].rhs;
  }
  if (yb != s * value) return false;
  std::vector<Rational> c(static_cast<std::size_t>(lp.variable_count()));
  for (const auto& [v, coef] : lp.objective()->terms) c[v] += s * coef;
  const auto ya = detail::combine_rows(lp, y);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (ya[j] < c[j]) return false;
  }
  return true;
}

inline bool is_improving_ray(const LinearProgram& lp, const std::vector<Rational>& d) {
  if (!lp.objective() || static_cast<int>(d.size()) != lp.variable_count()) return false;
  for (const auto& v : d) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    if (!detail::satisfies(detail::dot(c.terms, d), c.relation, Rational(0))) return false;
  }
  return sgn(detail::objective_sign(lp) * detail::dot(lp.objective()->terms, d)) > 0;
}

inline bool verify(const LinearProgram& lp, const LpVerdict& v) {
  switch (v.status) {
    case LpStatus::kFeasible:
      return is_feasible_point(lp, v.point);
    case LpStatus::kInfeasible:
      return is_farkas_certificate(lp, v.multipliers);
    case LpStatus::kOptimal:
      return is_feasible_point(lp, v.point) && detail::dot(lp.objective()->terms, v.point) == v.value &&
             is_dual_certificate(lp, v.multipliers, v.value);
    case LpStatus::kUnbounded:
      return is_improving_ray(lp, v.ray);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Solver.

inline constexpr std::size_t kMaxTableauCells = 4'000'000;

namespace detail {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const auto& rows = lp.constraints();
    m_ = rows.size();
    n_ = static_cast<std::size_t>(lp.variable_count());
    // Column layout: originals, then per-row slack/surplus, then artificials.
    std::vector<Relation> rel(m_);
    flip_.assign(m_, false);
    std::size_t aux = 0, art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      rel[i] = rows[i].relation;
      if (sgn(rows[i].rhs) < 0) {
        flip_[i] = true;
        if (rel[i] == Relation::kLe) rel[i] = Relation::kGe;
        else if (rel[i] == Relation::kGe) rel[i] = Relation::kLe;
      }
      if (rel[i] != Relation::kEq) ++aux;
      if (rel[i] != Relation::kLe) ++art;
    }
    first_art_ = n_ + aux;
    cols_ = n_ + aux + art;
    if ((m_ + 1) * (cols_ + 1) > kMaxTableauCells) {
      throw Error(ErrorCode::kSpaceTooLarge, "tableau of " + std::to_string(m_ + 1) + " x " +
                                                 std::to_string(cols_ + 1) + " exceeds the dense limit");
    }
    t_.assign(m_ + 1, std::vector<Rational>(cols_ + 1));
    basis_.assign(m_, 0);
    id_col_.assign(m_, 0);
    aux_col_.assign(m_, SIZE_MAX);
    std::size_t next_aux = n_, next_art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const int s = flip_[i] ? -1 : 1;
      for (const auto& [v, c] : rows[i].terms) t_[i][v] += s * c;
      t_[i][cols_] = s * rows[i].rhs;
      if (rel[i] == Relation::kLe) {
        t_[i][next_aux] = 1;
        aux_col_[i] = next_aux;
        id_col_[i] = next_aux;
        basis_[i] = next_aux++;
      } else {
        if (rel[i] == Relation::kGe) {
          t_[i][next_aux] = -1;
          aux_col_[i] = next_aux++;
        }
        t_[i][next_art] = 1;
        id_col_[i] = next_art;
        basis_[i] = next_art++;
      }
    }
  }

  LpVerdict solve() {
    // Phase 1: maximise -(sum of artificials).
    std::vector<Rational> cost(cols_);
    for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = -1;
    load_objective(cost);
    run();
    if (sgn(t_[m_][cols_]) < 0) return infeasible(cost);
    drive_out_artificials();

    if (!lp_.objective()) {
      LpVerdict v;
      v.status = LpStatus::kFeasible;
      v.point = primal();
      return v;
    }
    std::vector<Rational> c2(cols_);
    const Rational s = objective_sign(lp_);
    for (const auto& [v, c] : lp_.objective()->terms) c2[v] += s * c;
    load_objective(c2);
    if (auto ray = run()) {
      LpVerdict v;
      v.status = LpStatus::kUnbounded;
      v.ray = std::move(*ray);
      return v;
    }
    LpVerdict v;
    v.status = LpStatus::kOptimal;
    v.point = primal();
    v.value = s * t_[m_][cols_];
    v.multipliers = multipliers(c2);
    return v;
  }

 private:
  void load_objective(const std::vector<Rational>& cost) {
    auto& z = t_[m_];
    for (std::size_t j = 0; j <= cols_; ++j) z[j] = j < cols_ ? Rational(-cost[j]) : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(t_[i][j]) != 0) z[j] += cb * t_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = t_[r];
    const Rational inv = 1 / pr[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j : nz) t_[i][j] -= f * pr[j];
    }
    basis_[r] = c;
  }

  // Bland's rule; artificials never re-enter. Returns a ray if unbounded.
  std::optional<std::vector<Rational>> run() {
    while (true) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(t_[m_][j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return std::nullopt;
      std::size_t leave = SIZE_MAX;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == SIZE_MAX || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == SIZE_MAX) {
        std::vector<Rational> d(n_);
        if (enter < n_) d[enter] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
          if (basis_[i] < n_) d[basis_[i]] = -t_[i][enter];
        }
        return d;
      }
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    }
    return x;
  }

  // y_i = c_B B^-1 e_i, read from the reduced cost of row i's identity
  // column, then mapped back through the row flips.
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = t_[m_][id_col_[i]] + cost[id_col_[i]];
      if (flip_[i]) y[i] = -y[i];
    }
    return y;
  }

  LpVerdict infeasible(const std::vector<Rational>& cost) const {
    LpVerdict v;
    v.status = LpStatus::kInfeasible;
    v.multipliers = multipliers(cost);
    return v;
  }

  const LinearProgram& lp_;
  std::size_t m_ = 0, n_ = 0, cols_ = 0, first_art_ = 0;
  std::vector<bool> flip_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_, id_col_, aux_col_;
};

}  // namespace detail

inline LpVerdict solve(const LinearProgram& lp) {
  detail::Tableau tableau(lp);
  LpVerdict v = tableau.solve();
  if (!verify(lp, v)) {
    throw Error(ErrorCode::kInternalInconsistency,
                std::string("simplex produced an unverifiable ") + lp_status_name(v.status) + " verdict");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Line-oriented text export, one record per line:
//   variables <n>
//   var <index> <name>
//   objective max|min <coef> <index> ...
//   constraint <name|-> <=|>=|= <rhs> <coef> <index> ...
// Rationals are written "num/den".

inline std::string export_lp(const LinearProgram& lp) {
  std::ostringstream out;
  out << "variables " << lp.variable_count() << "\n";
  for (int v = 0; v < lp.variable_count(); ++v) out << "var " << v << " " << lp.variable_names()[v] << "\n";
  if (lp.objective()) {
    out << "objective " << (lp.objective()->sense == Sense::kMaximize ? "max" : "min");
    for (const auto& [v, c] : lp.objective()->terms) out << " " << to_string(c) << " " << v;
    out << "\n";
  }
  for (const auto& c : lp.constraints()) {
    out << "constraint " << (c.name.empty() ? "-" : c.name) << " " << relation_symbol(c.relation) << " "
        << to_string(c.rhs);
    for (const auto& [v, k] : c.terms) out << " " << to_string(k) << " " << v;
    out << "\n";
  }
  return out.str();
}

inline LinearProgram import_lp(const std::string& text) {
  LinearProgram lp;
  std::istringstream in(text);
  std::string line;
  auto read_terms = [](std::istringstream& ls) {
    SparseRow terms;
    std::string coef;
    int v = 0;
    while (ls >> coef) {
      if (!(ls >> v)) throw Error(ErrorCode::kParse, "coefficient without variable index");
      terms.emplace_back(v, parse_rational(coef));
    }
    return terms;
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "variables") {
      continue;
    } else if (kind == "var") {
      int index = 0;
      std::string name;
      ls >> index >> name;
      if (index != lp.variable_count()) throw Error(ErrorCode::kParse, "variables out of order");
      lp.add_variable(name);
    } else if (kind == "objective") {
      std::string sense;
      ls >> sense;
      if (sense != "max" && sense != "min") throw Error(ErrorCode::kParse, "objective sense must be max or min");
      lp.set_objective(read_terms(ls), sense == "max" ? Sense::kMaximize : Sense::kMinimize);
    } else if (kind == "constraint") {
      std::string name, rel, rhs;
      ls >> name >> rel >> rhs;
      Relation r;
      if (rel == "<=") r = Relation::kLe;
      else if (rel == ">=") r = Relation::kGe;
      else if (rel == "=") r = Relation::kEq;
      else throw Error(ErrorCode::kParse, "bad relation '" + rel + "'");
      lp.add_constraint(read_terms(ls), r, parse_rational(rhs), name == "-" ? "" : name);
    } else {
      throw Error(ErrorCode::kParse, "unknown record '" + kind + "'");
    }
  }
  return lp;
}

inline Json verdict_to_json(const LpVerdict& v) {
  auto strings = [](const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
  };
  Json j{{"status", lp_status_name(v.status)}};
  switch (v.status) {
    case LpStatus::kFeasible:
      j["point"] = strings(v.point);
      break;
    case LpStatus::kInfeasible:
      j["farkas"] = strings(v.multipliers);
      break;
    case LpStatus::kOptimal:
      j["value"] = to_string(v.value);
      j["point"] = strings(v.point);
      j["dual"] = strings(v.multipliers);
      break;
    case LpStatus::kUnbounded:
      j["ray"] = strings(v.ray);
      break;
  }
  return j;
}

}  // namespace ptlab

#endif  // PTLAB_LP_HPP_
