#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chl/syntax.hpp"

namespace chl {

/// Gamma |- Pi with Pi empty or a single formula. The antecedent is kept as a
/// sorted multiset.
struct Sequent {
  std::vector<Formula> antecedent;
  std::optional<Formula> stoup;

  Sequent() = default;
  Sequent(std::vector<Formula> ant, std::optional<Formula> st) : antecedent(std::move(ant)), stoup(std::move(st)) {
    std::sort(antecedent.begin(), antecedent.end());
  }

  FormulaSet set_view() const { return make_set(antecedent); }
  Sequent as_set() const { return Sequent(set_view(), stoup); }

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.antecedent == b.antecedent && a.stoup == b.stoup;
  }
};

/// Equality up to duplicate antecedent formulas.
inline bool same_set_view(const Sequent& a, const Sequent& b) {
  return a.stoup == b.stoup && a.set_view() == b.set_view();
}

// Sorted-multiset helpers.

inline std::size_t count_of(const std::vector<Formula>& ms, const Formula& f) {
  auto [lo, hi] = std::equal_range(ms.begin(), ms.end(), f);
  return static_cast<std::size_t>(hi - lo);
}

inline std::vector<Formula> ms_add(std::vector<Formula> ms, const Formula& f) {
  ms.insert(std::upper_bound(ms.begin(), ms.end(), f), f);
  return ms;
}

inline std::vector<Formula> ms_sum(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// a minus b as multisets; nullopt unless b is contained in a.
inline std::optional<std::vector<Formula>> ms_minus(const std::vector<Formula>& a, std::vector<Formula> b) {
  std::sort(b.begin(), b.end());
  if (!std::includes(a.begin(), a.end(), b.begin(), b.end())) return std::nullopt;
  std::vector<Formula> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Formula> ms_remove_all(const std::vector<Formula>& a, const Formula& f) {
  std::vector<Formula> out;
  for (const auto& g : a)
    if (!(g == f)) out.push_back(g);
  return out;
}

inline std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += render(s.antecedent[i]);
  }
  out += s.antecedent.empty() ? "|-" : " |-";
  if (s.stoup) out += " " + render(*s.stoup);
  return out;
}

/// Parses `p, q |- r`; either side may be empty. `a => b` is read as
/// a -> (a & b).
inline Sequent parse_sequent(std::string_view text) {
  const std::size_t turn = text.find("|-");
  if (turn == std::string_view::npos) throw ParseError("expected '|-'", text.size());
  std::vector<Formula> ant;
  std::string_view left = text.substr(0, turn);
  std::size_t start = 0;
  bool any = left.find_first_not_of(" \t\r\n") != std::string_view::npos;
  while (any) {
    std::size_t comma = left.find(',', start);
    std::string_view piece = left.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty antecedent formula", start);
    try {
      ant.push_back(expand_heyting(parse_formula(piece)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in antecedent: ") + e.what(), start + e.position);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::optional<Formula> stoup;
  std::string_view right = text.substr(turn + 2);
  if (right.find_first_not_of(" \t\r\n") != std::string_view::npos) {
    try {
      stoup = expand_heyting(parse_formula(right));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in stoup: ") + e.what(), turn + 2 + e.position);
    }
  }
  return Sequent(std::move(ant), std::move(stoup));
}

/// Gamma^& |- Pi: antecedent conjoined left-associatively, 1 when empty.
/// The stoup is left as is, including when empty.
inline Formula antecedent_conjunction(const std::vector<Formula>& ant) {
  if (ant.empty()) return Formula::one();
  Formula acc = ant.front();
  for (std::size_t i = 1; i < ant.size(); ++i) acc = Formula::conj(acc, ant[i]);
  return acc;
}

inline Sequent normalize_sequent(const Sequent& s) { return Sequent({antecedent_conjunction(s.antecedent)}, s.stoup); }

enum class RuleId {
  id, ax0, ax1, wl, wr, cut, mix, contraction,
  andl, andr, orl, orr1, orr2, arrla, arrlb, arrr,
  negl, negr, arrlc, arrld,
  assumption
};

enum class ProofMode { set, multiset };

struct RuleInfo {
  RuleId rule;
  const char* key;    // JSON name
  const char* label;  // printed label
  int arity;
};

inline const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> t = {
      {RuleId::id, "id", "(id)", 0},
      {RuleId::ax0, "ax0", "(0)", 0},
      {RuleId::ax1, "ax1", "(1)", 0},
      {RuleId::wl, "wl", "(w-l)", 1},
      {RuleId::wr, "wr", "(w-r)", 1},
      {RuleId::cut, "cut", "(cut)", 2},
      {RuleId::mix, "mix", "(mix)", 2},
      {RuleId::contraction, "contraction", "(c-l)", 1},
      {RuleId::andl, "andl", "(∧-l)", 1},
      {RuleId::andr, "andr", "(∧-r)", 2},
      {RuleId::orl, "orl", "(∨-l)", 2},
      {RuleId::orr1, "orr1", "(∨-r)", 1},
      {RuleId::orr2, "orr2", "(∨-r)", 1},
      {RuleId::arrla, "arrla", "(→-l(a))", 2},
      {RuleId::arrlb, "arrlb", "(→-l(b))", 2},
      {RuleId::arrr, "arrr", "(→-r)", 2},
      {RuleId::negl, "negl", "(¬-l)", 1},
      {RuleId::negr, "negr", "(¬-r)", 1},
      {RuleId::arrlc, "arrlc", "(→-l(c))", 2},
      {RuleId::arrld, "arrld", "(→-l(d))", 2},
      {RuleId::assumption, "assumption", "(hyp)", 0},
  };
  return t;
}

inline const RuleInfo& rule_info(RuleId r) {
  for (const auto& i : rule_table())
    if (i.rule == r) return i;
  throw std::logic_error("unknown rule id");
}

inline std::optional<RuleId> rule_from_key(std::string_view key) {
  for (const auto& i : rule_table())
    if (key == i.key) return i.rule;
  return std::nullopt;
}

inline bool is_macro(RuleId r) {
  return r == RuleId::negl || r == RuleId::negr || r == RuleId::arrlc || r == RuleId::arrld;
}

inline bool is_cut(RuleId r) { return r == RuleId::cut || r == RuleId::mix; }

}  // namespace chl
