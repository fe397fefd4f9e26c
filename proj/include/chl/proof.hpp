#pragma once

#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chl/rules.hpp"

namespace chl {

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

struct ProofNode {
  RuleId rule;
  Sequent conclusion;
  std::vector<Proof> premises;
};

inline Proof make_proof(RuleId rule, Sequent conclusion, std::vector<Proof> premises = {}) {
  return std::make_shared<const ProofNode>(ProofNode{rule, std::move(conclusion), std::move(premises)});
}

inline std::vector<Sequent> premise_sequents(const ProofNode& n) {
  std::vector<Sequent> out;
  for (const auto& p : n.premises) out.push_back(p->conclusion);
  return out;
}

struct ProofVerdict {
  bool ok = true;
  bool cut_free = true;
  std::string reason;
  std::vector<int> path;  // premise indices from the root to the failing node
  Sequent failing;
};

inline ProofVerdict check_sequent_proof(const Proof& proof, const std::vector<Sequent>& assumptions = {},
                                        ProofMode mode = ProofMode::set) {
  ProofVerdict v;
  std::vector<int> path;
  std::function<bool(const Proof&)> walk = [&](const Proof& n) -> bool {
    if (!n) {
      v = {false, v.cut_free, "missing proof node", path, {}};
      return false;
    }
    if (is_cut(n->rule)) v.cut_free = false;
    if (n->rule == RuleId::assumption) {
      bool found = false;
      for (const auto& a : assumptions)
        if (mode == ProofMode::multiset ? a == n->conclusion : same_set_view(a, n->conclusion)) found = true;
      if (!n->premises.empty() || !found) {
        v = {false, v.cut_free, render(n->conclusion) + " is not an assumption", path, n->conclusion};
        return false;
      }
      return true;
    }
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!walk(n->premises[i])) return false;
      path.pop_back();
    }
    StepVerdict s = check_step(n->rule, premise_sequents(*n), n->conclusion, mode);
    if (!s.ok) {
      v = {false, v.cut_free, s.reason + " (at " + render(n->conclusion) + ")", path, n->conclusion};
      return false;
    }
    return true;
  };
  if (walk(proof)) {
    bool cf = true;
    std::function<void(const Proof&)> scan = [&](const Proof& n) {
      if (is_cut(n->rule)) cf = false;
      for (const auto& p : n->premises) scan(p);
    };
    scan(proof);
    v.cut_free = cf;
  }
  return v;
}

inline bool contains_cut(const Proof& p) {
  if (is_cut(p->rule)) return true;
  for (const auto& q : p->premises)
    if (contains_cut(q)) return true;
  return false;
}

inline std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& q : p->premises) n += proof_size(q);
  return n;
}

inline int proof_height(const Proof& p) {
  int h = 0;
  for (const auto& q : p->premises) h = std::max(h, proof_height(q));
  return h + 1;
}

// Weight and rank.

inline int weight(const Formula& f) {
  switch (f.op()) {
    case Op::zero:
      return 0;
    case Op::var:
    case Op::one:
      return 1;
    default:
      return weight(f.left()) + weight(f.right()) + 1;
  }
}

/// Length of the longest upward thread from `p` along which `a` stays in
/// the antecedent.
inline int right_rank(const Proof& p, const Formula& a) {
  if (count_of(p->conclusion.antecedent, a) == 0) return 0;
  int best = 0;
  for (const auto& q : p->premises) best = std::max(best, right_rank(q, a));
  return best + 1;
}

/// Length of the longest upward thread from `p` along which `a` stays the stoup.
inline int left_rank(const Proof& p, const Formula& a) {
  if (p->conclusion.stoup != a) return 0;
  int best = 0;
  for (const auto& q : p->premises) best = std::max(best, left_rank(q, a));
  return best + 1;
}

struct ProofMetrics {
  int weight = 0;
  int left_rank = 0;
  int right_rank = 0;
  int rank = 0;
};

/// Metrics of a cut or mix node.
inline ProofMetrics mix_metrics(const Proof& p) {
  if (!is_cut(p->rule) || p->premises.size() != 2 || !p->premises[0]->conclusion.stoup)
    throw std::invalid_argument("metrics are defined for cut and mix nodes");
  const Formula a = *p->premises[0]->conclusion.stoup;
  ProofMetrics m;
  m.weight = weight(a);
  m.left_rank = left_rank(p->premises[0], a);
  m.right_rank = right_rank(p->premises[1], a);
  m.rank = m.left_rank + m.right_rank;
  return m;
}

// Structural adjustment.

/// Extends `p` by weakenings, contractions (multiset mode only) and a final
/// (w-r) so that it concludes `target`. Requires every antecedent formula of
/// `p` to occur in `target`.
inline Proof adjust(Proof p, const Sequent& target, ProofMode mode) {
  auto cur = [&]() -> const Sequent& { return p->conclusion; };
  if (cur().stoup && cur().stoup != target.stoup)
    throw std::logic_error("adjust cannot change a nonempty stoup");
  const FormulaSet have = cur().set_view(), want = target.set_view();
  if (!set_includes(want, have)) throw std::logic_error("adjust cannot remove antecedent formulas");
  if (mode == ProofMode::multiset) {
    for (const auto& f : have) {
      std::size_t need = count_of(target.antecedent, f);
      while (count_of(cur().antecedent, f) > need) {
        auto ant = *ms_minus(cur().antecedent, {f});
        p = make_proof(RuleId::contraction, Sequent(ant, cur().stoup), {p});
      }
    }
    for (const auto& f : want) {
      while (count_of(cur().antecedent, f) < count_of(target.antecedent, f))
        p = make_proof(RuleId::wl, Sequent(ms_add(cur().antecedent, f), cur().stoup), {p});
    }
  } else {
    for (const auto& f : set_difference(want, have))
      p = make_proof(RuleId::wl, Sequent(ms_add(cur().antecedent, f), cur().stoup), {p});
    if (cur().antecedent != target.antecedent) p = make_proof(p->rule, Sequent(target.antecedent, cur().stoup), p->premises);
  }
  if (!cur().stoup && target.stoup) p = make_proof(RuleId::wr, Sequent(cur().antecedent, target.stoup), {p});
  return p;
}

// Macro expansion.

namespace detail {

/// Antecedent minus one copy of each active; in set mode a removed formula
/// stays when it belongs to `keep`.
inline std::vector<Formula> remove_actives(const std::vector<Formula>& ant, const std::vector<Formula>& actives,
                                           ProofMode mode, const FormulaSet& keep) {
  std::vector<Formula> out = ant;
  for (const auto& a : actives) {
    if (mode == ProofMode::set && set_contains(keep, a)) continue;
    auto r = ms_minus(out, {a});
    if (!r) throw std::invalid_argument("macro premise lacks " + render(a));
    out = std::move(*r);
  }
  if (mode == ProofMode::set) out = make_set(out);
  return out;
}

inline std::vector<Formula> plus(std::vector<Formula> ant, const Formula& f, ProofMode mode) {
  ant = ms_add(std::move(ant), f);
  if (mode == ProofMode::set) ant = make_set(ant);
  return ant;
}

}  // namespace detail

/// Primitive-rule derivation of a macro step: leaves are `premises`, the
/// root concludes `conclusion`.
inline Proof expand_macro(RuleId rule, const std::vector<Proof>& premises, const Sequent& conclusion,
                          ProofMode mode = ProofMode::set) {
  std::vector<Sequent> ps;
  for (const auto& p : premises) ps.push_back(p->conclusion);
  std::string why;
  auto m = match_step(rule, ps, conclusion, mode, &why);
  if (!m) throw std::invalid_argument(std::string(rule_info(rule).label) + ": " + why);
  const FormulaSet keep = conclusion.set_view();
  switch (rule) {
    case RuleId::negl: {
      Proof zero = make_proof(RuleId::ax0, Sequent({Formula::zero()}, std::nullopt));
      return make_proof(RuleId::arrla, conclusion, {premises[0], zero});
    }
    case RuleId::negr: {
      const Formula a = conclusion.stoup->left();
      Proof n1 = make_proof(RuleId::wr, Sequent(ps[0].antecedent, Formula::zero()), {premises[0]});
      Proof n2 = make_proof(RuleId::ax0, Sequent({Formula::zero()}, std::nullopt));
      Proof n3 = make_proof(RuleId::wl, Sequent({Formula::zero(), Formula::neg(a)}, std::nullopt), {n2});
      return make_proof(RuleId::arrr, conclusion, {n1, n3});
    }
    case RuleId::arrlc: {
      const Formula f = m->principals.front();
      const Formula na = Formula::neg(f.left());
      Proof q1 = make_proof(RuleId::wl, Sequent(detail::plus(ps[1].antecedent, na, mode), ps[1].stoup), {premises[1]});
      Proof q2 = make_proof(RuleId::wl, Sequent(detail::plus(ps[0].antecedent, f.right(), mode), std::nullopt),
                            {premises[0]});
      if (mode == ProofMode::set && q1->conclusion.antecedent == ps[1].set_view()) q1 = premises[1];
      if (mode == ProofMode::set && q2->conclusion.antecedent == ps[0].set_view()) q2 = premises[0];
      return make_proof(RuleId::arrlb, conclusion, {q1, q2});
    }
    case RuleId::arrld: {
      const Formula f = m->principals.front();
      const Formula b = *ps[0].stoup;
      const Formula nb = Formula::neg(b);
      Sequent r1s(detail::remove_actives(ps[1].antecedent, {b}, mode, keep), nb);
      Proof r1 = expand_macro(RuleId::negr, {premises[1]}, r1s, mode);
      Sequent r2s(detail::plus(ps[0].antecedent, nb, mode), std::nullopt);
      Proof r2 = expand_macro(RuleId::negl, {premises[0]}, r2s, mode);
      (void)f;
      return make_proof(RuleId::arrlb, conclusion, {r1, r2});
    }
    default:
      throw std::invalid_argument("not a macro rule");
  }
}

/// Replaces every macro node by its primitive derivation.
inline Proof expand_macros(const Proof& p, ProofMode mode = ProofMode::set) {
  std::vector<Proof> prem;
  bool changed = false;
  for (const auto& q : p->premises) {
    prem.push_back(expand_macros(q, mode));
    changed = changed || prem.back() != q;
  }
  if (is_macro(p->rule)) return expand_macro(p->rule, prem, p->conclusion, mode);
  if (!changed) return p;
  return make_proof(p->rule, p->conclusion, std::move(prem));
}

// Mode conversion.

/// Converts a valid set-mode proof into a multiset-mode proof whose sequents
/// are duplicate-free at every converted node. Cuts become mixes.
inline Proof to_multiset_proof(const Proof& proof) {
  std::function<Proof(const Proof&)> conv = [&](const Proof& n) -> Proof {
    const Sequent C = n->conclusion.as_set();
    std::vector<Proof> prem;
    for (const auto& q : n->premises) prem.push_back(conv(q));
    switch (n->rule) {
      case RuleId::id:
      case RuleId::ax0:
      case RuleId::ax1:
      case RuleId::assumption:
        return make_proof(n->rule, C);
      case RuleId::wl:
        if (prem[0]->conclusion == C) return prem[0];
        return adjust(prem[0], C, ProofMode::multiset);
      case RuleId::wr:
        return make_proof(RuleId::wr, C, prem);
      case RuleId::cut: {
        const Sequent& l = prem[0]->conclusion;
        const Sequent& r = prem[1]->conclusion;
        Sequent mixed(ms_sum(l.antecedent, ms_remove_all(r.antecedent, *l.stoup)), r.stoup);
        return adjust(make_proof(RuleId::mix, mixed, prem), C, ProofMode::multiset);
      }
      default:
        break;
    }
    std::vector<Sequent> ps;
    for (const auto& q : n->premises) ps.push_back(q->conclusion);
    std::string why;
    auto m = match_step(n->rule, ps, n->conclusion, ProofMode::set, &why);
    if (!m) throw std::invalid_argument("to_multiset_proof: invalid step: " + why);
    const FormulaSet cs = C.antecedent;
    std::vector<std::vector<Formula>> ctx;
    if (m->shared) {
      FormulaSet g = cs;
      for (const auto& q : prem) g = set_intersection(g, q->conclusion.set_view());
      ctx.assign(prem.size(), g);
    } else {
      for (const auto& q : prem) ctx.push_back(set_intersection(q->conclusion.set_view(), cs));
    }
    std::vector<Proof> fitted;
    std::vector<Formula> concl_ant(m->principals.begin(), m->principals.end());
    std::sort(concl_ant.begin(), concl_ant.end());
    for (std::size_t i = 0; i < prem.size(); ++i) {
      std::vector<Formula> act = m->actives[i];
      std::sort(act.begin(), act.end());
      fitted.push_back(adjust(prem[i], Sequent(ms_sum(act, ctx[i]), prem[i]->conclusion.stoup), ProofMode::multiset));
      if (!m->shared || i == 0) concl_ant = ms_sum(concl_ant, ctx[i]);
    }
    Proof out = make_proof(n->rule, Sequent(concl_ant, C.stoup), fitted);
    return adjust(out, C, ProofMode::multiset);
  };
  return conv(expand_macros(proof, ProofMode::set));
}

/// Converts a valid multiset-mode proof into a set-mode proof. Mixes become
/// cuts and contractions disappear.
inline Proof to_set_proof(const Proof& proof) {
  std::function<Proof(const Proof&)> conv = [&](const Proof& n) -> Proof {
    const Sequent C = n->conclusion.as_set();
    std::vector<Proof> prem;
    for (const auto& q : n->premises) prem.push_back(conv(q));
    switch (n->rule) {
      case RuleId::contraction:
        return prem[0];
      case RuleId::wl:
        if (prem[0]->conclusion == C) return prem[0];
        return make_proof(RuleId::wl, C, prem);
      case RuleId::mix:
        return make_proof(RuleId::cut, C, prem);
      default:
        return make_proof(n->rule, C, prem);
    }
  };
  return conv(proof);
}

// Serialisation and printing.

inline nlohmann::ordered_json proof_to_json(const Proof& p) {
  nlohmann::ordered_json j;
  j["rule"] = rule_info(p->rule).key;
  j["conclusion"] = render(p->conclusion);
  j["premises"] = nlohmann::ordered_json::array();
  for (const auto& q : p->premises) j["premises"].push_back(proof_to_json(q));
  return j;
}

inline Proof proof_from_json(const nlohmann::json& j) {
  try {
    const std::string key = j.at("rule").get<std::string>();
    auto rule = rule_from_key(key);
    if (!rule) throw std::invalid_argument("unknown rule '" + key + "'");
    Sequent concl = parse_sequent(j.at("conclusion").get<std::string>());
    std::vector<Proof> prem;
    const nlohmann::json premises = j.value("premises", nlohmann::json::array());
    for (const auto& q : premises) prem.push_back(proof_from_json(q));
    return make_proof(*rule, std::move(concl), std::move(prem));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed sequent: ") + e.what());
  }
}

/// One line per node, premises indented below their conclusion.
inline std::string render_proof(const Proof& p) {
  std::ostringstream out;
  std::function<void(const Proof&, int)> go = [&](const Proof& n, int depth) {
    out << std::string(2 * depth, ' ') << render(n->conclusion) << "   " << rule_info(n->rule).label << "\n";
    for (const auto& q : n->premises) go(q, depth + 1);
  };
  go(p, 0);
  return out.str();
}


/// Inverse of render_proof.
inline Proof parse_proof_tree(const std::string& text) {
  struct Open {
    int depth;
    RuleId rule;
    Sequent conclusion;
    std::vector<Proof> premises;
  };
  std::vector<Open> stack;
  Proof root;
  auto close_to = [&](int depth) {
    while (!stack.empty() && stack.back().depth >= depth) {
      Open top = std::move(stack.back());
      stack.pop_back();
      Proof p = make_proof(top.rule, std::move(top.conclusion), std::move(top.premises));
      if (stack.empty()) {
        if (root) throw std::invalid_argument("proof tree has more than one root");
        root = p;
      } else {
        stack.back().premises.push_back(p);
      }
    }
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    const std::size_t indent = line.find_first_not_of(' ');
    if (indent % 2) throw std::invalid_argument("line " + std::to_string(lineno) + ": odd indentation");
    const int depth = static_cast<int>(indent / 2);
    const std::size_t sep = line.rfind("   ");
    if (sep == std::string::npos || sep < indent) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing rule label");
    const std::string label = line.substr(line.find_first_not_of(' ', sep));
    std::optional<RuleId> rule;
    for (const auto& info : rule_table())
      if (info.label == label || info.key == label) rule = info.rule;
    if (!rule) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown rule label '" + label + "'");
    if (depth > 0 && (stack.empty() || depth > stack.back().depth + 1))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": indentation skips a level");
    close_to(depth);
    Sequent concl;
    try {
      concl = parse_sequent(line.substr(indent, sep - indent));
    } catch (const ParseError& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    stack.push_back({depth, *rule, std::move(concl), {}});
  }
  close_to(0);
  if (!root) throw std::invalid_argument("empty proof tree");
  return root;
}

}  // namespace chl
