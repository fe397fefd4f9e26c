#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "chl/proof.hpp"

namespace chl {

class MixEliminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class MixEliminator {
 public:
  explicit MixEliminator(std::size_t limit) : limit_(limit) {}

  Proof eliminate(const Proof& p) {
    if (!contains_cut(p)) return p;
    std::vector<Proof> prem;
    for (const auto& q : p->premises) prem.push_back(eliminate(q));
    if (p->rule == RuleId::mix || p->rule == RuleId::cut) {
      if (!prem[0]->conclusion.stoup) throw MixEliminationError("left premise of a cut has an empty stoup");
      Proof r = reduce(prem[0], prem[1]);
      return adjust(r, p->conclusion, ProofMode::multiset);
    }
    return make_proof(p->rule, p->conclusion, std::move(prem));
  }

  std::size_t reductions() const { return steps_; }

 private:
  static const Sequent& seq(const Proof& p) { return p->conclusion; }

  static StepMatch match(const Proof& p) {
    std::string why;
    auto m = match_step(p->rule, premise_sequents(*p), p->conclusion, ProofMode::multiset, &why);
    if (!m) throw MixEliminationError("invalid inference in mix elimination input: " + why);
    return *m;
  }

  static std::vector<Formula> sorted(std::vector<Formula> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Cut-free proof of Gamma, Delta*a |- Pi from cut-free d1 : Gamma |- a
  /// and d2 : Delta |- Pi with a in Delta.
  Proof reduce(const Proof& d1, const Proof& d2) {
    if (++steps_ > limit_) throw MixEliminationError("mix elimination exceeded its step limit");
    const Formula a = *seq(d1).stoup;
    if (count_of(seq(d2).antecedent, a) == 0) throw MixEliminationError("mix formula absent from the right premise");
    const Sequent target(ms_sum(seq(d1).antecedent, ms_remove_all(seq(d2).antecedent, a)), seq(d2).stoup);
    if (count_of(seq(d1).antecedent, a) > 0) return adjust(d2, target, ProofMode::multiset);
    if (d2->rule == RuleId::id) return d1;
    if (right_rank(d2, a) > 1) return reduce_right(d1, d2, a, target);
    if (left_rank(d1, a) > 1) return reduce_left(d1, d2, a, target);
    return reduce_principal(d1, d2, a, target);
  }

  Proof reduce_right(const Proof& d1, const Proof& d2, const Formula& a, const Sequent& target) {
    const RuleId r2 = d2->rule;
    if (r2 == RuleId::wl || r2 == RuleId::contraction)
      return adjust(reduce(d1, d2->premises[0]), target, ProofMode::multiset);
    const StepMatch m = match(d2);
    const auto& principals = m.principals;
    const bool a_principal = std::find(principals.begin(), principals.end(), a) != principals.end();
    // (->-l(b)) with principal ~b: the left premise keeps ~b.
    if (r2 == RuleId::arrlb && a_principal && a.is_neg()) {
      Proof e1 = reduce(d1, d2->premises[0]);
      Proof zero = make_proof(RuleId::ax0, Sequent({Formula::zero()}, std::nullopt));
      Proof e2 = reduce(e1, zero);
      return adjust(e2, target, ProofMode::multiset);
    }
    const std::vector<Formula>& gamma = seq(d1).antecedent;
    std::vector<Proof> prem;
    std::vector<std::vector<Formula>> ctx;
    std::vector<bool> touched;
    for (std::size_t i = 0; i < d2->premises.size(); ++i) {
      const Proof& q = d2->premises[i];
      const std::vector<Formula> act = sorted(m.actives[i]);
      std::vector<Formula> c = *ms_minus(seq(q).antecedent, act);
      if (count_of(seq(q).antecedent, a) > 0) {
        Proof e = reduce(d1, q);
        c = ms_sum(gamma, ms_remove_all(c, a));
        prem.push_back(adjust(e, Sequent(ms_sum(act, c), seq(q).stoup), ProofMode::multiset));
        touched.push_back(true);
      } else {
        prem.push_back(q);
        touched.push_back(false);
      }
      ctx.push_back(std::move(c));
    }
    std::vector<Formula> ant = sorted(principals);
    if (m.shared) {
      std::vector<Formula> common;
      for (std::size_t i = 0; i < ctx.size(); ++i)
        if (touched[i]) common = ctx[i];
      for (std::size_t i = 0; i < prem.size(); ++i)
        if (!touched[i])
          prem[i] = adjust(prem[i], Sequent(ms_sum(sorted(m.actives[i]), common), seq(prem[i]).stoup),
                           ProofMode::multiset);
      ant = ms_sum(ant, common);
    } else {
      for (const auto& c : ctx) ant = ms_sum(ant, c);
    }
    Proof n = make_proof(r2, Sequent(ant, seq(d2).stoup), std::move(prem));
    if (a_principal) return adjust(reduce(d1, n), target, ProofMode::multiset);
    return adjust(n, target, ProofMode::multiset);
  }

  Proof reduce_left(const Proof& d1, const Proof& d2, const Formula& a, const Sequent& target) {
    const RuleId r1 = d1->rule;
    if (r1 == RuleId::wl || r1 == RuleId::contraction)
      return adjust(reduce(d1->premises[0], d2), target, ProofMode::multiset);
    if (r1 != RuleId::andl && r1 != RuleId::orl && r1 != RuleId::arrla)
      throw MixEliminationError(std::string("unexpected left premise rule ") + rule_info(r1).label);
    const StepMatch m = match(d1);
    const std::vector<Formula> delta = ms_remove_all(seq(d2).antecedent, a);
    std::vector<Proof> prem;
    std::vector<std::vector<Formula>> ctx;
    for (std::size_t i = 0; i < d1->premises.size(); ++i) {
      const Proof& q = d1->premises[i];
      std::vector<Formula> c = *ms_minus(seq(q).antecedent, sorted(m.actives[i]));
      if (seq(q).stoup == a) {
        prem.push_back(adjust(reduce(q, d2), Sequent(ms_sum(seq(q).antecedent, delta), seq(d2).stoup),
                              ProofMode::multiset));
        c = ms_sum(c, delta);
      } else {
        prem.push_back(q);
      }
      ctx.push_back(std::move(c));
    }
    std::vector<Formula> ant = sorted(m.principals);
    if (m.shared) {
      ant = ms_sum(ant, ctx[0]);
    } else {
      for (const auto& c : ctx) ant = ms_sum(ant, c);
    }
    Proof n = make_proof(r1, Sequent(ant, seq(d2).stoup), std::move(prem));
    return adjust(n, target, ProofMode::multiset);
  }

  Proof reduce_principal(const Proof& d1, const Proof& d2, const Formula& a, const Sequent& target) {
    const RuleId r1 = d1->rule, r2 = d2->rule;
    if (r1 == RuleId::assumption || r2 == RuleId::assumption)
      throw MixEliminationError("cannot eliminate a cut on an assumption");
    if (r1 == RuleId::wr) return adjust(d1->premises[0], target, ProofMode::multiset);
    if (r2 == RuleId::wl) return adjust(d2->premises[0], target, ProofMode::multiset);
    if (r1 == RuleId::andr && r2 == RuleId::andl) {
      const StepMatch m = match(d2);
      Proof e = d2->premises[0];
      for (const auto& x : m.actives[0]) {
        if (count_of(seq(e).antecedent, x) == 0) continue;
        e = reduce(x == a.left() ? d1->premises[0] : d1->premises[1], e);
      }
      return adjust(e, target, ProofMode::multiset);
    }
    if ((r1 == RuleId::orr1 || r1 == RuleId::orr2) && r2 == RuleId::orl) {
      Proof q = d2->premises[r1 == RuleId::orr1 ? 0 : 1];
      return adjust(reduce(d1->premises[0], q), target, ProofMode::multiset);
    }
    if (r1 == RuleId::arrr && r2 == RuleId::arrla) {
      Proof e1 = reduce(d2->premises[0], d1->premises[0]);
      Proof e2 = reduce(e1, d2->premises[1]);
      return adjust(e2, target, ProofMode::multiset);
    }
    if (r1 == RuleId::arrr && r2 == RuleId::arrlb) {
      const Formula& b = a.left();
      if (a.right().op() == Op::zero) throw MixEliminationError("negation case reached at rank two");
      Proof e1 = reduce(d2->premises[0], d1->premises[1]);
      Proof e2 = reduce(d1->premises[0], d2->premises[1]);
      std::vector<Formula> once = ms_remove_all(seq(e2).antecedent, b);
      e2 = adjust(e2, Sequent(ms_add(once, b), std::nullopt), ProofMode::multiset);
      Proof e3 = expand_macro(RuleId::negr, {e2}, Sequent(once, Formula::neg(b)), ProofMode::multiset);
      Proof e4 = reduce(e3, e1);
      return adjust(e4, target, ProofMode::multiset);
    }
    throw MixEliminationError(std::string("no reduction for ") + rule_info(r1).label + " against " +
                              rule_info(r2).label);
  }

  std::size_t limit_;
  std::size_t steps_ = 0;
};

}  // namespace detail

/// Removes every cut and mix from a valid multiset-mode proof, innermost
/// first. Macro steps are expanded beforehand. The end-sequent is kept.
inline Proof eliminate_mix(const Proof& proof, std::size_t limit = 5'000'000) {
  if (!contains_cut(proof)) return proof;
  detail::MixEliminator e(limit);
  return e.eliminate(expand_macros(proof, ProofMode::multiset));
}

/// Set-mode convenience: converts, eliminates and converts back.
inline Proof eliminate_cuts(const Proof& set_proof) {
  if (!contains_cut(set_proof)) return set_proof;
  return to_set_proof(eliminate_mix(to_multiset_proof(set_proof)));
}

}  // namespace chl
