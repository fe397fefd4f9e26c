#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chl/sequent.hpp"

namespace chl {

/// How a rule instance was matched: the left principal formulas of the
/// conclusion, the active antecedent formulas of each premise, and whether
/// premises share one context.
struct StepMatch {
  std::vector<Formula> principals;
  std::vector<std::vector<Formula>> actives;
  bool shared = false;
};

struct StepVerdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

struct Premise {
  const Sequent* seq;
  std::vector<Formula> actives;
};

/// Checks that the conclusion antecedent is the principals plus the premise
/// contexts (premise antecedent minus its actives).
inline bool match_contexts(ProofMode mode, const Sequent& concl, const std::vector<Formula>& principals,
                           const std::vector<Premise>& prem, bool shared, std::string& why) {
  if (mode == ProofMode::multiset) {
    std::vector<std::vector<Formula>> ctx;
    for (std::size_t i = 0; i < prem.size(); ++i) {
      auto c = ms_minus(prem[i].seq->antecedent, prem[i].actives);
      if (!c) {
        why = "premise " + std::to_string(i + 1) + " lacks an active formula";
        return false;
      }
      ctx.push_back(std::move(*c));
    }
    std::vector<Formula> expected(principals.begin(), principals.end());
    std::sort(expected.begin(), expected.end());
    if (shared) {
      for (std::size_t i = 1; i < ctx.size(); ++i)
        if (ctx[i] != ctx[0]) {
          why = "premise contexts differ";
          return false;
        }
      expected = ms_sum(expected, ctx[0]);
    } else {
      for (const auto& c : ctx) expected = ms_sum(expected, c);
    }
    if (expected != concl.antecedent) {
      why = "conclusion antecedent should be " + render(Sequent(expected, std::nullopt));
      return false;
    }
    return true;
  }
  const FormulaSet C = concl.set_view();
  for (const auto& p : principals)
    if (!set_contains(C, p)) {
      why = "principal formula " + render(p) + " missing from conclusion";
      return false;
    }
  std::vector<FormulaSet> P, A;
  for (std::size_t i = 0; i < prem.size(); ++i) {
    P.push_back(prem[i].seq->set_view());
    A.push_back(make_set(prem[i].actives));
    if (!set_includes(P[i], A[i])) {
      why = "premise " + std::to_string(i + 1) + " lacks an active formula";
      return false;
    }
    FormulaSet rest = set_difference(P[i], A[i]);
    if (!set_includes(C, rest)) {
      why = "premise " + std::to_string(i + 1) + " has context formula " +
            render(set_difference(rest, C).front()) + " absent from the conclusion";
      return false;
    }
  }
  const FormulaSet pr = make_set(principals);
  if (shared) {
    FormulaSet gamma = C;
    for (const auto& p : P) gamma = set_intersection(gamma, p);
    for (std::size_t i = 0; i < P.size(); ++i)
      if (P[i] != set_union(A[i], gamma)) {
        why = "premise contexts differ";
        return false;
      }
    if (C != set_union(pr, gamma)) {
      why = "conclusion has formulas outside the shared context";
      return false;
    }
    return true;
  }
  FormulaSet cover = pr;
  for (const auto& p : P) cover = set_union(cover, set_intersection(p, C));
  if (!set_includes(cover, C)) {
    why = "conclusion formula " + render(set_difference(C, cover).front()) + " is not accounted for";
    return false;
  }
  return true;
}

inline bool is_neg_of(const Formula& f, const Formula& a) { return f.is_neg() && f.left() == a; }

inline std::string stoup_text(const std::optional<Formula>& s) { return s ? render(*s) : std::string("empty"); }

}  // namespace detail

/// Matches one inference; nullopt with a reason in `why` on failure.
inline std::optional<StepMatch> match_step(RuleId rule, const std::vector<Sequent>& premises, const Sequent& concl,
                                           ProofMode mode, std::string* why_out = nullptr) {
  using detail::Premise;
  std::string why;
  auto fail = [&](std::string w) -> std::optional<StepMatch> {
    if (why_out) *why_out = std::move(w);
    return std::nullopt;
  };
  const RuleInfo& info = rule_info(rule);
  if (rule == RuleId::assumption) return fail("assumption leaves are checked against the assumption list");
  if (static_cast<int>(premises.size()) != info.arity)
    return fail(std::string(info.label) + " takes " + std::to_string(info.arity) + " premise(s), got " +
                std::to_string(premises.size()));
  if ((rule == RuleId::mix || rule == RuleId::contraction) && mode == ProofMode::set)
    return fail(std::string(info.label) + " is only available in multiset mode");

  const bool ms = mode == ProofMode::multiset;
  auto ant_equal = [&](const Sequent& a, const Sequent& b) {
    return ms ? a.antecedent == b.antecedent : a.set_view() == b.set_view();
  };
  auto exact = [&](std::vector<Premise> prem, std::vector<Formula> principals, bool shared) -> std::optional<StepMatch> {
    if (!detail::match_contexts(mode, concl, principals, prem, shared, why)) return fail(why);
    StepMatch m{std::move(principals), {}, shared};
    for (auto& p : prem) m.actives.push_back(std::move(p.actives));
    return m;
  };
  // Tries each distinct antecedent formula of the conclusion as principal.
  auto left_principal = [&](auto&& shape, auto&& attempt) -> std::optional<StepMatch> {
    std::string last = "no antecedent formula of the required shape";
    for (const auto& f : concl.set_view()) {
      if (!shape(f)) continue;
      why.clear();
      if (auto m = attempt(f)) return m;
      last = why;
    }
    return fail(last);
  };
  auto need_stoup = [&](const Sequent& s, const char* what) -> bool {
    if (!s.stoup) {
      why = std::string(what) + " must have a nonempty stoup";
      return false;
    }
    return true;
  };

  switch (rule) {
    case RuleId::id: {
      if (!concl.stoup) return fail("(id) needs a stoup");
      Sequent expect({*concl.stoup}, concl.stoup);
      if (!ant_equal(concl, expect)) return fail("(id) must have the form a |- a");
      return StepMatch{};
    }
    case RuleId::ax0:
      if (concl.stoup) return fail("(0) has an empty stoup");
      if (!ant_equal(concl, Sequent({Formula::zero()}, std::nullopt))) return fail("(0) must be 0 |-");
      return StepMatch{};
    case RuleId::ax1:
      if (!concl.antecedent.empty() || !concl.stoup || concl.stoup->op() != Op::one) return fail("(1) must be |- 1");
      return StepMatch{};
    case RuleId::wl: {
      const Sequent& p = premises[0];
      if (p.stoup != concl.stoup) return fail("(w-l) keeps the stoup");
      if (ms) {
        auto extra = ms_minus(concl.antecedent, p.antecedent);
        if (!extra || extra->size() != 1) return fail("(w-l) adds exactly one antecedent formula");
        return StepMatch{{extra->front()}, {{}}, false};
      }
      const FormulaSet P = p.set_view(), C = concl.set_view();
      if (!set_includes(C, P)) return fail("(w-l) cannot drop antecedent formulas");
      FormulaSet extra = set_difference(C, P);
      if (extra.size() > 1) return fail("(w-l) adds one antecedent formula");
      return StepMatch{extra, {{}}, false};
    }
    case RuleId::wr: {
      const Sequent& p = premises[0];
      if (p.stoup) return fail("(w-r) needs a premise with empty stoup");
      if (!concl.stoup) return fail("(w-r) introduces a stoup formula");
      if (!ant_equal(p, concl)) return fail("(w-r) keeps the antecedent");
      return StepMatch{{}, {{}}, false};
    }
    case RuleId::contraction: {
      const Sequent& p = premises[0];
      if (p.stoup != concl.stoup) return fail("(c-l) keeps the stoup");
      auto extra = ms_minus(p.antecedent, concl.antecedent);
      if (!extra || extra->size() != 1 || count_of(concl.antecedent, extra->front()) == 0)
        return fail("(c-l) removes one duplicated antecedent formula");
      return StepMatch{{extra->front()}, {{extra->front(), extra->front()}}, false};
    }
    case RuleId::cut: {
      if (!need_stoup(premises[0], "left premise of (cut)")) return fail(why);
      if (premises[1].stoup != concl.stoup) return fail("(cut) keeps the stoup of the right premise");
      const Formula a = *premises[0].stoup;
      return exact({{&premises[0], {}}, {&premises[1], {a}}}, {}, false);
    }
    case RuleId::mix: {
      if (!need_stoup(premises[0], "left premise of (mix)")) return fail(why);
      if (premises[1].stoup != concl.stoup) return fail("(mix) keeps the stoup of the right premise");
      const Formula a = *premises[0].stoup;
      if (count_of(premises[1].antecedent, a) == 0) return fail("mix formula " + render(a) + " absent from right premise");
      auto expected = ms_sum(premises[0].antecedent, ms_remove_all(premises[1].antecedent, a));
      if (expected != concl.antecedent)
        return fail("conclusion antecedent should be " + render(Sequent(expected, std::nullopt)));
      return StepMatch{{}, {{}, std::vector<Formula>(count_of(premises[1].antecedent, a), a)}, false};
    }
    case RuleId::andl: {
      const Sequent& p = premises[0];
      if (p.stoup != concl.stoup) return fail("(∧-l) keeps the stoup");
      return left_principal([](const Formula& f) { return f.op() == Op::conj; },
                            [&](const Formula& f) -> std::optional<StepMatch> {
                              for (auto act : {std::vector<Formula>{f.left(), f.right()}, std::vector<Formula>{f.left()},
                                               std::vector<Formula>{f.right()}})
                                if (auto m = exact({{&p, act}}, {f}, false)) return m;
                              return std::nullopt;
                            });
    }
    case RuleId::andr: {
      if (!concl.stoup || concl.stoup->op() != Op::conj) return fail("(∧-r) concludes a conjunction");
      if (premises[0].stoup != concl.stoup->left() || premises[1].stoup != concl.stoup->right())
        return fail("(∧-r) premises must prove the two conjuncts");
      return exact({{&premises[0], {}}, {&premises[1], {}}}, {}, true);
    }
    case RuleId::orl: {
      if (premises[0].stoup != concl.stoup || premises[1].stoup != concl.stoup) return fail("(∨-l) keeps the stoup");
      return left_principal([](const Formula& f) { return f.op() == Op::disj; },
                            [&](const Formula& f) {
                              return exact({{&premises[0], {f.left()}}, {&premises[1], {f.right()}}}, {f}, true);
                            });
    }
    case RuleId::orr1:
    case RuleId::orr2: {
      if (!concl.stoup || concl.stoup->op() != Op::disj) return fail("(∨-r) concludes a disjunction");
      const Formula& want = rule == RuleId::orr1 ? concl.stoup->left() : concl.stoup->right();
      if (premises[0].stoup != want) return fail("(∨-r) premise must prove " + render(want));
      return exact({{&premises[0], {}}}, {}, false);
    }
    case RuleId::arrla: {
      if (!need_stoup(premises[0], "left premise of (→-l(a))")) return fail(why);
      if (premises[1].stoup != concl.stoup) return fail("(→-l(a)) keeps the stoup of the right premise");
      const Formula a = *premises[0].stoup;
      return left_principal([&](const Formula& f) { return f.op() == Op::carrow && f.left() == a; },
                            [&](const Formula& f) {
                              return exact({{&premises[0], {}}, {&premises[1], {f.right()}}}, {f}, false);
                            });
    }
    case RuleId::arrlb: {
      if (concl.stoup || premises[1].stoup) return fail("(→-l(b)) has empty stoups in the right premise and conclusion");
      if (!need_stoup(premises[0], "left premise of (→-l(b))")) return fail(why);
      const Formula b = *premises[0].stoup;
      return left_principal([&](const Formula& f) { return f.op() == Op::carrow && f.right() == b; },
                            [&](const Formula& f) {
                              return exact({{&premises[0], {Formula::neg(f.left())}}, {&premises[1], {f.left(), b}}},
                                           {f}, false);
                            });
    }
    case RuleId::arrr: {
      if (!concl.stoup || concl.stoup->op() != Op::carrow) return fail("(→-r) concludes an implication");
      const Formula a = concl.stoup->left(), b = concl.stoup->right();
      if (premises[0].stoup != b) return fail("left premise of (→-r) must prove " + render(b));
      if (premises[1].stoup) return fail("right premise of (→-r) has an empty stoup");
      return exact({{&premises[0], {a}}, {&premises[1], {Formula::neg(a), b}}}, {}, false);
    }
    case RuleId::negl: {
      if (concl.stoup) return fail("(¬-l) has an empty stoup in the conclusion");
      if (!need_stoup(premises[0], "premise of (¬-l)")) return fail(why);
      const Formula na = Formula::neg(*premises[0].stoup);
      return exact({{&premises[0], {}}}, {na}, false);
    }
    case RuleId::negr: {
      if (!concl.stoup || !concl.stoup->is_neg()) return fail("(¬-r) concludes a negation");
      if (premises[0].stoup) return fail("premise of (¬-r) has an empty stoup");
      return exact({{&premises[0], {concl.stoup->left()}}}, {}, false);
    }
    case RuleId::arrlc: {
      if (concl.stoup || premises[0].stoup) return fail("(→-l(c)) has empty stoups in the left premise and conclusion");
      if (!need_stoup(premises[1], "right premise of (→-l(c))")) return fail(why);
      const Formula b = *premises[1].stoup;
      return left_principal([&](const Formula& f) { return f.op() == Op::carrow && f.right() == b; },
                            [&](const Formula& f) {
                              return exact({{&premises[0], {f.left()}}, {&premises[1], {}}}, {f}, false);
                            });
    }
    case RuleId::arrld: {
      if (concl.stoup || premises[1].stoup) return fail("(→-l(d)) has empty stoups in the right premise and conclusion");
      if (!need_stoup(premises[0], "left premise of (→-l(d))")) return fail(why);
      const Formula b = *premises[0].stoup;
      return left_principal([&](const Formula& f) { return f.op() == Op::carrow && detail::is_neg_of(f.right(), b); },
                            [&](const Formula& f) {
                              return exact({{&premises[0], {f.left()}}, {&premises[1], {Formula::neg(f.left()), b}}},
                                           {f}, false);
                            });
    }
    case RuleId::assumption:
      break;
  }
  return fail("unsupported rule");
}

inline StepVerdict check_step(RuleId rule, const std::vector<Sequent>& premises, const Sequent& concl,
                              ProofMode mode = ProofMode::set) {
  std::string why;
  if (match_step(rule, premises, concl, mode, &why)) return {};
  return {false, std::string(rule_info(rule).label) + ": " + why};
}

}  // namespace chl
