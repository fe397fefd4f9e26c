#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chl/proof.hpp"

namespace chl {

enum class SearchStatus { proved, not_provable, budget_exceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::not_provable;
  Proof proof;             // set mode, cut-free; only when proved
  std::size_t steps = 0;   // sequents visited
  std::size_t closure = 0; // size of the extended subformula closure
};

/// Subformulas of the sequent, 0, and ~b for every subformula b.
inline FormulaSet extended_closure(const Sequent& s) {
  std::vector<Formula> out{Formula::zero()};
  auto add = [&](const Formula& f) {
    for (const auto& g : subformulas(f)) {
      out.push_back(g);
      out.push_back(Formula::neg(g));
    }
  };
  for (const auto& f : s.antecedent) add(f);
  if (s.stoup) add(*s.stoup);
  return make_set(std::move(out));
}

namespace detail {

struct SearchKey {
  FormulaSet ant;
  std::optional<Formula> stoup;
  bool operator==(const SearchKey&) const = default;
};

struct SearchKeyHash {
  std::size_t operator()(const SearchKey& k) const noexcept {
    std::size_t h = k.stoup ? k.stoup->hash() : 0x51ed27u;
    for (const auto& f : k.ant) h = h * 1000003u ^ f.hash();
    return h;
  }
};

struct BudgetExceeded {};

class Prover {
 public:
  explicit Prover(std::size_t budget) : budget_(budget) {}

  Proof prove(const FormulaSet& gamma, const std::optional<Formula>& pi) { return search({gamma, pi}); }
  std::size_t steps() const { return steps_; }

 private:
  static Proof node(RuleId r, const SearchKey& k, std::vector<Proof> prem = {}) {
    return make_proof(r, Sequent(k.ant, k.stoup), std::move(prem));
  }

  /// Weakens the leaf `start` up to the antecedent `gamma`.
  static Proof weaken_up(Proof p, const FormulaSet& gamma) {
    for (const auto& f : gamma) {
      if (count_of(p->conclusion.antecedent, f)) continue;
      p = make_proof(RuleId::wl, Sequent(ms_add(p->conclusion.antecedent, f), p->conclusion.stoup), {p});
    }
    return p;
  }

  static Proof axiom(const SearchKey& k) {
    if (k.stoup && set_contains(k.ant, *k.stoup))
      return weaken_up(make_proof(RuleId::id, Sequent({*k.stoup}, k.stoup)), k.ant);
    if (set_contains(k.ant, Formula::zero())) {
      Proof p = weaken_up(make_proof(RuleId::ax0, Sequent({Formula::zero()}, std::nullopt)), k.ant);
      if (k.stoup) p = make_proof(RuleId::wr, Sequent(k.ant, k.stoup), {p});
      return p;
    }
    if (k.stoup && k.stoup->op() == Op::one)
      return weaken_up(make_proof(RuleId::ax1, Sequent({}, Formula::one())), k.ant);
    return nullptr;
  }

  Proof search(const SearchKey& k) {
    if (++steps_ > budget_) throw BudgetExceeded{};
    if (Proof p = axiom(k)) return p;
    if (auto it = proved_.find(k); it != proved_.end()) return it->second;
    if (failed_.count(k)) return nullptr;
    if (on_path_.count(k)) {
      ++loops_;
      return nullptr;
    }
    on_path_.insert(k);
    const std::size_t loops_before = loops_;
    Proof p = expand(k);
    on_path_.erase(k);
    if (p) {
      proved_.emplace(k, p);
    } else if (loops_ == loops_before) {
      failed_.insert(k);
    }
    return p;
  }

  static SearchKey with(const SearchKey& k, std::initializer_list<Formula> add, std::optional<Formula> stoup) {
    FormulaSet a = k.ant;
    for (const auto& f : add) a = set_insert(std::move(a), f);
    return {std::move(a), std::move(stoup)};
  }

  Proof expand(const SearchKey& k) {
    // Invertible rules.
    for (const auto& f : k.ant) {
      if (f.op() == Op::conj && !(set_contains(k.ant, f.left()) && set_contains(k.ant, f.right()))) {
        Proof q = search(with(k, {f.left(), f.right()}, k.stoup));
        return q ? node(RuleId::andl, k, {q}) : nullptr;
      }
    }
    for (const auto& f : k.ant) {
      if (f.op() == Op::disj && !set_contains(k.ant, f.left()) && !set_contains(k.ant, f.right())) {
        Proof a = search(with(k, {f.left()}, k.stoup));
        if (!a) return nullptr;
        Proof b = search(with(k, {f.right()}, k.stoup));
        return b ? node(RuleId::orl, k, {a, b}) : nullptr;
      }
    }
    if (k.stoup && k.stoup->op() == Op::conj) {
      Proof a = search({k.ant, k.stoup->left()});
      if (!a) return nullptr;
      Proof b = search({k.ant, k.stoup->right()});
      return b ? node(RuleId::andr, k, {a, b}) : nullptr;
    }
    if (k.stoup && k.stoup->op() == Op::carrow) {
      const Formula a = k.stoup->left(), b = k.stoup->right();
      Proof p1 = search(with(k, {a}, b));
      if (!p1) return nullptr;
      Proof p2 = search(with(k, {Formula::neg(a), b}, std::nullopt));
      return p2 ? node(RuleId::arrr, k, {p1, p2}) : nullptr;
    }
    // Choices.
    if (k.stoup && k.stoup->op() == Op::disj) {
      if (Proof a = search({k.ant, k.stoup->left()})) return node(RuleId::orr1, k, {a});
      if (Proof b = search({k.ant, k.stoup->right()})) return node(RuleId::orr2, k, {b});
    }
    for (const auto& f : k.ant) {
      if (f.op() != Op::carrow) continue;
      const Formula a = f.left(), b = f.right();
      if (!set_contains(k.ant, b)) {
        if (Proof p1 = search({k.ant, a})) {
          if (Proof p2 = search(with(k, {b}, k.stoup))) return node(RuleId::arrla, k, {p1, p2});
        }
      }
      if (!k.stoup) {
        if (Proof p1 = search(with(k, {Formula::neg(a)}, b))) {
          if (Proof p2 = search(with(k, {a, b}, std::nullopt))) return node(RuleId::arrlb, k, {p1, p2});
        }
      }
    }
    if (k.stoup) {
      if (Proof p = search({k.ant, std::nullopt})) return node(RuleId::wr, k, {p});
    }
    return nullptr;
  }

  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t loops_ = 0;
  std::unordered_map<SearchKey, Proof, SearchKeyHash> proved_;
  std::unordered_set<SearchKey, SearchKeyHash> failed_;
  std::unordered_set<SearchKey, SearchKeyHash> on_path_;
};

}  // namespace detail

/// Backward cut-free search in the set formulation. Both premises of a
/// branching rule receive the whole context and principal formulas are
/// kept; a sequent repeating on the current branch fails that branch.
inline SearchResult prove_cutfree(const Sequent& goal, std::size_t budget = 2'000'000) {
  for (const auto& f : goal.antecedent)
    if (contains_op(f, Op::harrow)) throw std::invalid_argument("expand => before proof search");
  if (goal.stoup && contains_op(*goal.stoup, Op::harrow)) throw std::invalid_argument("expand => before proof search");
  SearchResult r;
  r.closure = extended_closure(goal).size();
  detail::Prover prover(budget);
  const FormulaSet gamma = goal.set_view();
  try {
    Proof p = prover.prove(gamma, goal.stoup);
    if (p) {
      r.status = SearchStatus::proved;
      // Restate the root with the caller's multiset antecedent.
      if (p->conclusion.antecedent != goal.antecedent) p = make_proof(p->rule, goal, p->premises);
      r.proof = p;
    } else {
      r.status = SearchStatus::not_provable;
    }
  } catch (const detail::BudgetExceeded&) {
    r.status = SearchStatus::budget_exceeded;
  }
  r.steps = prover.steps();
  return r;
}

}  // namespace chl
