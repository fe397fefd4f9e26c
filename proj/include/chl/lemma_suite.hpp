#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chl/algebra.hpp"

namespace chl {

/// One arithmetical law, quantified over `arity` elements.
struct SuiteItem {
  std::string id;
  std::string statement;
  int arity;
  std::function<bool(const FiniteAlgebra&, Elem, Elem, Elem)> holds;
};

struct ItemResult {
  std::string id;
  std::string statement;
  bool passed = true;
  std::vector<Elem> counterexample;
};

struct SuiteReport {
  std::vector<ItemResult> items;

  bool all_passed() const {
    for (const auto& r : items)
      if (!r.passed) return false;
    return true;
  }
  std::optional<ItemResult> first_failure() const {
    for (const auto& r : items)
      if (!r.passed) return r;
    return std::nullopt;
  }
};

/// Laws of semi-Heyting algebras (10), of connexive Heyting algebras (22),
/// the order characterisation, strong Boethius and weak C1, in that order.
inline const std::vector<SuiteItem>& lemma_suite_items() {
  using A = const FiniteAlgebra&;
  static const std::vector<SuiteItem> items = {
      {"semi-heyting.1", "1 -> a = a", 1, [](A s, Elem a, Elem, Elem) { return s.arrow(s.one(), a) == a; }},
      {"semi-heyting.2", "a -> b = 1 implies a <= b", 2,
       [](A s, Elem a, Elem b, Elem) { return s.arrow(a, b) != s.one() || s.leq(a, b); }},
      {"semi-heyting.3", "a <= b -> (a & b)", 2,
       [](A s, Elem a, Elem b, Elem) { return s.leq(a, s.arrow(b, s.meet(a, b))); }},
      {"semi-heyting.4", "a <= ~b iff a & b = 0", 2,
       [](A s, Elem a, Elem b, Elem) { return s.leq(a, s.neg(b)) == (s.meet(a, b) == s.zero()); }},
      {"semi-heyting.5", "a <= a -> 1", 1, [](A s, Elem a, Elem, Elem) { return s.leq(a, s.arrow(a, s.one())); }},
      {"semi-heyting.6", "a <= (a -> b) -> b", 2,
       [](A s, Elem a, Elem b, Elem) { return s.leq(a, s.arrow(s.arrow(a, b), b)); }},
      {"semi-heyting.7", "a <= ~~a", 1, [](A s, Elem a, Elem, Elem) { return s.leq(a, s.neg(s.neg(a))); }},
      {"semi-heyting.8", "a & ~a = 0", 1, [](A s, Elem a, Elem, Elem) { return s.meet(a, s.neg(a)) == s.zero(); }},
      {"semi-heyting.9", "a -> 0 <= 0 -> a", 1,
       [](A s, Elem a, Elem, Elem) { return s.leq(s.arrow(a, s.zero()), s.arrow(s.zero(), a)); }},
      {"semi-heyting.10", "~a = ~~~a", 1,
       [](A s, Elem a, Elem, Elem) { return s.neg(a) == s.neg(s.neg(s.neg(a))); }},

      {"cha.1", "(a -> b) & (b -> c) <= a -> c", 3,
       [](A s, Elem a, Elem b, Elem c) { return s.leq(s.meet(s.arrow(a, b), s.arrow(b, c)), s.arrow(a, c)); }},
      {"cha.2", "(a -> b) -> ((c -> a) -> (c -> b)) = 1", 3,
       [](A s, Elem a, Elem b, Elem c) {
         return s.arrow(s.arrow(a, b), s.arrow(s.arrow(c, a), s.arrow(c, b))) == s.one();
       }},
      {"cha.3", "a <= b implies ~b <= ~a", 2,
       [](A s, Elem a, Elem b, Elem) { return !s.leq(a, b) || s.leq(s.neg(b), s.neg(a)); }},
      {"cha.4", "a <= a -> 1 <= b -> (a -> b)", 2,
       [](A s, Elem a, Elem b, Elem) {
         return s.leq(a, s.arrow(a, s.one())) && s.leq(s.arrow(a, s.one()), s.arrow(b, s.arrow(a, b)));
       }},
      {"cha.5", "~a = 1 implies a = 0", 1,
       [](A s, Elem a, Elem, Elem) { return s.neg(a) != s.one() || a == s.zero(); }},
      {"cha.6", "~(a -> ~a) = 1", 1, [](A s, Elem a, Elem, Elem) { return s.neg(s.arrow(a, s.neg(a))) == s.one(); }},
      {"cha.7", "a -> ~a = 0 = ~a -> a", 1,
       [](A s, Elem a, Elem, Elem) {
         return s.arrow(a, s.neg(a)) == s.zero() && s.arrow(s.neg(a), a) == s.zero();
       }},
      {"cha.8", "(a -> b) & (a -> ~b) = 0", 2,
       [](A s, Elem a, Elem b, Elem) { return s.meet(s.arrow(a, b), s.arrow(a, s.neg(b))) == s.zero(); }},
      {"cha.9", "(a -> b) -> (a -> ~b) = 0", 2,
       [](A s, Elem a, Elem b, Elem) { return s.arrow(s.arrow(a, b), s.arrow(a, s.neg(b))) == s.zero(); }},
      {"cha.10", "(a -> 1) -> ~a = 0", 1,
       [](A s, Elem a, Elem, Elem) { return s.arrow(s.arrow(a, s.one()), s.neg(a)) == s.zero(); }},
      {"cha.11", "0 -> a = (a -> 0) -> 1", 1,
       [](A s, Elem a, Elem, Elem) { return s.arrow(s.zero(), a) == s.arrow(s.arrow(a, s.zero()), s.one()); }},
      {"cha.12", "a -> ~~a = 1", 1, [](A s, Elem a, Elem, Elem) { return s.arrow(a, s.neg(s.neg(a))) == s.one(); }},
      {"cha.13", "0 -> a = a -> 0", 1,
       [](A s, Elem a, Elem, Elem) { return s.arrow(s.zero(), a) == s.arrow(a, s.zero()); }},
      {"cha.14", "~b = ~((b -> a) -> a) = ~a -> (b -> a)", 2,
       [](A s, Elem a, Elem b, Elem) {
         const Elem nb = s.neg(b);
         return nb == s.neg(s.arrow(s.arrow(b, a), a)) && nb == s.arrow(s.neg(a), s.arrow(b, a));
       }},
      {"cha.15", "(a -> 1) & ~a = 0", 1,
       [](A s, Elem a, Elem, Elem) { return s.meet(s.arrow(a, s.one()), s.neg(a)) == s.zero(); }},
      {"cha.16", "~a = (a -> 1) -> 0", 1,
       [](A s, Elem a, Elem, Elem) { return s.neg(a) == s.arrow(s.arrow(a, s.one()), s.zero()); }},
      {"cha.17", "(a -> b) -> 1 = ~(a -> ~b)", 2,
       [](A s, Elem a, Elem b, Elem) { return s.arrow(s.arrow(a, b), s.one()) == s.neg(s.arrow(a, s.neg(b))); }},
      {"cha.18", "~~a = a -> 1", 1, [](A s, Elem a, Elem, Elem) { return s.neg(s.neg(a)) == s.arrow(a, s.one()); }},
      {"cha.19", "~(a -> b) = ~(b -> a)", 2,
       [](A s, Elem a, Elem b, Elem) { return s.neg(s.arrow(a, b)) == s.neg(s.arrow(b, a)); }},
      {"cha.20", "~(a -> b) = a -> ~b", 2,
       [](A s, Elem a, Elem b, Elem) { return s.neg(s.arrow(a, b)) == s.arrow(a, s.neg(b)); }},
      {"cha.21", "a -> b = 0 iff a -> ~b = 1", 2,
       [](A s, Elem a, Elem b, Elem) { return (s.arrow(a, b) == s.zero()) == (s.arrow(a, s.neg(b)) == s.one()); }},
      {"cha.22", "a -> b = 1 implies a -> ~b = 0", 2,
       [](A s, Elem a, Elem b, Elem) { return s.arrow(a, b) != s.one() || s.arrow(a, s.neg(b)) == s.zero(); }},

      {"order-characterization", "a -> b = 1 iff (a <= b and ~a = ~b)", 2,
       [](A s, Elem a, Elem b, Elem) {
         return (s.arrow(a, b) == s.one()) == (s.leq(a, b) && s.neg(a) == s.neg(b));
       }},
      {"strong-boethius", "(a -> b) -> ((b -> c) -> ~(a -> ~c)) = 1", 3,
       [](A s, Elem a, Elem b, Elem c) {
         return s.arrow(s.arrow(a, b), s.arrow(s.arrow(b, c), s.neg(s.arrow(a, s.neg(c))))) == s.one();
       }},
      {"weak-c1", "a -> b <= (b -> c) -> (a -> c)", 3,
       [](A s, Elem a, Elem b, Elem c) { return s.leq(s.arrow(a, b), s.arrow(s.arrow(b, c), s.arrow(a, c))); }},
  };
  return items;
}

/// Runs every suite item exhaustively; reports rather than throws on
/// algebras that are not connexive Heyting algebras.
inline SuiteReport run_lemma_suite(const FiniteAlgebra& A) {
  SuiteReport report;
  for (const auto& item : lemma_suite_items()) {
    ItemResult r{item.id, item.statement, true, {}};
    for_each_assignment(A.size(), item.arity, [&](const Elem* v) {
      Elem a = v[0];
      Elem b = item.arity > 1 ? v[1] : 0;
      Elem c = item.arity > 2 ? v[2] : 0;
      if (item.holds(A, a, b, c)) return true;
      r.passed = false;
      r.counterexample.assign(v, v + item.arity);
      return false;
    });
    report.items.push_back(std::move(r));
  }
  return report;
}

}  // namespace chl
