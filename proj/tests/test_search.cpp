#include <gtest/gtest.h>

#include <random>

#include "chl/bridge.hpp"
#include "chl/countermodel.hpp"
#include "chl/search.hpp"
#include "support/goals.hpp"

using namespace chl;

namespace {

const std::vector<Formula>& corpus() {
  static const auto c = enumerate_formulas({"p", "q"}, 2);
  return c;
}

bool provable(const Sequent& s) { return prove_cutfree(s).status == SearchStatus::proved; }

void expect_valid_proof(const SearchResult& r, const Sequent& goal) {
  ASSERT_EQ(r.status, SearchStatus::proved) << render(goal);
  auto v = check_sequent_proof(r.proof);
  EXPECT_TRUE(v.ok) << render(goal) << ": " << v.reason;
  EXPECT_TRUE(v.cut_free);
  EXPECT_EQ(r.proof->conclusion, goal);
}

}  // namespace

TEST(Search, NamedGoalsAreProved) {
  for (const auto& g : chl::testing::prover_goals()) {
    const Sequent s = parse_sequent(g.sequent);
    SCOPED_TRACE(g.name);
    expect_valid_proof(prove_cutfree(s), s);
  }
}

TEST(Search, SymmetryIsNotProvable) {
  const auto r = prove_cutfree(parse_sequent(chl::testing::symmetry_goal()));
  EXPECT_EQ(r.status, SearchStatus::not_provable);
  EXPECT_FALSE(r.proof);
  EXPECT_GT(r.steps, 0u);
}

TEST(Search, SimpleVerdicts) {
  EXPECT_TRUE(provable(parse_sequent("p |- p")));
  EXPECT_TRUE(provable(parse_sequent("0 |- p")));
  EXPECT_TRUE(provable(parse_sequent("|- 1")));
  EXPECT_TRUE(provable(parse_sequent("p, ~p |-")));
  EXPECT_FALSE(provable(parse_sequent("|- p")));
  EXPECT_FALSE(provable(parse_sequent("p |- q")));
  EXPECT_FALSE(provable(parse_sequent("|- p | ~p")));
  EXPECT_FALSE(provable(parse_sequent("|- ~p -> p -> q")));
  EXPECT_FALSE(provable(parse_sequent("|- (p -> ~p) -> q")));
  EXPECT_TRUE(provable(parse_sequent("p, q |- p & q")));
}

TEST(Search, RejectsHeytingArrow) {
  const Formula h = Formula::harrow(parse_formula("p"), parse_formula("q"));
  EXPECT_THROW(prove_cutfree(Sequent({h}, parse_formula("p"))), std::invalid_argument);
  EXPECT_THROW(prove_cutfree(Sequent({}, h)), std::invalid_argument);
}

TEST(Search, BudgetIsReported) {
  const auto r = prove_cutfree(parse_sequent("p -> q |- (q -> r) -> p -> r"), 3);
  EXPECT_EQ(r.status, SearchStatus::budget_exceeded);
  EXPECT_GE(r.steps, 3u);
}

TEST(Search, ExtendedClosure) {
  const auto c = extended_closure(parse_sequent("p |- q"));
  // 0, p, ~p, q, ~q
  EXPECT_EQ(c.size(), 5u);
  EXPECT_TRUE(set_contains(c, parse_formula("~q")));
  EXPECT_EQ(prove_cutfree(parse_sequent("p |- q")).closure, 5u);
}

TEST(Search, Deterministic) {
  for (const auto& g : chl::testing::prover_goals()) {
    const Sequent s = parse_sequent(g.sequent);
    const auto a = prove_cutfree(s), b = prove_cutfree(s);
    EXPECT_EQ(render_proof(a.proof), render_proof(b.proof)) << g.name;
    EXPECT_EQ(a.steps, b.steps);
  }
}

TEST(SearchProperty, ProofsCheckOnCorpus) {
  int proved = 0;
  for (const auto& f : corpus()) {
    const Sequent s({}, f);
    const auto r = prove_cutfree(s);
    ASSERT_NE(r.status, SearchStatus::budget_exceeded) << render(f);
    if (r.status != SearchStatus::proved) continue;
    ++proved;
    auto v = check_sequent_proof(r.proof);
    ASSERT_TRUE(v.ok) << render(f) << ": " << v.reason;
    ASSERT_TRUE(v.cut_free);
    ASSERT_EQ(r.proof->conclusion, s);
  }
  EXPECT_EQ(proved, 1807);
}

TEST(SearchProperty, ProvedFormulasHoldInSmallAlgebras) {
  for (const auto& f : corpus()) {
    if (!provable(Sequent({}, f))) continue;
    const auto cm = find_countermodel({}, f, 6);
    EXPECT_FALSE(cm.has_value()) << render(f);
  }
}

TEST(SearchProperty, ProvedSequentsHoldInSmallAlgebras) {
  const auto small = enumerate_formulas({"p", "q"}, 1);
  for (const auto& a : small)
    for (const auto& b : small) {
      const Sequent s({a}, b);
      if (provable(s)) {
        EXPECT_FALSE(find_sequent_countermodel(s, 6).has_value()) << render(s);
      }
      const Sequent e({a, b}, std::nullopt);
      if (provable(e)) {
        EXPECT_FALSE(find_sequent_countermodel(e, 6).has_value()) << render(e);
      }
    }
}

TEST(SearchProperty, NormalizationPreservesProvability) {
  for (const auto& f : corpus()) {
    for (const Sequent& s : {Sequent({}, f), Sequent({f}, std::nullopt)})
      ASSERT_EQ(provable(s), provable(normalize_sequent(s))) << render(s);
  }
  const auto small = enumerate_formulas({"p", "q"}, 1);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Formula a = small[pick(rng)], b = small[pick(rng)], c = small[pick(rng)];
    for (const Sequent& s : {Sequent({a, b}, c), Sequent({a, b, c}, std::nullopt)})
      ASSERT_EQ(provable(s), provable(normalize_sequent(s))) << render(s);
  }
}

TEST(SearchProperty, AgreesWithDecisionProcedure) {
  for (const auto& f : corpus())
    ASSERT_EQ(provable(Sequent({}, f)), decide_chl({}, f) == Verdict::valid) << render(f);
}

TEST(SearchProperty, WeakeningIsAdmissible) {
  const Formula r = parse_formula("r");
  for (const auto& g : chl::testing::prover_goals()) {
    const Sequent s = parse_sequent(g.sequent);
    Sequent w(ms_add(s.antecedent, r), s.stoup);
    EXPECT_TRUE(provable(w)) << g.name;
  }
}
