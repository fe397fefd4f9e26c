#include <gtest/gtest.h>

#include <map>
#include <functional>
#include <set>

#include "chl/syntax.hpp"

using namespace chl;

namespace {

Formula v(const char* n) { return Formula::var(n); }
const Formula zero = Formula::zero();
const Formula one = Formula::one();

// Depth-bounded count: a atoms, then N(d) = a + 3 N(d-1)^2.
std::size_t expected_count(std::size_t atoms, int depth) {
  std::size_t n = atoms;
  for (int d = 1; d <= depth; ++d) n = atoms + 3 * n * n;
  return n;
}

}  // namespace

TEST(Parse, NegationDesugarsToArrowIntoZero) {
  EXPECT_EQ(parse_formula("p -> ~p"), Formula::carrow(v("p"), Formula::carrow(v("p"), zero)));
}

TEST(Parse, BoethiusShape) {
  const Formula p = v("p"), q = v("q");
  const Formula expected =
      Formula::carrow(Formula::carrow(p, q), Formula::carrow(Formula::carrow(p, Formula::carrow(q, zero)), zero));
  EXPECT_EQ(parse_formula("(p -> q) -> ~(p -> ~q)"), expected);
}

TEST(Parse, ConjunctionBindsTighterThanDisjunction) {
  EXPECT_EQ(parse_formula("p & q | r"), Formula::disj(Formula::conj(v("p"), v("q")), v("r")));
  EXPECT_EQ(parse_formula("p | q & r"), Formula::disj(v("p"), Formula::conj(v("q"), v("r"))));
}

TEST(Parse, ArrowsAssociateRight) {
  EXPECT_EQ(parse_formula("p -> q -> r"), Formula::carrow(v("p"), Formula::carrow(v("q"), v("r"))));
  EXPECT_EQ(parse_formula("p => q -> r"), Formula::harrow(v("p"), Formula::carrow(v("q"), v("r"))));
}

TEST(Parse, BiconditionalExpands) {
  const Formula p = v("p"), q = v("q");
  EXPECT_EQ(parse_formula("p <-> q"), Formula::conj(Formula::carrow(p, q), Formula::carrow(q, p)));
}

TEST(Parse, ConstantsAndWhitespace) {
  EXPECT_EQ(parse_formula("  0->1 "), Formula::carrow(zero, one));
  EXPECT_EQ(parse_formula("~~p"), Formula::neg(Formula::neg(v("p"))));
}

TEST(Parse, RejectsMalformedInput) {
  for (const char* bad : {"", "p &", "(p", "p)", "p q", "-> p", "p -", "p $ q", "~"}) {
    EXPECT_THROW(parse_formula(bad), ParseError) << bad;
  }
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    parse_formula("p & & q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
}

TEST(Render, Examples) {
  EXPECT_EQ(render(Formula::carrow(v("p"), zero)), "~p");
  EXPECT_EQ(render(Formula::conj(Formula::disj(v("p"), v("q")), v("r"))), "(p | q) & r");
  EXPECT_EQ(render(Formula::harrow(v("p"), v("q"))), "p => q");
  EXPECT_EQ(render(Formula::carrow(Formula::carrow(v("p"), v("q")), v("r"))), "(p -> q) -> r");
  EXPECT_EQ(render(Formula::conj(v("p"), Formula::conj(v("q"), v("r")))), "p & (q & r)");
  EXPECT_EQ(render(Formula::neg(Formula::conj(v("p"), v("q")))), "~(p & q)");
  EXPECT_EQ(render(Formula::carrow(zero, zero)), "~0");
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(parse_formula("p -> q"), {{"p", zero}}), parse_formula("0 -> q"));
  EXPECT_EQ(substitute(v("p"), {{"p", parse_formula("q -> r")}}), parse_formula("q -> r"));
  EXPECT_EQ(substitute(parse_formula("p & p"), {{"p", one}}), Formula::conj(one, one));
  EXPECT_EQ(substitute(parse_formula("p | s"), {{"p", v("q")}}), parse_formula("q | s"));
}

TEST(ExpandHeyting, RewritesBottomUp) {
  EXPECT_EQ(expand_heyting(parse_formula("p => q")), parse_formula("p -> (p & q)"));
  EXPECT_EQ(expand_heyting(parse_formula("p => (q => r)")), parse_formula("p -> (p & (q -> (q & r)))"));
  EXPECT_EQ(expand_heyting(parse_formula("p | q")), parse_formula("p | q"));
}

TEST(Enumerate, SmallCases) {
  const auto d0 = enumerate_formulas({"p"}, 0);
  ASSERT_EQ(d0.size(), 3u);
  EXPECT_EQ(d0[0], v("p"));
  EXPECT_EQ(d0[1], zero);
  EXPECT_EQ(d0[2], one);
  EXPECT_EQ(enumerate_formulas({"p"}, 1).size(), 30u);
  const auto none = enumerate_formulas({}, 0);
  ASSERT_EQ(none.size(), 2u);
  EXPECT_EQ(none[0], zero);
  EXPECT_EQ(none[1], one);
}

TEST(Enumerate, CountsFollowRecurrence) {
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < k; ++i) vars.push_back(std::string(1, static_cast<char>('p' + i)));
    for (int d = 0; d <= (k <= 2 ? 2 : 1); ++d)
      EXPECT_EQ(enumerate_formulas(vars, d).size(), expected_count(k + 2, d)) << k << " vars, depth " << d;
  }
  EXPECT_EQ(enumerate_formulas({"p", "q"}, 2).size(), 8116u);
}

TEST(Enumerate, DistinctAndDepthBounded) {
  const auto all = enumerate_formulas({"p", "q"}, 2);
  std::set<std::string> seen;
  for (const auto& f : all) {
    EXPECT_LE(f.depth(), 2);
    EXPECT_TRUE(seen.insert(render(f)).second) << render(f);
  }
}

TEST(Enumerate, Deterministic) {
  const auto a = enumerate_formulas({"p", "q"}, 2);
  const auto b = enumerate_formulas({"p", "q"}, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
}

// Property: parse(render(f)) = f on the whole corpus.
TEST(Property, RenderParseRoundTrip) {
  for (const auto& f : enumerate_formulas({"p", "q"}, 2)) ASSERT_EQ(parse_formula(render(f)), f) << render(f);
  for (const auto& f : enumerate_formulas({"p"}, 2, {Op::conj, Op::harrow, Op::carrow}))
    ASSERT_EQ(parse_formula(render(f)), f) << render(f);
}

// Property: output uses only the published tokens.
TEST(Property, RenderStaysInGrammar) {
  const std::string allowed = "pq01()~&|-=> ";
  for (const auto& f : enumerate_formulas({"p", "q"}, 2, {Op::conj, Op::disj, Op::carrow, Op::harrow})) {
    const std::string s = render(f);
    for (char c : s) ASSERT_NE(allowed.find(c), std::string::npos) << s;
    const auto toks = detail::tokenize(s);
    EXPECT_EQ(toks.back().kind, detail::Tok::end);
  }
}

// Property: substituting twice equals substituting the composite.
TEST(Property, SubstitutionComposes) {
  const std::map<std::string, Formula> s2{{"p", parse_formula("q -> r")}, {"q", parse_formula("~p")}};
  const std::map<std::string, Formula> s1{{"p", parse_formula("r & q")}, {"r", parse_formula("p | 0")}};
  std::map<std::string, Formula> composite;
  for (const auto& [k, f] : s2) composite.emplace(k, substitute(f, s1));
  for (const auto& [k, f] : s1) composite.emplace(k, f);
  for (const auto& f : enumerate_formulas({"p", "q", "r"}, 1)) {
    EXPECT_EQ(substitute(substitute(f, s2), s1), substitute(f, composite)) << render(f);
  }
}

TEST(Property, SizeAndDepthAgreeWithStructure) {
  for (const auto& f : enumerate_formulas({"p"}, 2)) {
    std::function<std::pair<int, std::size_t>(const Formula&)> measure = [&](const Formula& g) -> std::pair<int, std::size_t> {
      if (g.is_atomic()) return {0, 1};
      auto [dl, sl] = measure(g.left());
      auto [dr, sr] = measure(g.right());
      return {1 + std::max(dl, dr), 1 + sl + sr};
    };
    auto [d, s] = measure(f);
    EXPECT_EQ(f.depth(), d);
    EXPECT_EQ(f.size(), s);
  }
}

TEST(Variables, SortedAndUnique) {
  EXPECT_EQ(variables(parse_formula("q -> p & q | r")), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_TRUE(variables(parse_formula("0 -> 1")).empty());
}
