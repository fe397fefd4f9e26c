#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "chl/bridge.hpp"
#include "chl/countermodel.hpp"
#include "chl/hilbert.hpp"

using namespace chl;

namespace {

const std::filesystem::path dir = std::filesystem::path(CHL_FIXTURES) / "proofs" / "hilbert";

std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

HilbertProof from_text(const char* text) { return hilbert_from_json(nlohmann::json::parse(text)); }

}  // namespace

TEST(AxiomInstance, Examples) {
  const Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");
  EXPECT_EQ(axiom_instance("CHL6", {{"phi", p}, {"psi", q}}), parse_formula("(p -> q) -> ~(p -> ~q)"));
  EXPECT_EQ(axiom_instance("CHL2", {{"phi", p}}), parse_formula("~(0 & p)"));
  EXPECT_EQ(axiom_instance("CHL5", {{"phi", p}, {"psi", q}, {"chi", r}}),
            parse_formula("(p -> q) -> ((q -> r) -> (p -> r))"));
}

TEST(AxiomInstance, RejectsBadMaps) {
  EXPECT_THROW(axiom_instance("CHL6", {{"phi", Formula::var("p")}}), std::invalid_argument);
  EXPECT_THROW(axiom_instance("CHL2", {{"phi", Formula::var("p")}, {"psi", Formula::var("q")}}), std::invalid_argument);
  EXPECT_THROW(axiom_instance("CHL99", {}), std::invalid_argument);
}

TEST(AxiomSchemas, EveryInstanceIsValid) {
  const std::map<std::string, Formula> sigma{
      {"phi", parse_formula("p -> q")}, {"psi", parse_formula("~p | q")}, {"chi", parse_formula("q & r")}};
  for (const auto& s : axiom_schemas()) {
    std::map<std::string, Formula> m;
    for (const auto& mv : s.metavariables) m.emplace(mv, sigma.at(mv));
    const Formula f = axiom_instance(s.id, m);
    EXPECT_EQ(decide_chl({}, f), Verdict::valid) << s.id;
    EXPECT_FALSE(find_countermodel({}, f, 5).has_value()) << s.id;
  }
}

TEST(Check, ModusPonensFromAssumptions) {
  auto v = check_hilbert_proof(from_text(R"js({"assumptions": ["p => q", "p"], "lines": [
      {"formula": "p => q", "by": "assumption"},
      {"formula": "p", "by": "assumption"},
      {"formula": "q", "by": "mp", "from": [1, 0]}]})js"));
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_EQ(*v.conclusion(), Formula::var("q"));
}

TEST(Check, SingleAxiomLine) {
  auto v = check_hilbert_proof(from_text(R"js({"lines": [
      {"formula": "(p -> q) -> ~(p -> ~q)", "by": "axiom:CHL6", "subst": {"phi": "p", "psi": "q"}}]})js"));
  EXPECT_TRUE(v.ok) << v.reason;
}

TEST(Check, MpShapeMismatchIsReported) {
  auto v = check_hilbert_proof(from_text(R"js({"assumptions": ["p", "q -> r"], "lines": [
      {"formula": "p", "by": "assumption"},
      {"formula": "q -> r", "by": "assumption"},
      {"formula": "r", "by": "mp", "from": [0, 1]}]})js"));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.line, 2);
}

TEST(Check, ForwardReferenceIsRejected) {
  auto v = check_hilbert_proof(from_text(R"js({"assumptions": ["p"], "lines": [
      {"formula": "p", "by": "mp", "from": [1, 2]},
      {"formula": "p", "by": "assumption"}]})js"));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.line, 0);
}

TEST(Check, WrongAxiomInstanceIsRejected) {
  auto v = check_hilbert_proof(from_text(R"js({"lines": [
      {"formula": "(p -> q) -> ~(q -> ~p)", "by": "axiom:CHL6", "subst": {"phi": "p", "psi": "q"}}]})js"));
  EXPECT_FALSE(v.ok);
}

TEST(Check, EmptyProofIsRejected) { EXPECT_FALSE(check_hilbert_proof(from_text(R"js({"lines": []})js")).ok); }

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(from_text(R"js({"lines": [{"formula": "p", "by": "magic"}]})js"), std::invalid_argument);
  EXPECT_THROW(from_text(R"js({"lines": [{"formula": "p", "by": "mp", "from": 3}]})js"), std::invalid_argument);
  EXPECT_THROW(from_text(R"js({"nolines": []})js"), std::invalid_argument);
}

TEST(Json, RoundTripPreservesVerdicts) {
  for (const auto& f : fixture_files()) {
    const HilbertProof p = hilbert_from_json(read_json(f));
    const HilbertProof q = hilbert_from_json(nlohmann::json::parse(hilbert_to_json(p).dump()));
    EXPECT_EQ(check_hilbert_proof(p).ok, check_hilbert_proof(q).ok) << f;
    EXPECT_EQ(*check_hilbert_proof(p).conclusion(), *check_hilbert_proof(q).conclusion()) << f;
  }
}

TEST(Fixtures, AllVerify) {
  const auto files = fixture_files();
  EXPECT_EQ(files.size(), 11u);
  for (const auto& f : files) {
    auto v = check_hilbert_proof(hilbert_from_json(read_json(f)));
    EXPECT_TRUE(v.ok) << f << ": line " << v.line << ": " << v.reason;
  }
}

TEST(Fixtures, ConclusionsAreValidConsequences) {
  for (const auto& f : fixture_files()) {
    const HilbertProof p = hilbert_from_json(read_json(f));
    const auto v = check_hilbert_proof(p);
    ASSERT_TRUE(v.ok) << f;
    EXPECT_EQ(decide_chl(p.assumptions, *v.conclusion()), Verdict::valid) << f;
  }
}

// Property: checked proofs are sound in every small CHA.
TEST(Property, Soundness) {
  for (const auto& f : fixture_files()) {
    const HilbertProof p = hilbert_from_json(read_json(f));
    const auto v = check_hilbert_proof(p);
    ASSERT_TRUE(v.ok);
    for (const auto& line : v.formulas) EXPECT_FALSE(find_countermodel(p.assumptions, line, 6).has_value()) << f;
  }
}

// Property: corrupting any single line makes the proof fail.
TEST(Property, EveryLineMutationIsRejected) {
  for (const auto& f : fixture_files()) {
    const nlohmann::json j = read_json(f);
    for (std::size_t i = 0; i < j["lines"].size(); ++i) {
      nlohmann::json m = j;
      const std::string old = m["lines"][i]["formula"].get<std::string>();
      m["lines"][i]["formula"] = "(" + old + ") & zz";
      EXPECT_FALSE(check_hilbert_proof(hilbert_from_json(m)).ok) << f << " line " << i;
    }
  }
}

// Property: renaming the proof's variables keeps it valid.
TEST(Property, RenamingInvariance) {
  const std::map<std::string, Formula> rename{
      {"p", Formula::var("s")}, {"q", parse_formula("t & u")}, {"r", Formula::var("w")}};
  for (const auto& f : fixture_files()) {
    HilbertProof p = hilbert_from_json(read_json(f));
    for (auto& a : p.assumptions) a = substitute(a, rename);
    for (auto& line : p.lines) {
      if (line.formula) line.formula = substitute(*line.formula, rename);
      for (auto& [k, g] : line.subst) g = substitute(g, rename);
    }
    EXPECT_TRUE(check_hilbert_proof(p).ok) << f;
  }
}
