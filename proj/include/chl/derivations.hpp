#pragma once

#include <map>
#include <string>
#include <vector>

#include "chl/proof.hpp"

namespace chl {

inline Sequent substitute(const Sequent& s, const std::map<std::string, Formula>& sigma) {
  std::vector<Formula> ant;
  for (const auto& f : s.antecedent) ant.push_back(substitute(f, sigma));
  std::optional<Formula> st;
  if (s.stoup) st = substitute(*s.stoup, sigma);
  return Sequent(std::move(ant), std::move(st));
}

inline Proof substitute(const Proof& p, const std::map<std::string, Formula>& sigma) {
  std::vector<Proof> prem;
  for (const auto& q : p->premises) prem.push_back(substitute(q, sigma));
  return make_proof(p->rule, substitute(p->conclusion, sigma), std::move(prem));
}

namespace derivations {

namespace detail {

/// Builds nodes from sequent text over p, q, r, instantiated at the end.
struct Builder {
  std::map<std::string, Formula> sigma;

  Builder(const Formula& phi, const Formula& psi, const Formula& chi)
      : sigma{{"p", phi}, {"q", psi}, {"r", chi}} {}

  Proof operator()(RuleId r, const char* seq, std::vector<Proof> prem = {}) const {
    return make_proof(r, substitute(parse_sequent(seq), sigma), std::move(prem));
  }
  Proof id(const char* f) const {
    Formula g = substitute(parse_formula(f), sigma);
    return make_proof(RuleId::id, Sequent({g}, g));
  }
};

inline Formula var(const char* n) { return Formula::var(n); }

}  // namespace detail

/// (p -> q) & p |- p & q
inline Proof conj_arrow_forward(Formula phi = detail::var("p"), Formula psi = detail::var("q")) {
  detail::Builder b(phi, psi, Formula::one());
  auto l = b(RuleId::andl, "(p -> q) & p |- p", {b.id("p")});
  auto m = b(RuleId::arrla, "p -> q, p |- q", {b.id("p"), b.id("q")});
  auto r = b(RuleId::andl, "(p -> q) & p |- q", {m});
  return b(RuleId::andr, "(p -> q) & p |- p & q", {l, r});
}

/// p & q |- (p -> q) & p
inline Proof conj_arrow_backward(Formula phi = detail::var("p"), Formula psi = detail::var("q")) {
  detail::Builder b(phi, psi, Formula::one());
  auto l = b(RuleId::andl, "p & q |- p", {b.id("p")});
  auto x = b(RuleId::wl, "p, q |- q", {b.id("q")});
  auto y = b(RuleId::wl, "p, q, ~p |-", {b(RuleId::negl, "p, ~p |-", {b.id("p")})});
  auto z = b(RuleId::arrr, "p, q |- p -> q", {x, y});
  auto w = b(RuleId::andl, "p & q |- p -> q", {z});
  return b(RuleId::andr, "p & q |- (p -> q) & p", {w, l});
}

/// p -> q |- (p & r) -> (q & r)
inline Proof conj_monotone(Formula phi = detail::var("p"), Formula psi = detail::var("q"), Formula chi = detail::var("r")) {
  detail::Builder b(phi, psi, chi);
  auto a1 = b(RuleId::arrla, "p -> q, p |- q", {b.id("p"), b.id("q")});
  auto a2 = b(RuleId::andl, "p -> q, p & r |- q", {a1});
  auto b1 = b(RuleId::wl, "p -> q, r |- r", {b.id("r")});
  auto b2 = b(RuleId::andl, "p -> q, p & r |- r", {b1});
  auto c = b(RuleId::andr, "p -> q, p & r |- q & r", {a2, b2});
  auto d1 = b(RuleId::wl, "p, q & r |- p", {b.id("p")});
  auto d3 = b(RuleId::andl, "p, q & r |- r", {b(RuleId::wl, "p, r |- r", {b.id("r")})});
  auto d4 = b(RuleId::andr, "p, q & r |- p & r", {d1, d3});
  auto d5 = b(RuleId::negl, "p, q & r, ~(p & r) |-", {d4});
  auto d6 = b(RuleId::andl, "q & r |- q", {b.id("q")});
  auto d7 = b(RuleId::arrlc, "p -> q, q & r, ~(p & r) |-", {d5, d6});
  return b(RuleId::arrr, "p -> q |- p & r -> q & r", {c, d7});
}

/// p -> q |- (p | r) -> (q | r)
inline Proof disj_monotone(Formula phi = detail::var("p"), Formula psi = detail::var("q"), Formula chi = detail::var("r")) {
  detail::Builder b(phi, psi, chi);
  auto e1 = b(RuleId::arrla, "p -> q, p |- q", {b.id("p"), b.id("q")});
  auto e2 = b(RuleId::orr1, "p -> q, p |- q | r", {e1});
  auto e4 = b(RuleId::wl, "p -> q, r |- q | r", {b(RuleId::orr2, "r |- q | r", {b.id("r")})});
  auto d = b(RuleId::orl, "p -> q, p | r |- q | r", {e2, e4});
  auto f2 = b(RuleId::negl, "p, ~(p | r) |-", {b(RuleId::orr1, "p |- p | r", {b.id("p")})});
  auto f3 = b(RuleId::arrlc, "p -> q, q, ~(p | r) |-", {f2, b.id("q")});
  auto g2 = b(RuleId::negl, "r, ~(p | r) |-", {b(RuleId::orr2, "r |- p | r", {b.id("r")})});
  auto g3 = b(RuleId::wl, "p -> q, r, ~(p | r) |-", {g2});
  auto h = b(RuleId::orl, "p -> q, q | r, ~(p | r) |-", {f3, g3});
  return b(RuleId::arrr, "p -> q |- p | r -> q | r", {d, h});
}

/// p -> q, p -> ~q |-
inline Proof arrow_clash(Formula phi = detail::var("p"), Formula psi = detail::var("q")) {
  detail::Builder b(phi, psi, Formula::one());
  auto a = b(RuleId::arrla, "p -> q, p |- q", {b.id("p"), b.id("q")});
  auto n = b(RuleId::negl, "p, ~p |-", {b.id("p")});
  auto c = b(RuleId::arrlc, "p -> q, ~p, q |-", {n, b.id("q")});
  return b(RuleId::arrld, "p -> q, p -> ~q |-", {a, c});
}

/// ~(p -> q) |- p -> ~q
inline Proof negated_arrow(Formula phi = detail::var("p"), Formula psi = detail::var("q")) {
  detail::Builder b(phi, psi, Formula::one());
  auto a1 = b(RuleId::wl, "p, q |- q", {b.id("q")});
  auto a3 = b(RuleId::wl, "p, q, ~p |-", {b(RuleId::negl, "p, ~p |-", {b.id("p")})});
  auto a4 = b(RuleId::arrr, "p, q |- p -> q", {a1, a3});
  auto a5 = b(RuleId::negl, "~(p -> q), p, q |-", {a4});
  auto a6 = b(RuleId::negr, "~(p -> q), p |- ~q", {a5});
  auto b2 = b(RuleId::wl, "~q, p, ~p |-", {b(RuleId::negl, "p, ~p |-", {b.id("p")})});
  auto b3 = b(RuleId::wr, "~q, p, ~p |- q", {b2});
  auto c2 = b(RuleId::wl, "~p, q, ~q |-", {b(RuleId::negl, "q, ~q |-", {b.id("q")})});
  auto b4 = b(RuleId::arrr, "~p, ~q |- p -> q", {b3, c2});
  auto b5 = b(RuleId::negl, "~p, ~q, ~(p -> q) |-", {b4});
  return b(RuleId::arrr, "~(p -> q) |- p -> ~q", {a6, b5});
}

/// |- (p -> q) -> ~(p -> ~q)
inline Proof boethius(Formula phi = detail::var("p"), Formula psi = detail::var("q")) {
  detail::Builder b(phi, psi, Formula::one());
  auto i2 = b(RuleId::negr, "p -> q |- ~(p -> ~q)", {arrow_clash(phi, psi)});
  auto d2 = b(RuleId::negl, "~(p -> q), ~(p -> ~q) |-", {negated_arrow(phi, psi)});
  return b(RuleId::arrr, "|- (p -> q) -> ~(p -> ~q)", {i2, d2});
}

/// p -> q, q -> r |- p -> r
inline Proof transitivity(Formula phi = detail::var("p"), Formula psi = detail::var("q"), Formula chi = detail::var("r")) {
  detail::Builder b(phi, psi, chi);
  auto a = b(RuleId::arrla, "p -> q, p |- q", {b.id("p"), b.id("q")});
  auto d2 = b(RuleId::arrla, "p -> q, q -> r, p |- r", {a, b.id("r")});
  auto n = b(RuleId::negl, "p, ~p |-", {b.id("p")});
  auto c = b(RuleId::arrlc, "p -> q, ~p, q |-", {n, b.id("q")});
  auto d = b(RuleId::arrlc, "p -> q, q -> r, r, ~p |-", {c, b.id("r")});
  return b(RuleId::arrr, "p -> q, q -> r |- p -> r", {d2, d});
}

/// p -> q |- (q -> r) -> (p -> r), through two cuts.
inline Proof prefixing_via_cuts(Formula phi = detail::var("p"), Formula psi = detail::var("q"), Formula chi = detail::var("r")) {
  detail::Builder b(phi, psi, chi);
  const Formula nchi = Formula::neg(chi);
  auto c1 = b(RuleId::cut, "p -> q, q -> ~r, p -> r |-", {transitivity(phi, psi, nchi), arrow_clash(phi, chi)});
  auto d3 = b(RuleId::cut, "p -> q, p -> r, ~(q -> r) |-", {negated_arrow(psi, chi), c1});
  return b(RuleId::arrr, "p -> q |- (q -> r) -> (p -> r)", {transitivity(phi, psi, chi), d3});
}

struct Stored {
  std::string name;
  Proof proof;
};

/// Every stored derivation at p, q, r.
inline std::vector<Stored> all() {
  return {
      {"conj_arrow_forward", conj_arrow_forward()},
      {"conj_arrow_backward", conj_arrow_backward()},
      {"conj_monotone", conj_monotone()},
      {"disj_monotone", disj_monotone()},
      {"arrow_clash", arrow_clash()},
      {"negated_arrow", negated_arrow()},
      {"boethius", boethius()},
      {"transitivity", transitivity()},
      {"prefixing_via_cuts", prefixing_via_cuts()},
  };
}

}  // namespace derivations

}  // namespace chl
