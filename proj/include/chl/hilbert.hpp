#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chl/syntax.hpp"

namespace chl {

/// Axiom schema over the metavariables phi, psi, chi. `=>` in templates is
/// shorthand for a -> (a & b).
struct AxiomSchema {
  std::string id;
  std::string text;
  Formula template_formula;
  std::vector<std::string> metavariables;
};

inline const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = [] {
    const std::vector<std::pair<std::string, std::string>> raw = {
        {"PL1", "phi => (psi => phi)"},
        {"PL2", "(phi => (psi => chi)) => ((phi => psi) => (phi => chi))"},
        {"PL3", "phi & psi => phi"},
        {"PL4", "phi & psi => psi"},
        {"PL5", "phi => (psi => phi & psi)"},
        {"PL6", "phi => phi | psi"},
        {"PL7", "psi => phi | psi"},
        {"PL8", "(phi => chi) => ((psi => chi) => (phi | psi => chi))"},
        {"PL9", "1"},
        {"CHL2", "~(0 & phi)"},
        {"CHL3", "~phi => (0 -> phi)"},
        {"CHL4", "(phi -> psi) => (phi => psi)"},
        {"CHL5", "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))"},
        {"CHL6", "(phi -> psi) -> ~(phi -> ~psi)"},
        {"CHL8", "phi & psi => phi & (phi -> psi)"},
        {"CHL9", "(phi -> psi) => ((phi & chi) -> (psi & chi))"},
        {"CHL10", "(phi -> psi) => ((phi | chi) -> (psi | chi))"},
    };
    std::vector<AxiomSchema> out;
    for (const auto& [id, text] : raw) {
      Formula t = expand_heyting(parse_formula(text));
      out.push_back({id, text, t, variables(t)});
    }
    return out;
  }();
  return schemas;
}

inline const AxiomSchema& axiom_schema(const std::string& id) {
  for (const auto& s : axiom_schemas())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown axiom schema '" + id + "'");
}

/// Instance of a schema; throws std::invalid_argument on an unknown id or a
/// map that misses or exceeds the schema's metavariables.
inline Formula axiom_instance(const std::string& id, const std::map<std::string, Formula>& sigma) {
  const AxiomSchema& s = axiom_schema(id);
  for (const auto& mv : s.metavariables)
    if (!sigma.count(mv)) throw std::invalid_argument("instantiation of " + id + " misses metavariable '" + mv + "'");
  for (const auto& [k, v] : sigma)
    if (std::find(s.metavariables.begin(), s.metavariables.end(), k) == s.metavariables.end())
      throw std::invalid_argument("metavariable '" + k + "' does not occur in " + id);
  return substitute(s.template_formula, sigma);
}

enum class Justification { assumption, axiom, mp, chl7 };
enum class Side { left, right };

struct HilbertLine {
  std::optional<Formula> formula;  // may be omitted for axiom and mp lines
  Justification by = Justification::assumption;
  std::string schema;
  std::map<std::string, Formula> subst;
  int from = -1;   // mp: minor premise; chl7: premise line
  int major = -1;  // mp: line holding phi => psi
  Side side = Side::left;
};

struct HilbertProof {
  std::vector<Formula> assumptions;
  std::vector<HilbertLine> lines;
};

struct HilbertVerdict {
  bool ok = true;
  int line = -1;
  std::string reason;
  std::vector<Formula> formulas;  // expanded formula of each accepted line
  std::optional<Formula> conclusion() const {
    if (!ok || formulas.empty()) return std::nullopt;
    return formulas.back();
  }
};

namespace detail {

/// Splits a => b (expanded form a -> (a & b)) into (a, b).
inline std::optional<std::pair<Formula, Formula>> match_harrow(const Formula& f) {
  if (f.op() != Op::carrow || f.right().op() != Op::conj || !(f.right().left() == f.left())) return std::nullopt;
  return std::make_pair(f.left(), f.right().right());
}

}  // namespace detail

/// Verifies every line; the first offending line is reported.
inline HilbertVerdict check_hilbert_proof(const HilbertProof& proof) {
  HilbertVerdict v;
  std::vector<Formula> hyps;
  for (const auto& a : proof.assumptions) hyps.push_back(expand_heyting(a));
  auto fail = [&v](int k, std::string why) {
    v.ok = false;
    v.line = k;
    v.reason = std::move(why);
    return v;
  };
  for (int k = 0; k < static_cast<int>(proof.lines.size()); ++k) {
    const HilbertLine& ln = proof.lines[k];
    std::optional<Formula> claimed;
    if (ln.formula) claimed = expand_heyting(*ln.formula);
    Formula got = Formula::one();
    switch (ln.by) {
      case Justification::assumption:
        if (!claimed) return fail(k, "assumption line without a formula");
        if (std::find(hyps.begin(), hyps.end(), *claimed) == hyps.end())
          return fail(k, render(*claimed) + " is not an assumption");
        got = *claimed;
        break;
      case Justification::axiom:
        try {
          std::map<std::string, Formula> sigma;
          for (const auto& [mv, f] : ln.subst) sigma.emplace(mv, expand_heyting(f));
          got = axiom_instance(ln.schema, sigma);
        } catch (const std::invalid_argument& e) {
          return fail(k, e.what());
        }
        if (claimed && !(*claimed == got))
          return fail(k, "formula is not the " + ln.schema + " instance " + render(got));
        break;
      case Justification::mp: {
        if (ln.from < 0 || ln.from >= k || ln.major < 0 || ln.major >= k)
          return fail(k, "modus ponens must cite two earlier lines");
        auto arrow = detail::match_harrow(v.formulas[ln.major]);
        if (!arrow) return fail(k, "line " + std::to_string(ln.major) + " is not of the form phi => psi");
        if (!(arrow->first == v.formulas[ln.from]))
          return fail(k, "line " + std::to_string(ln.from) + " is not the antecedent of line " +
                             std::to_string(ln.major));
        got = arrow->second;
        if (claimed && !(*claimed == got)) return fail(k, "modus ponens yields " + render(got));
        break;
      }
      case Justification::chl7: {
        if (!claimed) return fail(k, "rule line without a formula");
        if (ln.from < 0 || ln.from >= k) return fail(k, "rule must cite an earlier line");
        const Formula& prem = v.formulas[ln.from];
        std::optional<std::pair<Formula, Formula>> there, back;
        if (prem.op() == Op::conj) {
          there = detail::match_harrow(prem.left());
          back = detail::match_harrow(prem.right());
        }
        if (!there || !back || !(there->first == back->second) || !(there->second == back->first))
          return fail(k, "line " + std::to_string(ln.from) + " is not of the form (phi => psi) & (psi => phi)");
        const Formula& phi = there->first;
        const Formula& psi = there->second;
        auto concl = detail::match_harrow(*claimed);
        bool shape = concl && concl->first.op() == Op::carrow && concl->second.op() == Op::carrow;
        if (shape) {
          const Formula& a = concl->first;
          const Formula& b = concl->second;
          if (ln.side == Side::left) {
            shape = a.left() == phi && b.left() == psi && a.right() == b.right();
          } else {
            shape = a.right() == phi && b.right() == psi && a.left() == b.left();
          }
        }
        if (!shape)
          return fail(k, std::string("formula does not follow by the ") + (ln.side == Side::left ? "left" : "right") +
                             " replacement rule");
        got = *claimed;
        break;
      }
    }
    v.formulas.push_back(got);
  }
  if (proof.lines.empty()) return fail(0, "empty proof");
  return v;
}

inline HilbertProof hilbert_from_json(const nlohmann::json& j) {
  HilbertProof p;
  try {
    const nlohmann::json assumptions = j.value("assumptions", nlohmann::json::array());
    for (const auto& a : assumptions) p.assumptions.push_back(parse_formula(a.get<std::string>()));
    for (const auto& l : j.at("lines")) {
      HilbertLine ln;
      if (l.contains("formula")) ln.formula = parse_formula(l["formula"].get<std::string>());
      const std::string by = l.at("by").get<std::string>();
      if (by == "assumption") {
        ln.by = Justification::assumption;
      } else if (by.rfind("axiom:", 0) == 0) {
        ln.by = Justification::axiom;
        ln.schema = by.substr(6);
        const nlohmann::json subst = l.value("subst", nlohmann::json::object());
        for (const auto& [k, f] : subst.items()) ln.subst.emplace(k, parse_formula(f.get<std::string>()));
      } else if (by == "mp") {
        ln.by = Justification::mp;
        const auto& from = l.at("from");
        if (!from.is_array() || from.size() != 2) throw std::invalid_argument("mp needs \"from\": [i, j]");
        ln.from = from[0].get<int>();
        ln.major = from[1].get<int>();
      } else if (by == "chl7") {
        ln.by = Justification::chl7;
        ln.from = l.at("from").get<int>();
        const std::string side = l.value("side", "left");
        if (side != "left" && side != "right") throw std::invalid_argument("side must be left or right");
        ln.side = side == "left" ? Side::left : Side::right;
      } else {
        throw std::invalid_argument("unknown justification '" + by + "'");
      }
      p.lines.push_back(std::move(ln));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof JSON: ") + e.what());
  }
  return p;
}

inline nlohmann::ordered_json hilbert_to_json(const HilbertProof& p) {
  nlohmann::ordered_json j;
  j["assumptions"] = nlohmann::ordered_json::array();
  for (const auto& a : p.assumptions) j["assumptions"].push_back(render(a));
  j["lines"] = nlohmann::ordered_json::array();
  for (const auto& ln : p.lines) {
    nlohmann::ordered_json l;
    if (ln.formula) l["formula"] = render(*ln.formula);
    switch (ln.by) {
      case Justification::assumption:
        l["by"] = "assumption";
        break;
      case Justification::axiom:
        l["by"] = "axiom:" + ln.schema;
        l["subst"] = nlohmann::ordered_json::object();
        for (const auto& [k, f] : ln.subst) l["subst"][k] = render(f);
        break;
      case Justification::mp:
        l["by"] = "mp";
        l["from"] = {ln.from, ln.major};
        break;
      case Justification::chl7:
        l["by"] = "chl7";
        l["from"] = ln.from;
        l["side"] = ln.side == Side::left ? "left" : "right";
        break;
    }
    j["lines"].push_back(l);
  }
  return j;
}

}  // namespace chl
