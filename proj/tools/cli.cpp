#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chl/chl.hpp"

namespace chl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_all(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

/// Argument text, or stdin when the argument is empty or "-".
std::string text_arg(const std::string& arg, std::istream& in) {
  if (arg.empty() || arg == "-") return trim(read_all(in));
  return arg;
}

std::string file_arg(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return read_all(f);
}

FiniteAlgebra algebra_arg(const std::string& path, std::istream& in) {
  const std::string text = file_arg(path, in);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidAlgebra(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

bool is_sequent_text(const std::string& s) { return s.find("|-") != std::string::npos; }

Sequent sequent_arg(const std::string& s) {
  if (is_sequent_text(s)) return parse_sequent(s);
  return Sequent({}, expand_heyting(parse_formula(s)));
}

std::vector<std::string> var_names(int k) {
  static const std::vector<std::string> base{"p", "q", "r", "s", "t", "u"};
  if (k < 1 || k > static_cast<int>(base.size())) throw InputError("--vars must be between 1 and 6");
  return {base.begin(), base.begin() + k};
}

Json valuation_json(const FiniteAlgebra& A, const Valuation& v) {
  Json j = Json::object();
  for (const auto& [name, e] : v) j[name] = A.name(e);
  return j;
}

void print_countermodel(std::ostream& out, const FiniteAlgebra& A, const Valuation& v, int size, int index) {
  out << "countermodel: algebra " << index << " of size " << size;
  if (!v.empty()) out << ", " << render_valuation(A, v);
  out << "\n" << render_arrow_table(A);
}

Json countermodel_json(const FiniteAlgebra& A, const Valuation& v, int size, int index) {
  Json j;
  j["size"] = size;
  j["index"] = index;
  j["algebra"] = algebra_to_json(A);
  j["valuation"] = valuation_json(A, v);
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// parse

int cmd_parse(const std::string& arg, bool json, std::istream& in, std::ostream& out) {
  const std::string text = text_arg(arg, in);
  Json j;
  if (is_sequent_text(text)) {
    Sequent s = parse_sequent(text);
    j["kind"] = "sequent";
    j["text"] = render(s);
    j["antecedent"] = Json::array();
    for (const auto& f : s.antecedent) j["antecedent"].push_back(render(f));
    j["stoup"] = s.stoup ? Json(render(*s.stoup)) : Json(nullptr);
  } else {
    Formula f = parse_formula(text);
    j["kind"] = "formula";
    j["text"] = render(f);
    if (contains_op(f, Op::harrow)) j["expanded"] = render(expand_heyting(f));
    j["depth"] = f.depth();
    j["size"] = f.size();
    j["variables"] = variables(f);
  }
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << j["text"].get<std::string>() << "\n";
    if (j.contains("expanded")) out << "expanded: " << j["expanded"].get<std::string>() << "\n";
  }
  return 0;
}

// decide

struct DecideOptions {
  std::string goal;
  std::vector<std::string> premises;
  int max_size = 6;
  bool json = false;
};

int cmd_decide(const DecideOptions& o, std::istream& in, std::ostream& out) {
  const std::string text = text_arg(o.goal, in);
  std::vector<Formula> premises;
  Formula goal = Formula::one();
  if (is_sequent_text(text)) {
    if (!o.premises.empty()) throw InputError("--premise cannot be combined with a sequent");
    Sequent s = parse_sequent(text);
    premises = s.antecedent;
    goal = s.stoup ? *s.stoup : Formula::zero();
  } else {
    for (const auto& p : o.premises) premises.push_back(parse_formula(p));
    goal = parse_formula(text);
  }
  const Verdict v = decide_chl(premises, goal);
  Json j;
  j["verdict"] = v == Verdict::valid ? "valid" : "invalid";
  std::optional<Countermodel> cm;
  if (v == Verdict::invalid) cm = find_countermodel(premises, goal, o.max_size);
  if (o.json) {
    if (v == Verdict::invalid) {
      if (cm) {
        j["countermodel"] = countermodel_json(cm->algebra, cm->valuation, cm->size, cm->index);
        j["countermodel"]["value"] = cm->algebra.name(evaluate(cm->algebra, goal, cm->valuation));
      } else {
        j["countermodel"] = nullptr;
        j["max_size"] = o.max_size;
      }
    }
    out << j.dump(2) << "\n";
  } else {
    out << j["verdict"].get<std::string>() << "\n";
    if (cm) {
      print_countermodel(out, cm->algebra, cm->valuation, cm->size, cm->index);
      out << "value: " << cm->algebra.name(evaluate(cm->algebra, goal, cm->valuation)) << "\n";
    } else if (v == Verdict::invalid) {
      out << "no countermodel up to size " << o.max_size << "\n";
    }
  }
  return v == Verdict::valid ? 0 : 1;
}

// prove

int cmd_prove(const std::string& arg, std::size_t budget, int max_size, bool json, std::istream& in,
              std::ostream& out) {
  const Sequent goal = sequent_arg(text_arg(arg, in));
  const SearchResult r = prove_cutfree(goal, budget);
  Json j;
  j["sequent"] = render(goal);
  j["steps"] = r.steps;
  j["closure"] = r.closure;
  if (r.status == SearchStatus::proved) {
    if (json) {
      out << proof_to_json(r.proof).dump(2) << "\n";
    } else {
      out << render_proof(r.proof);
    }
    return 0;
  }
  std::optional<SequentCountermodel> cm;
  if (r.status == SearchStatus::not_provable) cm = find_sequent_countermodel(goal, max_size);
  j["status"] = r.status == SearchStatus::not_provable ? "not provable" : "budget exceeded";
  if (json) {
    if (cm) j["countermodel"] = countermodel_json(cm->algebra, cm->valuation, cm->size, cm->index);
    out << j.dump(2) << "\n";
  } else {
    out << j["status"].get<std::string>() << ": " << render(goal) << "\n";
    out << "search: " << r.steps << " sequents visited, closure of " << r.closure << " formulas\n";
    if (cm) print_countermodel(out, cm->algebra, cm->valuation, cm->size, cm->index);
  }
  return 1;
}

// check-proof

struct LoadedProof {
  bool hilbert = false;
  HilbertProof hproof;
  Proof sproof;
};

LoadedProof load_proof_text(const std::string& text) {
  LoadedProof lp;
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("lines")) {
      lp.hilbert = true;
      lp.hproof = hilbert_from_json(j);
    } else {
      lp.sproof = proof_from_json(j);
    }
  } else {
    lp.sproof = parse_proof_tree(t);
  }
  return lp;
}

bool uses_multiset_rules(const Proof& p) {
  if (p->rule == RuleId::mix || p->rule == RuleId::contraction) return true;
  for (const auto& q : p->premises)
    if (uses_multiset_rules(q)) return true;
  return false;
}

ProofMode mode_arg(const std::string& mode, const Proof& p) {
  if (mode == "set") return ProofMode::set;
  if (mode == "multiset") return ProofMode::multiset;
  return uses_multiset_rules(p) ? ProofMode::multiset : ProofMode::set;
}

std::string path_text(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string s = "root";
  for (int i : path) s += "." + std::to_string(i);
  return s;
}

int cmd_check_proof(const std::string& file, const std::string& mode, const std::vector<std::string>& assume,
                    bool json, std::istream& in, std::ostream& out) {
  const LoadedProof lp = load_proof_text(file_arg(file, in));
  Json j;
  if (lp.hilbert) {
    const HilbertVerdict v = check_hilbert_proof(lp.hproof);
    j["kind"] = "hilbert";
    j["valid"] = v.ok;
    if (v.ok) {
      j["conclusion"] = render(*v.conclusion());
    } else {
      j["line"] = v.line;
      j["reason"] = v.reason;
    }
    if (json) {
      out << j.dump(2) << "\n";
    } else if (v.ok) {
      out << "valid\nconclusion: " << render(*v.conclusion()) << "\n";
    } else {
      out << "invalid at line " << v.line << ": " << v.reason << "\n";
    }
    return v.ok ? 0 : 1;
  }
  std::vector<Sequent> assumptions;
  for (const auto& a : assume) assumptions.push_back(parse_sequent(a));
  const ProofMode m = mode_arg(mode, lp.sproof);
  const ProofVerdict v = check_sequent_proof(lp.sproof, assumptions, m);
  j["kind"] = "sequent";
  j["mode"] = m == ProofMode::set ? "set" : "multiset";
  j["valid"] = v.ok;
  j["conclusion"] = render(lp.sproof->conclusion);
  if (v.ok) {
    j["cut_free"] = v.cut_free;
  } else {
    j["reason"] = v.reason;
    j["path"] = v.path;
    j["failing"] = render(v.failing);
  }
  if (json) {
    out << j.dump(2) << "\n";
  } else if (v.ok) {
    out << "valid\nconclusion: " << render(lp.sproof->conclusion) << "\ncut-free: " << yes_no(v.cut_free) << "\n";
  } else {
    out << "invalid at " << path_text(v.path) << " (" << render(v.failing) << "): " << v.reason << "\n";
  }
  return v.ok ? 0 : 1;
}

// eliminate-cut

int cmd_eliminate(const std::string& file, bool as_set, bool json, std::istream& in, std::ostream& out) {
  const LoadedProof lp = load_proof_text(file_arg(file, in));
  if (lp.hilbert) throw InputError("eliminate-cut expects a sequent proof");
  const ProofMode m = mode_arg("auto", lp.sproof);
  const ProofVerdict v = check_sequent_proof(lp.sproof, {}, m);
  if (!v.ok) throw InputError("input proof is invalid at " + path_text(v.path) + ": " + v.reason);
  const Proof ms = m == ProofMode::multiset ? lp.sproof : to_multiset_proof(lp.sproof);
  Proof result = eliminate_mix(ms);
  if (as_set) result = to_set_proof(result);
  if (json) {
    out << proof_to_json(result).dump(2) << "\n";
  } else {
    out << render_proof(result);
  }
  return 0;
}

// translate

int cmd_translate(const std::string& arg, bool to_il, bool to_chl, bool json, std::istream& in, std::ostream& out) {
  if (to_il == to_chl) throw InputError("choose exactly one of --to-il and --to-chl");
  const Formula f = parse_formula(text_arg(arg, in));
  const Formula g = to_il ? translate_to_il(f) : translate_to_chl(f);
  if (json) {
    Json j;
    j["input"] = render(f);
    j["output"] = render(g);
    j["direction"] = to_il ? "il" : "chl";
    out << j.dump(2) << "\n";
  } else {
    out << render(g) << "\n";
  }
  return 0;
}

// algebra

int cmd_algebra_check(const std::string& file, bool json, std::istream& in, std::ostream& out) {
  const FiniteAlgebra A = algebra_arg(file, in);
  Json j;
  j["size"] = A.size();
  j["distributive_lattice"] = A.is_distributive_lattice();
  j["semi_heyting"] = A.is_semi_heyting();
  j["cha"] = A.is_cha();
  j["heyting"] = A.is_heyting();
  std::optional<std::pair<std::string, Valuation>> failed_axiom;
  if (!A.is_cha()) {
    for (const auto& [name, id] : cha_axioms())
      if (auto w = check_identity(A, id)) {
        failed_axiom = {name, *w};
        break;
      }
  }
  Classification c;
  std::optional<Valuation> asym;
  Elem asym_value = 0;
  if (A.is_cha()) {
    c = classify_subvariety(A);
    j["boolean"] = c.boolean;
    j["goedel"] = c.goedel;
    const Identity sym = equation("(x -> y) -> (y -> x)", "1");
    asym = check_identity(A, sym);
    if (asym) asym_value = evaluate(A, sym.lhs, *asym);
    if (asym) {
      j["symmetry_counterexample"] = valuation_json(A, *asym);
      j["symmetry_counterexample"]["value"] = A.name(asym_value);
    } else {
      j["symmetry_counterexample"] = nullptr;
    }
  } else if (failed_axiom) {
    j["failed_axiom"] = failed_axiom->first;
    j["failed_at"] = valuation_json(A, failed_axiom->second);
  }
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << "size: " << A.size() << "\n";
    out << "distributive lattice: " << yes_no(A.is_distributive_lattice()) << "\n";
    out << "semi-Heyting: " << yes_no(A.is_semi_heyting()) << "\n";
    out << "Heyting: " << yes_no(A.is_heyting()) << "\n";
    if (A.is_cha()) {
      out << "CHA: yes, Boolean: " << yes_no(c.boolean) << ", Gödel: " << yes_no(c.goedel) << "\n";
      if (asym)
        out << "symmetry fails: " << render_valuation(A, *asym) << ", (x -> y) -> (y -> x) = " << A.name(asym_value)
            << "\n";
      else
        out << "symmetry holds\n";
    } else {
      out << "CHA: no";
      if (failed_axiom) out << " (" << failed_axiom->first << " fails at " << render_valuation(A, failed_axiom->second) << ")";
      out << "\n";
    }
  }
  return A.is_cha() ? 0 : 1;
}

int cmd_algebra_enumerate(int size, bool heyting, bool json, std::ostream& out) {
  if (size < 1 || size > 12) throw InputError("--size must be between 1 and 12");
  const auto& list = heyting ? enumerate_heyting(size) : enumerate_chas(size);
  if (json) {
    Json j;
    j["size"] = size;
    j["kind"] = heyting ? "heyting" : "cha";
    j["count"] = list.size();
    j["algebras"] = Json::array();
    for (const auto& A : list) j["algebras"].push_back(algebra_to_json(A));
    out << j.dump(2) << "\n";
  } else {
    out << list.size() << (heyting ? " Heyting algebras" : " connexive Heyting algebras") << " of size " << size << "\n";
    for (std::size_t i = 0; i < list.size(); ++i) out << "\n#" << i << "\n" << render_arrow_table(list[i]);
  }
  return 0;
}

int cmd_algebra_countermodel(const DecideOptions& o, std::istream& in, std::ostream& out) {
  std::vector<Formula> premises;
  for (const auto& p : o.premises) premises.push_back(parse_formula(p));
  const Formula goal = parse_formula(text_arg(o.goal, in));
  auto cm = find_countermodel(premises, goal, o.max_size);
  if (o.json) {
    Json j;
    j["found"] = cm.has_value();
    j["max_size"] = o.max_size;
    if (cm) {
      j["countermodel"] = countermodel_json(cm->algebra, cm->valuation, cm->size, cm->index);
      j["countermodel"]["value"] = cm->algebra.name(evaluate(cm->algebra, goal, cm->valuation));
    }
    out << j.dump(2) << "\n";
  } else if (cm) {
    print_countermodel(out, cm->algebra, cm->valuation, cm->size, cm->index);
    out << "value: " << cm->algebra.name(evaluate(cm->algebra, goal, cm->valuation)) << "\n";
  } else {
    out << "no countermodel up to size " << o.max_size << "\n";
  }
  return cm ? 1 : 0;
}

Json suite_json(const FiniteAlgebra& A, const SuiteReport& r) {
  Json j = Json::array();
  for (const auto& item : r.items) {
    Json i;
    i["id"] = item.id;
    i["passed"] = item.passed;
    if (!item.passed) {
      Json ce = Json::array();
      for (Elem e : item.counterexample) ce.push_back(A.name(e));
      i["counterexample"] = ce;
    }
    j.push_back(i);
  }
  return j;
}

int cmd_algebra_suite(const std::string& file, int size, bool json, std::istream& in, std::ostream& out) {
  if (size > 0) {
    std::size_t algebras = 0, failures = 0;
    Json fails = Json::array();
    for (int n = 1; n <= size; ++n) {
      const auto& list = enumerate_chas(n);
      for (std::size_t i = 0; i < list.size(); ++i) {
        ++algebras;
        const SuiteReport r = run_lemma_suite(list[i]);
        for (const auto& item : r.items)
          if (!item.passed) {
            ++failures;
            fails.push_back(Json{{"size", n}, {"index", i}, {"id", item.id}});
          }
      }
    }
    const std::size_t items = lemma_suite_items().size();
    if (json) {
      out << Json{{"max_size", size}, {"algebras", algebras}, {"items", items}, {"failures", failures}, {"failed", fails}}.dump(2)
          << "\n";
    } else {
      out << items << " laws on " << algebras << " algebras of size <= " << size << ": " << failures << " failures\n";
      for (const auto& f : fails)
        out << "FAIL " << f["id"].get<std::string>() << " on algebra " << f["index"] << " of size " << f["size"] << "\n";
    }
    return failures == 0 ? 0 : 1;
  }
  const FiniteAlgebra A = algebra_arg(file, in);
  const SuiteReport r = run_lemma_suite(A);
  if (json) {
    out << Json{{"all_passed", r.all_passed()}, {"items", suite_json(A, r)}}.dump(2) << "\n";
  } else {
    for (const auto& item : r.items) {
      out << (item.passed ? "PASS " : "FAIL ") << item.id << "  " << item.statement;
      if (!item.passed) {
        out << "  at (";
        for (std::size_t k = 0; k < item.counterexample.size(); ++k)
          out << (k ? ", " : "") << A.name(item.counterexample[k]);
        out << ")";
      }
      out << "\n";
    }
  }
  return r.all_passed() ? 0 : 1;
}

int cmd_algebra_classify(const std::string& file, bool json, std::istream& in, std::ostream& out) {
  const FiniteAlgebra A = algebra_arg(file, in);
  const Classification c = classify_subvariety(A);
  const FiniteAlgebra nn = double_negation_image(A);
  const FiniteAlgebra central = central_elements(A);
  if (json) {
    out << Json{{"boolean", c.boolean},
                {"goedel", c.goedel},
                {"double_negation_image_size", nn.size()},
                {"central_elements", central.names()}}
               .dump(2)
        << "\n";
  } else {
    out << "Boolean: " << yes_no(c.boolean) << "\nGödel: " << yes_no(c.goedel) << "\n";
    out << "double-negation image: " << nn.size() << " elements\n";
    out << "central elements:";
    for (const auto& n : central.names()) out << " " << n;
    out << "\n";
  }
  return 0;
}

int cmd_algebra_functor(const std::string& file, bool to_connexive_flag, bool to_heyting_flag, bool json,
                        std::istream& in, std::ostream& out) {
  if (to_connexive_flag == to_heyting_flag) throw InputError("choose exactly one of --to-connexive and --to-heyting");
  const FiniteAlgebra A = algebra_arg(file, in);
  const FiniteAlgebra B = to_connexive_flag ? to_connexive(A) : to_heyting(A);
  if (json) {
    out << algebra_to_json(B).dump(2) << "\n";
  } else {
    out << render_arrow_table(B);
  }
  return 0;
}

// corpus-crosscheck

struct Row {
  Verdict verdict = Verdict::invalid;
  SearchStatus search = SearchStatus::not_provable;
  bool proof_checks = true;
  std::optional<int> witness_size;
};

int cmd_crosscheck(int vars, int depth, int max_size, unsigned threads, std::size_t budget, bool json,
                   std::ostream& out) {
  if (depth < 0 || depth > 3) throw InputError("--depth must be between 0 and 3");
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = enumerate_formulas(var_names(vars), depth);
  for (int n = 1; n <= max_size; ++n) enumerate_chas(n);
  const auto rows = parallel_map<Row>(corpus.size(), threads, [&](std::size_t i) {
    Row r;
    const Formula& f = corpus[i];
    r.verdict = decide_chl({}, f);
    const SearchResult s = prove_cutfree(Sequent({}, f), budget);
    r.search = s.status;
    if (s.status == SearchStatus::proved) r.proof_checks = check_sequent_proof(s.proof).ok && !contains_cut(s.proof);
    if (r.verdict == Verdict::invalid)
      if (auto cm = find_countermodel({}, f, max_size)) r.witness_size = cm->size;
    return r;
  });
  std::size_t valid = 0, invalid = 0, witnessed = 0, disagreements = 0, budget_hits = 0, bad_proofs = 0;
  Json disagree = Json::array(), unwitnessed = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (r.search == SearchStatus::budget_exceeded) ++budget_hits;
    if (!r.proof_checks) ++bad_proofs;
    const bool proved = r.search == SearchStatus::proved;
    if (r.verdict == Verdict::valid) ++valid; else ++invalid;
    if (r.search != SearchStatus::budget_exceeded && proved != (r.verdict == Verdict::valid)) {
      ++disagreements;
      disagree.push_back(render(corpus[i]));
    }
    if (r.verdict == Verdict::invalid) {
      if (r.witness_size) ++witnessed; else unwitnessed.push_back(render(corpus[i]));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = disagreements == 0 && budget_hits == 0 && bad_proofs == 0;
  if (json) {
    out << Json{{"formulas", corpus.size()},       {"valid", valid},
                {"invalid", invalid},              {"witnessed", witnessed},
                {"disagreements", disagreements},  {"budget_exceeded", budget_hits},
                {"invalid_proofs", bad_proofs},    {"disagreeing", disagree},
                {"unwitnessed", unwitnessed}}
               .dump(2)
        << "\n";
  } else {
    out << "formulas: " << corpus.size() << " (" << vars << " variables, depth <= " << depth << ")\n";
    out << "valid: " << valid << ", invalid: " << invalid << "\n";
    out << "decide/prove disagreements: " << disagreements << "\n";
    out << "search budget exceeded: " << budget_hits << "\n";
    out << "prover proofs rejected by the checker: " << bad_proofs << "\n";
    out << "invalid formulas with a countermodel of size <= " << max_size << ": " << witnessed << "/" << invalid << "\n";
    for (const auto& u : unwitnessed) out << "unwitnessed: " << u.get<std::string>() << "\n";
    for (const auto& d : disagree) out << "disagreement: " << d.get<std::string>() << "\n";
    out << "time: " << seconds << " s\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connexive Heyting logic toolkit", "chl"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string text, file, mode = "auto";
  std::vector<std::string> premises, assume;
  int max_size = 6;
  std::size_t budget = 2'000'000;
  bool to_il = false, to_chl = false, as_set = false;

  auto* parse = app.add_subcommand("parse", "Parse and print a formula or sequent");
  parse->add_option("text", text, "Formula or sequent, - for stdin");

  auto* decide = app.add_subcommand("decide", "Decide validity via the intuitionistic translation");
  decide->add_option("formula", text, "Formula or sequent, - for stdin");
  decide->add_option("--premise", premises, "Premise formula (repeatable)")->allow_extra_args(false);
  decide->add_option("--max-size", max_size, "Largest algebra for countermodel search")->check(CLI::Range(1, 10));

  auto* prove = app.add_subcommand("prove", "Cut-free proof search");
  prove->add_option("sequent", text, "Sequent or formula, - for stdin");
  prove->add_option("--budget", budget, "Maximal number of visited sequents");
  prove->add_option("--max-size", max_size, "Largest algebra for countermodel search")->check(CLI::Range(1, 10));

  auto* check = app.add_subcommand("check-proof", "Check a sequent or Hilbert proof");
  check->add_option("file", file, "Proof file (JSON or tree), - for stdin");
  check->add_option("--mode", mode, "auto, set or multiset")->check(CLI::IsMember({"auto", "set", "multiset"}));
  check->add_option("--assume", assume, "Assumption sequent (repeatable)")->allow_extra_args(false);

  auto* elim = app.add_subcommand("eliminate-cut", "Remove cuts from a sequent proof");
  elim->add_option("file", file, "Proof file (JSON or tree), - for stdin");
  elim->add_flag("--set", as_set, "Print the result in the set formulation");

  auto* translate = app.add_subcommand("translate", "Translate between the connexive and intuitionistic languages");
  translate->add_option("formula", text, "Formula, - for stdin");
  translate->add_flag("--to-il", to_il, "Connexive arrows to intuitionistic terms");
  translate->add_flag("--to-chl", to_chl, "Intuitionistic arrows to connexive terms");

  auto* algebra = app.add_subcommand("algebra", "Finite algebra tools");
  algebra->require_subcommand(1);
  auto* a_check = algebra->add_subcommand("check", "Profile an algebra file");
  a_check->add_option("file", file, "Algebra JSON, - for stdin")->required();
  int size = 0;
  bool heyting = false;
  auto* a_enum = algebra->add_subcommand("enumerate", "List algebras of one size up to isomorphism");
  a_enum->add_option("--size", size, "Number of elements")->required();
  a_enum->add_flag("--heyting", heyting, "List Heyting algebras instead");
  auto* a_cm = algebra->add_subcommand("countermodel", "Search for a countermodel");
  a_cm->add_option("formula", text, "Formula, - for stdin");
  a_cm->add_option("--premise", premises, "Premise formula (repeatable)")->allow_extra_args(false);
  a_cm->add_option("--max-size", max_size, "Largest algebra")->check(CLI::Range(1, 10));
  auto* a_suite = algebra->add_subcommand("suite", "Run the arithmetical law suite");
  a_suite->add_option("file", file, "Algebra JSON");
  a_suite->add_option("--size", size, "Run on every algebra up to this size instead");
  auto* a_class = algebra->add_subcommand("classify", "Boolean and Gödel membership");
  a_class->add_option("file", file, "Algebra JSON, - for stdin")->required();
  bool to_conn = false, to_heyt = false;
  auto* a_fun = algebra->add_subcommand("functor", "Apply the term-equivalence functors");
  a_fun->add_option("file", file, "Algebra JSON, - for stdin")->required();
  a_fun->add_flag("--to-connexive", to_conn, "Heyting to connexive");
  a_fun->add_flag("--to-heyting", to_heyt, "Connexive to Heyting");

  int vars = 2, depth = 2;
  unsigned threads = default_threads();
  auto* cross = app.add_subcommand("corpus-crosscheck", "Cross-validate the prover, the decision procedure and the algebras");
  cross->add_option("--vars", vars, "Number of variables");
  cross->add_option("--depth", depth, "Maximal formula depth");
  cross->add_option("--max-size", max_size, "Largest algebra for countermodels")->check(CLI::Range(1, 10));
  cross->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  cross->add_option("--budget", budget, "Search budget per formula");

  for (auto* sub : {parse, decide, prove, check, elim, translate, a_check, a_enum, a_cm, a_suite, a_class, a_fun, cross})
    sub->add_flag("--json", json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*parse) return cmd_parse(text, json, in, out);
    if (*decide) return cmd_decide({text, premises, max_size, json}, in, out);
    if (*prove) return cmd_prove(text, budget, max_size, json, in, out);
    if (*check) return cmd_check_proof(file, mode, assume, json, in, out);
    if (*elim) return cmd_eliminate(file, as_set, json, in, out);
    if (*translate) return cmd_translate(text, to_il, to_chl, json, in, out);
    if (*a_check) return cmd_algebra_check(file, json, in, out);
    if (*a_enum) return cmd_algebra_enumerate(size, heyting, json, out);
    if (*a_cm) return cmd_algebra_countermodel({text, premises, max_size, json}, in, out);
    if (*a_suite) {
      if (size <= 0 && file.empty()) throw InputError("give an algebra file or --size");
      return cmd_algebra_suite(file, size, json, in, out);
    }
    if (*a_class) return cmd_algebra_classify(file, json, in, out);
    if (*a_fun) return cmd_algebra_functor(file, to_conn, to_heyt, json, in, out);
    if (*cross) return cmd_crosscheck(vars, depth, max_size, threads, budget, json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidAlgebra& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MixEliminationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace chl::cli
