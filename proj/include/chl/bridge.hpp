#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chl/algebra.hpp"
#include "chl/catalog.hpp"
#include "chl/sequent.hpp"

namespace chl {

/// tau: a -> b becomes (a => b) & ((a => 0) => (b => 0)), bottom-up.
inline Formula translate_to_il(const Formula& f) {
  if (f.is_atomic()) return f;
  Formula l = translate_to_il(f.left());
  Formula r = translate_to_il(f.right());
  if (f.op() == Op::carrow) {
    const Formula z = Formula::zero();
    return Formula::conj(Formula::harrow(l, r), Formula::harrow(Formula::harrow(l, z), Formula::harrow(r, z)));
  }
  return Formula::binary(f.op(), l, r);
}

/// rho: a => b becomes a -> (a & b), bottom-up.
inline Formula translate_to_chl(const Formula& f) { return expand_heyting(f); }

enum class Verdict { valid, invalid };

namespace detail {

class G4ip {
 public:
  bool prove(FormulaSet gamma, const Formula& goal) { return search(std::move(gamma), goal); }

 private:
  struct Key {
    FormulaSet gamma;
    Formula goal;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = k.goal.hash();
      for (const auto& f : k.gamma) h = h * 1000003u ^ f.hash();
      return h;
    }
  };

  static FormulaSet replace(const FormulaSet& g, const Formula& out, std::initializer_list<Formula> in) {
    FormulaSet r;
    for (const auto& f : g)
      if (!(f == out)) r.push_back(f);
    for (const auto& f : in) r.push_back(f);
    return make_set(std::move(r));
  }

  bool search(FormulaSet gamma, const Formula& goal) {
    Key key{gamma, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = step(gamma, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

  bool step(const FormulaSet& g, const Formula& goal) {
    if (goal.op() == Op::one || set_contains(g, goal) || set_contains(g, Formula::zero())) return true;
    for (const auto& f : g) {
      switch (f.op()) {
        case Op::one:
          return search(replace(g, f, {}), goal);
        case Op::conj:
          return search(replace(g, f, {f.left(), f.right()}), goal);
        case Op::disj:
          return search(replace(g, f, {f.left()}), goal) && search(replace(g, f, {f.right()}), goal);
        case Op::harrow: {
          const Formula& a = f.left();
          const Formula& b = f.right();
          switch (a.op()) {
            case Op::var:
              if (set_contains(g, a)) return search(replace(g, f, {b}), goal);
              break;
            case Op::one:
              return search(replace(g, f, {b}), goal);
            case Op::zero:
              return search(replace(g, f, {}), goal);
            case Op::conj:
              return search(replace(g, f, {Formula::harrow(a.left(), Formula::harrow(a.right(), b))}), goal);
            case Op::disj:
              return search(replace(g, f, {Formula::harrow(a.left(), b), Formula::harrow(a.right(), b)}), goal);
            default:
              break;
          }
          break;
        }
        case Op::carrow:
          throw std::invalid_argument("decide_il expects formulas without ->");
        default:
          break;
      }
    }
    switch (goal.op()) {
      case Op::conj:
        return search(g, goal.left()) && search(g, goal.right());
      case Op::harrow:
        return search(set_insert(g, goal.left()), goal.right());
      case Op::carrow:
        throw std::invalid_argument("decide_il expects formulas without ->");
      default:
        break;
    }
    if (goal.op() == Op::disj && (search(g, goal.left()) || search(g, goal.right()))) return true;
    for (const auto& f : g) {
      if (f.op() != Op::harrow || f.left().op() != Op::harrow) continue;
      const Formula& d = f.left().right();
      const Formula& b = f.right();
      if (search(replace(g, f, {Formula::harrow(d, b)}), f.left()) && search(replace(g, f, {b}), goal)) return true;
    }
    return false;
  }

  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace detail

/// Intuitionistic consequence over 0, 1, &, |, =>.
inline Verdict decide_il(const std::vector<Formula>& premises, const Formula& goal) {
  for (const auto& p : premises)
    if (contains_op(p, Op::carrow)) throw std::invalid_argument("decide_il expects formulas without ->");
  if (contains_op(goal, Op::carrow)) throw std::invalid_argument("decide_il expects formulas without ->");
  detail::G4ip prover;
  return prover.prove(make_set(premises), goal) ? Verdict::valid : Verdict::invalid;
}

inline Verdict decide_chl(const std::vector<Formula>& premises, const Formula& goal) {
  std::vector<Formula> tp;
  for (const auto& p : premises) tp.push_back(translate_to_il(p));
  return decide_il(tp, translate_to_il(goal));
}

using Equation = Identity;

/// Gamma |- Pi as Gamma^& = Gamma^& & Pi^v, with Pi^v = 0 for an empty stoup.
inline Equation tau_sequent(const Sequent& s) {
  Formula l = antecedent_conjunction(s.antecedent);
  Formula r = s.stoup ? *s.stoup : Formula::zero();
  return {l, Formula::conj(l, r)};
}

/// {a |- b, b |- a}, deduplicated.
inline std::vector<Sequent> rho_equation(const Equation& e) {
  std::vector<Sequent> out{Sequent({e.lhs}, e.rhs)};
  if (!(e.lhs == e.rhs)) out.push_back(Sequent({e.rhs}, e.lhs));
  return out;
}

/// Decides a sequent through its formula reading Gamma^& => Pi^v.
inline Verdict decide_sequent(const Sequent& s) {
  Formula r = s.stoup ? *s.stoup : Formula::zero();
  return decide_chl(s.antecedent, r);
}

struct SequentCountermodel {
  FiniteAlgebra algebra;
  Valuation valuation;
  int size;
  int index;
};

/// Smallest catalogued algebra and first valuation with v(Gamma^&) not below
/// v(Pi^v).
inline std::optional<SequentCountermodel> find_sequent_countermodel(const Sequent& s, int max_size) {
  const Formula l = antecedent_conjunction(s.antecedent);
  const Formula r = s.stoup ? *s.stoup : Formula::zero();
  const auto vars = variables(std::vector<Formula>{l, r});
  CompiledFormula cl(l, vars), cr(r, vars);
  for (int n = 1; n <= max_size; ++n) {
    const auto& algebras = enumerate_chas(n);
    for (std::size_t idx = 0; idx < algebras.size(); ++idx) {
      const FiniteAlgebra& A = algebras[idx];
      std::optional<SequentCountermodel> found;
      for_each_assignment(n, static_cast<int>(vars.size()), [&](const Elem* v) {
        if (A.leq(cl.eval(A, v), cr.eval(A, v))) return true;
        Valuation w;
        for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = v[i];
        found = SequentCountermodel{A, std::move(w), n, static_cast<int>(idx)};
        return false;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace chl
