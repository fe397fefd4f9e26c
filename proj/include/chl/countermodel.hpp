#pragma once

#include <optional>
#include <vector>

#include "chl/algebra.hpp"
#include "chl/catalog.hpp"

namespace chl {

struct Countermodel {
  FiniteAlgebra algebra;
  Valuation valuation;
  int size;
  int index;  // position within enumerate_chas(size)
};

/// Searches all connexive Heyting algebras of size 1..max_size in catalogue
/// order, and within each algebra all valuations in mixed-radix order, for
/// one that sends every premise to 1 and the goal elsewhere.
inline std::optional<Countermodel> find_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                                                     int max_size) {
  std::vector<Formula> all = premises;
  all.push_back(goal);
  const auto vars = variables(all);
  std::vector<CompiledFormula> prem;
  for (const auto& p : premises) prem.emplace_back(p, vars);
  CompiledFormula g(goal, vars);
  for (int n = 1; n <= max_size; ++n) {
    const auto& algebras = enumerate_chas(n);
    for (std::size_t idx = 0; idx < algebras.size(); ++idx) {
      const FiniteAlgebra& A = algebras[idx];
      std::optional<Countermodel> found;
      for_each_assignment(n, static_cast<int>(vars.size()), [&](const Elem* v) {
        for (const auto& p : prem)
          if (p.eval(A, v) != A.one()) return true;
        if (g.eval(A, v) == A.one()) return true;
        Valuation w;
        for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = v[i];
        found = Countermodel{A, std::move(w), n, static_cast<int>(idx)};
        return false;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace chl
