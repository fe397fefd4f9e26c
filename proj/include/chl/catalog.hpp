#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "chl/algebra.hpp"

namespace chl {

/// Labels for an n-element algebra: "0", "a", "b", ..., "1".
inline std::vector<std::string> default_names(int n) {
  if (n == 1) return {"0"};
  std::vector<std::string> out{"0"};
  for (int i = 1; i < n - 1; ++i) {
    std::string s;
    int k = i - 1;
    do {
      s.insert(s.begin(), static_cast<char>('a' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    out.push_back(s);
  }
  out.push_back("1");
  return out;
}

/// Largest c with a & c <= b.
inline Elem heyting_arrow(const FiniteAlgebra& L, Elem a, Elem b) {
  Elem best = L.zero();
  for (Elem c = 0; c < L.size(); ++c)
    if (L.leq(L.meet(a, c), b)) best = L.join(best, c);
  if (!L.leq(L.meet(a, best), b)) throw InvalidAlgebra("no largest residual: lattice is not distributive");
  return best;
}

/// The Heyting algebra on the lattice reduct of `L`.
inline FiniteAlgebra heyting_on_lattice(const FiniteAlgebra& L) {
  if (!L.is_distributive_lattice()) throw InvalidAlgebra("lattice is not distributive");
  return L.with_arrow([&L](Elem a, Elem b) { return heyting_arrow(L, a, b); });
}

/// H(A): arrow replaced by a -> (a & b).
inline FiniteAlgebra to_heyting(const FiniteAlgebra& A) {
  if (!A.is_cha()) throw InvalidAlgebra("to_heyting expects a connexive Heyting algebra");
  return A.with_arrow([&A](Elem a, Elem b) { return A.arrow(a, A.meet(a, b)); });
}

/// C(H): arrow replaced by (a => b) & (~a => ~b).
inline FiniteAlgebra to_connexive(const FiniteAlgebra& H) {
  if (!H.is_heyting()) throw InvalidAlgebra("to_connexive expects a Heyting algebra");
  return H.with_arrow([&H](Elem a, Elem b) { return H.meet(H.arrow(a, b), H.arrow(H.neg(a), H.neg(b))); });
}

namespace detail {

inline FiniteAlgebra lattice_from_leq(const std::vector<std::vector<int>>& leq) {
  const int n = static_cast<int>(leq.size());
  AlgebraTables t;
  t.names = default_names(n);
  t.leq = leq;
  t.arrow.assign(n, std::vector<Elem>(n, 0));
  t.zero = 0;
  t.one = n - 1;
  return validate_algebra(t);
}

/// Bounded lattice orders on n points with bottom 0, top n-1 and every
/// relation i <= j satisfying i < j, one per isomorphism class.
inline std::vector<std::vector<std::vector<int>>> distributive_lattice_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) pairs.emplace_back(i, j);
  const int P = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int k = 0; k < P; ++k) pair_index[pairs[k].first][pairs[k].second] = k;

  std::vector<int> middle(std::max(0, n - 2));
  std::iota(middle.begin(), middle.end(), 1);

  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> le(n, std::vector<int>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P); ++mask) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) le[i][j] = (i == j || i == 0 || j == n - 1) ? 1 : 0;
    for (int k = 0; k < P; ++k)
      if (mask >> k & 1) le[pairs[k].first][pairs[k].second] = 1;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
    if (!ok) continue;

    auto bound = [&](int a, int b, bool lower) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        bool is_bound = lower ? (le[c][a] && le[c][b]) : (le[a][c] && le[b][c]);
        if (!is_bound) continue;
        bool extreme = true;
        for (int d = 0; d < n && extreme; ++d) {
          bool d_bound = lower ? (le[d][a] && le[d][b]) : (le[a][d] && le[b][d]);
          if (d_bound && !(lower ? le[d][c] : le[c][d])) extreme = false;
        }
        if (extreme) best = c;
      }
      return best;
    };
    std::vector<std::vector<int>> mt(n, std::vector<int>(n)), jn(n, std::vector<int>(n));
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        mt[a][b] = bound(a, b, true);
        jn[a][b] = bound(a, b, false);
        if (mt[a][b] < 0 || jn[a][b] < 0) ok = false;
      }
    if (!ok) continue;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (mt[a][jn[b][c]] != jn[mt[a][b]][mt[a][c]]) ok = false;
    if (!ok) continue;

    // Keep the mask only if it is the least code among relabelings of the
    // middle elements that keep the labelling natural.
    std::vector<int> perm = middle;
    std::vector<int> full(n);
    bool canonical = true;
    do {
      full[0] = 0;
      full[n - 1] = n - 1;
      for (int i = 0; i < n - 2; ++i) full[i + 1] = perm[i];
      std::uint64_t code = 0;
      bool natural = true;
      for (int k = 0; k < P && natural; ++k) {
        if (!(mask >> k & 1)) continue;
        int a = full[pairs[k].first], b = full[pairs[k].second];
        if (a > b) {
          natural = false;
        } else {
          code |= std::uint64_t{1} << pair_index[a][b];
        }
      }
      if (natural && code < mask) canonical = false;
    } while (canonical && std::next_permutation(perm.begin(), perm.end()));
    if (canonical) out.push_back(le);
  }
  return out;
}

}  // namespace detail

/// All n-element Heyting algebras up to isomorphism, in a fixed order.
inline const std::vector<FiniteAlgebra>& enumerate_heyting(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  if (n < 1) throw std::invalid_argument("algebra size must be at least 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<FiniteAlgebra> out;
  if (n == 1) {
    out.push_back(heyting_on_lattice(detail::lattice_from_leq({{1}})));
  } else {
    for (const auto& leq : detail::distributive_lattice_orders(n))
      out.push_back(heyting_on_lattice(detail::lattice_from_leq(leq)));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

/// All n-element connexive Heyting algebras up to isomorphism, obtained as
/// C(H) for each enumerated Heyting algebra H.
inline const std::vector<FiniteAlgebra>& enumerate_chas(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  const auto& hs = enumerate_heyting(n);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<FiniteAlgebra> out;
  for (const auto& h : hs) out.push_back(to_connexive(h));
  return cache.emplace(n, std::move(out)).first->second;
}

/// The n-element chain with the connexive Goedel arrow.
inline FiniteAlgebra godel_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  std::vector<std::vector<int>> leq(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = i <= j ? 1 : 0;
  FiniteAlgebra L = detail::lattice_from_leq(leq);
  auto neg = [&L](Elem a) { return a == L.zero() ? L.one() : L.zero(); };
  return L.with_arrow([&](Elem a, Elem b) { return (L.leq(a, b) && neg(a) == neg(b)) ? L.one() : L.meet(a, b); });
}

}  // namespace chl
