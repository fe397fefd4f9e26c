#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chl/algebra.hpp"

// Brute-force reference computations, written independently of the library
// algorithms they check.
namespace chl::oracle {

using Order = std::vector<std::vector<int>>;

inline std::optional<int> join_in(const Order& le, int a, int b) {
  const int n = static_cast<int>(le.size());
  std::optional<int> best;
  for (int c = 0; c < n; ++c) {
    if (!le[a][c] || !le[b][c]) continue;
    bool least = true;
    for (int d = 0; d < n; ++d)
      if (le[a][d] && le[b][d] && !le[c][d]) least = false;
    if (least) best = c;
  }
  return best;
}

inline std::optional<int> meet_in(const Order& le, int a, int b) {
  const int n = static_cast<int>(le.size());
  std::optional<int> best;
  for (int c = 0; c < n; ++c) {
    if (!le[c][a] || !le[c][b]) continue;
    bool greatest = true;
    for (int d = 0; d < n; ++d)
      if (le[d][a] && le[d][b] && !le[d][c]) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

inline bool is_distributive_lattice(const Order& le) {
  const int n = static_cast<int>(le.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n)), j(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto x = meet_in(le, a, b);
      auto y = join_in(le, a, b);
      if (!x || !y) return false;
      m[a][b] = *x;
      j[a][b] = *y;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m[a][j[b][c]] != j[m[a][b]][m[a][c]]) return false;
  return true;
}

/// Canonical string of an order under all relabellings.
inline std::string canonical(const Order& le) {
  const int n = static_cast<int>(le.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s += le[perm[a]][perm[b]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Distributive lattices with n elements up to isomorphism, by enumerating
/// every relation on n points.
inline std::size_t count_distributive_lattices(int n) {
  if (n == 1) return 1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.push_back({a, b});
  std::set<std::string> seen;
  const std::size_t total = std::size_t{1} << pairs.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    Order le(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a) le[a][a] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) le[pairs[k].first][pairs[k].second] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && le[a][b] && le[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
      }
    if (!ok || !is_distributive_lattice(le)) continue;
    seen.insert(canonical(le));
  }
  return seen.size();
}

inline Elem heyting_arrow(const FiniteAlgebra& A, Elem a, Elem b) {
  std::optional<Elem> best;
  for (Elem c = 0; c < A.size(); ++c) {
    if (!A.leq(A.meet(a, c), b)) continue;
    if (!best || A.leq(*best, c)) best = c;
  }
  return *best;
}

/// C1-C5 by direct table lookups.
inline bool satisfies_c1_to_c5(const FiniteAlgebra& A) {
  const int n = A.size();
  const Elem one = A.one();
  auto ar = [&](Elem x, Elem y) { return A.arrow(x, y); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (ar(ar(x, y), A.neg(ar(x, A.neg(y)))) != one) return false;
      if (A.meet(x, ar(x, y)) != A.meet(x, y)) return false;
      for (Elem z = 0; z < n; ++z) {
        if (ar(ar(x, y), ar(ar(y, z), ar(x, z))) != one) return false;
        if (!A.leq(ar(x, y), ar(A.meet(z, x), A.meet(z, y)))) return false;
        if (!A.leq(ar(x, y), ar(A.join(z, x), A.join(z, y)))) return false;
      }
    }
  return true;
}

inline bool isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  const int n = A.size();
  if (B.size() != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = perm[A.zero()] == B.zero() && perm[A.one()] == B.one();
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        ok = A.leq(a, b) == B.leq(perm[a], perm[b]) && perm[A.arrow(a, b)] == B.arrow(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace chl::oracle
