#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chl/algebra.hpp"

namespace chl {

/// Subset of an algebra's carrier as a bitmask (carriers have at most 64
/// elements).
using ElementSet = std::uint64_t;

inline ElementSet singleton(Elem a) { return ElementSet{1} << a; }
inline bool member(ElementSet s, Elem a) { return (s >> a) & 1; }
inline ElementSet full_set(const FiniteAlgebra& A) {
  return A.size() == 64 ? ~ElementSet{0} : (ElementSet{1} << A.size()) - 1;
}
inline std::vector<Elem> elements_of(ElementSet s) {
  std::vector<Elem> out;
  for (Elem a = 0; s != 0; ++a, s >>= 1)
    if (s & 1) out.push_back(a);
  return out;
}

inline std::string render_set(const FiniteAlgebra& A, ElementSet s) {
  std::string out = "{";
  for (Elem a : elements_of(s)) {
    if (out.size() > 1) out += ", ";
    out += A.name(a);
  }
  return out + "}";
}

inline ElementSet up_set(const FiniteAlgebra& A, Elem a) {
  ElementSet s = 0;
  for (Elem b = 0; b < A.size(); ++b)
    if (A.leq(a, b)) s |= singleton(b);
  return s;
}

inline bool is_filter(const FiniteAlgebra& A, ElementSet s) {
  if (s == 0) return false;
  for (Elem a : elements_of(s)) {
    for (Elem b = 0; b < A.size(); ++b) {
      if (A.leq(a, b) && !member(s, b)) return false;
      if (member(s, b) && !member(s, A.meet(a, b))) return false;
    }
  }
  return true;
}

/// Smallest lattice filter containing `c`; Fg of the empty set is {1}.
inline ElementSet filter_generated(const FiniteAlgebra& A, ElementSet c) {
  Elem m = A.one();
  for (Elem a : elements_of(c)) m = A.meet(m, a);
  return up_set(A, m);
}

/// Every lattice filter; in a finite lattice these are the principal ones,
/// listed by generator index.
inline std::vector<ElementSet> all_filters(const FiniteAlgebra& A) {
  std::vector<ElementSet> out;
  for (Elem a = 0; a < A.size(); ++a) out.push_back(up_set(A, a));
  return out;
}

/// Equivalence relation as block labels; labels are numbered in order of
/// first occurrence so equal partitions compare equal.
struct Congruence {
  std::vector<int> block;

  bool related(Elem a, Elem b) const { return block[a] == block[b]; }
  int block_count() const {
    int m = 0;
    for (int b : block) m = std::max(m, b + 1);
    return m;
  }
  std::vector<std::vector<Elem>> blocks() const {
    std::vector<std::vector<Elem>> out(block_count());
    for (Elem a = 0; a < static_cast<Elem>(block.size()); ++a) out[block[a]].push_back(a);
    return out;
  }
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

inline Congruence canonical_partition(const std::vector<int>& labels) {
  Congruence c;
  std::vector<int> remap;
  std::vector<int> seen;
  for (int l : labels) {
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      seen.push_back(l);
      c.block.push_back(static_cast<int>(seen.size()) - 1);
    } else {
      c.block.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  return c;
}

inline bool is_congruence(const FiniteAlgebra& A, const Congruence& t) {
  const int n = A.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (!t.related(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!t.related(A.meet(a, c), A.meet(b, c)) || !t.related(A.join(a, c), A.join(b, c)) ||
            !t.related(A.arrow(a, c), A.arrow(b, c)) || !t.related(A.arrow(c, a), A.arrow(c, b)))
          return false;
      }
    }
  return true;
}

/// Theta(F): x ~ y iff x -> y and y -> x lie in F. Throws std::logic_error if
/// the relation is not a congruence.
inline Congruence congruence_of_filter(const FiniteAlgebra& A, ElementSet f) {
  const int n = A.size();
  auto rel = [&](Elem x, Elem y) { return member(f, A.arrow(x, y)) && member(f, A.arrow(y, x)); };
  std::vector<int> labels(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (!rel(x, x)) throw std::logic_error("Theta(F) is not reflexive");
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (rel(x, y) && rel(y, z) && !rel(x, z)) throw std::logic_error("Theta(F) is not transitive");
  }
  for (Elem x = 0; x < n; ++x) {
    if (labels[x] >= 0) continue;
    for (Elem y = x; y < n; ++y)
      if (rel(x, y)) labels[y] = x;
  }
  Congruence t = canonical_partition(labels);
  if (!is_congruence(A, t)) throw std::logic_error("Theta(F) is not compatible with the operations");
  return t;
}

/// The congruence class of 1.
inline ElementSet class_of_one(const FiniteAlgebra& A, const Congruence& t) {
  ElementSet s = 0;
  for (Elem a = 0; a < A.size(); ++a)
    if (t.related(a, A.one())) s |= singleton(a);
  return s;
}

/// Every congruence, by brute force over set partitions.
inline std::vector<Congruence> all_congruences(const FiniteAlgebra& A) {
  const int n = A.size();
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> maxes(n, 0);
  while (true) {
    Congruence c{rgs};
    if (is_congruence(A, c)) out.push_back(c);
    int i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i <= 0) break;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
  return out;
}

inline Elem biconditional(const FiniteAlgebra& A, Elem a, Elem b) { return A.meet(A.arrow(a, b), A.arrow(b, a)); }

/// theta(a, b) computed as Theta(Fg({a <-> b})).
inline Congruence principal_congruence(const FiniteAlgebra& A, Elem a, Elem b) {
  return congruence_of_filter(A, filter_generated(A, singleton(biconditional(A, a, b))));
}

/// The quaternary deductive term
/// ((w -> (e & w)) -> (e & z)) & (((e & z) -> (e & w)) -> w), e = x <-> y.
inline Elem qd_value(const FiniteAlgebra& A, Elem a, Elem b, Elem c, Elem d) {
  const Elem e = biconditional(A, a, b);
  const Elem ec = A.meet(e, c);
  const Elem ed = A.meet(e, d);
  return A.meet(A.arrow(A.arrow(d, ed), ec), A.arrow(A.arrow(ec, ed), d));
}

inline const Formula& qd_term() {
  static const Formula f = parse_formula(
      "((w -> ((x <-> y) & w)) -> ((x <-> y) & z)) & ((((x <-> y) & z) -> ((x <-> y) & w)) -> w)");
  return f;
}

namespace detail {

/// Algebra on `carrier` with the order of A restricted, the given arrow and
/// optional meet/join tables cross-checked against the restricted order.
template <class ArrowFn, class MeetFn, class JoinFn>
FiniteAlgebra restricted_algebra(const FiniteAlgebra& A, ElementSet carrier, ArrowFn arrow, MeetFn meet, JoinFn join) {
  auto elems = elements_of(carrier);
  const int m = static_cast<int>(elems.size());
  auto index_of = [&](Elem x) {
    auto it = std::find(elems.begin(), elems.end(), x);
    if (it == elems.end()) throw std::logic_error("operation leaves the carrier");
    return static_cast<Elem>(it - elems.begin());
  };
  AlgebraTables t;
  t.leq.assign(m, std::vector<int>(m));
  t.arrow.assign(m, std::vector<Elem>(m));
  std::vector<std::vector<Elem>> mt(m, std::vector<Elem>(m)), jn(m, std::vector<Elem>(m));
  for (int i = 0; i < m; ++i) {
    t.names.push_back(A.name(elems[i]));
    for (int j = 0; j < m; ++j) {
      t.leq[i][j] = A.leq(elems[i], elems[j]) ? 1 : 0;
      t.arrow[i][j] = index_of(arrow(elems[i], elems[j]));
      mt[i][j] = index_of(meet(elems[i], elems[j]));
      jn[i][j] = index_of(join(elems[i], elems[j]));
    }
  }
  t.meet = mt;
  t.join = jn;
  t.zero = index_of(A.zero());
  t.one = index_of(A.one());
  try {
    return validate_algebra(t);
  } catch (const InvalidAlgebra& e) {
    throw std::logic_error(std::string("restricted structure is not a lattice: ") + e.what());
  }
}

}  // namespace detail

struct Classification {
  bool boolean = false;
  bool goedel = false;
};

/// Boolean and Goedel membership. The Boolean flag is ~~x = x; the equivalent
/// symmetric-arrow conditions are cross-checked and a disagreement throws
/// std::logic_error.
inline Classification classify_subvariety(const FiniteAlgebra& A) {
  if (!A.is_cha()) throw InvalidAlgebra("classification expects a connexive Heyting algebra");
  Classification c;
  c.boolean = !check_identity(A, equation("~~x", "x")).has_value();
  const bool material = !check_identity(A, equation("x -> y", "(~x | y) & (~y | x)")).has_value();
  const bool symmetric = !check_identity(A, equation("x -> y", "y -> x")).has_value();
  const bool sym_one = !check_identity(A, equation("(x -> y) -> (y -> x)", "1")).has_value();
  if (material != c.boolean || symmetric != c.boolean || sym_one != c.boolean)
    throw std::logic_error("Boolean characterisations disagree");
  c.goedel = !check_identity(A, goedel_identity()).has_value();
  return c;
}

/// The double-negation image {~~a} with x & y, ~~(x | y) and the original
/// arrow. Verifies that ~~ preserves &, ->, 0, 1 and that the image is Boolean.
inline FiniteAlgebra double_negation_image(const FiniteAlgebra& A) {
  if (!A.is_cha()) throw InvalidAlgebra("double-negation image expects a connexive Heyting algebra");
  ElementSet carrier = 0;
  for (Elem a = 0; a < A.size(); ++a) carrier |= singleton(A.neg(A.neg(a)));
  FiniteAlgebra out = detail::restricted_algebra(
      A, carrier, [&](Elem x, Elem y) { return A.arrow(x, y); }, [&](Elem x, Elem y) { return A.meet(x, y); },
      [&](Elem x, Elem y) { return A.neg(A.neg(A.join(x, y))); });
  auto nn = [&](Elem x) { return A.neg(A.neg(x)); };
  if (nn(A.zero()) != A.zero() || nn(A.one()) != A.one()) throw std::logic_error("~~ does not fix the bounds");
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b = 0; b < A.size(); ++b)
      if (nn(A.meet(a, b)) != A.meet(nn(a), nn(b)) || nn(A.arrow(a, b)) != A.arrow(nn(a), nn(b)))
        throw std::logic_error("~~ is not a morphism for & and ->");
  if (!out.is_cha() || !classify_subvariety(out).boolean) throw std::logic_error("double-negation image is not Boolean");
  return out;
}

/// Subalgebra of closed and complemented elements.
inline FiniteAlgebra central_elements(const FiniteAlgebra& A) {
  if (!A.is_cha()) throw InvalidAlgebra("central elements expect a connexive Heyting algebra");
  ElementSet carrier = 0;
  for (Elem x = 0; x < A.size(); ++x) {
    if (A.neg(A.neg(x)) != x) continue;
    for (Elem y = 0; y < A.size(); ++y)
      if (A.meet(x, y) == A.zero() && A.join(x, y) == A.one()) {
        carrier |= singleton(x);
        break;
      }
  }
  FiniteAlgebra out = detail::restricted_algebra(
      A, carrier, [&](Elem x, Elem y) { return A.arrow(x, y); }, [&](Elem x, Elem y) { return A.meet(x, y); },
      [&](Elem x, Elem y) { return A.join(x, y); });
  if (!out.is_cha() || !classify_subvariety(out).boolean) throw std::logic_error("central elements are not Boolean");
  return out;
}

}  // namespace chl
