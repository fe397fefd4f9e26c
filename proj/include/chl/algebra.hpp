#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chl/formula.hpp"
#include "chl/syntax.hpp"

namespace chl {

using Elem = int;

class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw table description of a finite algebra. `leq[a][b]` reads a <= b and
/// `arrow[a][b]` is the index of a -> b.
struct AlgebraTables {
  std::vector<std::string> names;
  std::vector<std::vector<int>> leq;
  std::vector<std::vector<Elem>> arrow;
  Elem zero = 0;
  Elem one = 0;
  std::optional<std::vector<std::vector<Elem>>> meet;
  std::optional<std::vector<std::vector<Elem>>> join;
};

/// Finite algebra of the language {&, |, ->, 0, 1}. Immutable once built;
/// profile flags are computed at construction.
class FiniteAlgebra {
 public:
  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem a) const { return names_[a]; }
  std::optional<Elem> element(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == label) return i;
    return std::nullopt;
  }

  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem arrow(Elem a, Elem b) const { return arrow_[a * n_ + b]; }
  Elem neg(Elem a) const { return arrow(a, zero_); }
  /// a => b read as a -> (a & b).
  Elem harrow(Elem a, Elem b) const { return arrow(a, meet(a, b)); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  bool is_distributive_lattice() const { return distributive_; }
  bool is_semi_heyting() const { return semi_heyting_; }
  bool is_cha() const { return cha_; }
  bool is_heyting() const { return heyting_; }

  AlgebraTables tables() const {
    AlgebraTables t;
    t.names = names_;
    t.zero = zero_;
    t.one = one_;
    t.leq.assign(n_, std::vector<int>(n_));
    t.arrow.assign(n_, std::vector<Elem>(n_));
    std::vector<std::vector<Elem>> m(n_, std::vector<Elem>(n_)), j(n_, std::vector<Elem>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        t.leq[a][b] = leq(a, b) ? 1 : 0;
        t.arrow[a][b] = arrow(a, b);
        m[a][b] = meet(a, b);
        j[a][b] = join(a, b);
      }
    t.meet = std::move(m);
    t.join = std::move(j);
    return t;
  }

  /// Same lattice, new arrow table.
  FiniteAlgebra with_arrow(const std::function<Elem(Elem, Elem)>& f) const {
    FiniteAlgebra out = *this;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) out.arrow_[a * n_ + b] = f(a, b);
    out.compute_profiles();
    return out;
  }

  /// Table-exact equality, labels included.
  friend bool operator==(const FiniteAlgebra& x, const FiniteAlgebra& y) {
    return x.n_ == y.n_ && x.names_ == y.names_ && x.leq_ == y.leq_ && x.arrow_ == y.arrow_ && x.zero_ == y.zero_ &&
           x.one_ == y.one_;
  }

  friend FiniteAlgebra validate_algebra(const AlgebraTables& t);

 private:
  FiniteAlgebra() = default;

  void compute_profiles();

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Elem> meet_, join_, arrow_;
  Elem zero_ = 0, one_ = 0;
  bool distributive_ = false, semi_heyting_ = false, cha_ = false, heyting_ = false;
};

/// Checks the tables and returns the algebra; throws InvalidAlgebra.
inline FiniteAlgebra validate_algebra(const AlgebraTables& t) {
  const int n = static_cast<int>(t.leq.size());
  if (n < 1) throw InvalidAlgebra("algebra must have at least one element");
  if (n > 64) throw InvalidAlgebra("algebra too large (at most 64 elements)");
  if (!t.names.empty() && static_cast<int>(t.names.size()) != n) throw InvalidAlgebra("names length differs from size");
  if (static_cast<int>(t.arrow.size()) != n) throw InvalidAlgebra("arrow table has wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t.leq[i].size()) != n) throw InvalidAlgebra("leq row " + std::to_string(i) + " has wrong length");
    if (static_cast<int>(t.arrow[i].size()) != n)
      throw InvalidAlgebra("arrow row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      if (t.leq[i][j] != 0 && t.leq[i][j] != 1) throw InvalidAlgebra("leq entries must be 0 or 1");
      if (t.arrow[i][j] < 0 || t.arrow[i][j] >= n) throw InvalidAlgebra("arrow entry out of range");
    }
  }
  if (t.zero < 0 || t.zero >= n || t.one < 0 || t.one >= n) throw InvalidAlgebra("zero/one out of range");

  FiniteAlgebra A;
  A.n_ = n;
  if (t.names.empty()) {
    for (int i = 0; i < n; ++i) A.names_.push_back(std::to_string(i));
  } else {
    A.names_ = t.names;
  }
  A.leq_.assign(n * n, 0);
  A.arrow_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A.leq_[i * n + j] = static_cast<char>(t.leq[i][j]);
      A.arrow_[i * n + j] = t.arrow[i][j];
    }
  A.zero_ = t.zero;
  A.one_ = t.one;

  for (int a = 0; a < n; ++a) {
    if (!A.leq(a, a)) throw InvalidAlgebra("leq is not reflexive at " + A.names_[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && A.leq(a, b) && A.leq(b, a)) throw InvalidAlgebra("leq is not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (A.leq(a, b) && A.leq(b, c) && !A.leq(a, c)) throw InvalidAlgebra("leq is not transitive");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!A.leq(A.zero_, a)) throw InvalidAlgebra("zero is not the bottom element");
    if (!A.leq(a, A.one_)) throw InvalidAlgebra("one is not the top element");
  }

  A.meet_.assign(n * n, -1);
  A.join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (A.leq(c, a) && A.leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (A.leq(d, a) && A.leq(d, b) && !A.leq(d, c)) greatest = false;
          if (greatest) A.meet_[a * n + b] = c;
        }
        if (A.leq(a, c) && A.leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (A.leq(a, d) && A.leq(b, d) && !A.leq(c, d)) least = false;
          if (least) A.join_[a * n + b] = c;
        }
      }
      if (A.meet_[a * n + b] < 0) throw InvalidAlgebra("no meet for " + A.names_[a] + ", " + A.names_[b]);
      if (A.join_[a * n + b] < 0) throw InvalidAlgebra("no join for " + A.names_[a] + ", " + A.names_[b]);
    }
  auto cross_check = [&](const std::optional<std::vector<std::vector<Elem>>>& given, const std::vector<Elem>& computed,
                         const char* what) {
    if (!given) return;
    if (static_cast<int>(given->size()) != n) throw InvalidAlgebra(std::string(what) + " table has wrong size");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>((*given)[a].size()) != n) throw InvalidAlgebra(std::string(what) + " table has wrong size");
      for (int b = 0; b < n; ++b)
        if ((*given)[a][b] != computed[a * n + b])
          throw InvalidAlgebra(std::string(what) + " table disagrees with leq at " + A.names_[a] + ", " + A.names_[b]);
    }
  };
  cross_check(t.meet, A.meet_, "meet");
  cross_check(t.join, A.join_, "join");
  A.compute_profiles();
  return A;
}

inline void FiniteAlgebra::compute_profiles() {
  const int n = n_;
  distributive_ = true;
  for (int a = 0; a < n && distributive_; ++a)
    for (int b = 0; b < n && distributive_; ++b)
      for (int c = 0; c < n && distributive_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) distributive_ = false;

  auto le = [this](Elem a, Elem b) { return leq(a, b); };
  bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true, c6 = true, c7 = true, res = true;
  for (int x = 0; x < n; ++x) {
    if (arrow(x, x) != one_) c7 = false;
    for (int y = 0; y < n; ++y) {
      const Elem xy = arrow(x, y);
      if (arrow(xy, neg(arrow(x, neg(y)))) != one_) c2 = false;
      if (meet(x, xy) != meet(x, y)) c3 = false;
      for (int z = 0; z < n; ++z) {
        if (arrow(xy, arrow(arrow(y, z), arrow(x, z))) != one_) c1 = false;
        if (!le(xy, arrow(meet(z, x), meet(z, y)))) c4 = false;
        if (!le(xy, arrow(join(z, x), join(z, y)))) c5 = false;
        if (meet(x, arrow(y, z)) != meet(x, arrow(meet(x, y), meet(x, z)))) c6 = false;
        if (le(meet(x, y), z) != le(x, arrow(y, z))) res = false;
      }
    }
  }
  semi_heyting_ = distributive_ && c3 && c6 && c7;
  cha_ = distributive_ && c1 && c2 && c3 && c4 && c5;
  heyting_ = distributive_ && res;
}

/// Assignment of elements to variable names.
using Valuation = std::map<std::string, Elem>;

inline Elem evaluate(const FiniteAlgebra& A, const Formula& f, const Valuation& v) {
  switch (f.op()) {
    case Op::var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw std::invalid_argument("unbound variable '" + f.name() + "'");
      if (it->second < 0 || it->second >= A.size()) throw std::invalid_argument("valuation element out of range");
      return it->second;
    }
    case Op::zero:
      return A.zero();
    case Op::one:
      return A.one();
    case Op::conj:
      return A.meet(evaluate(A, f.left(), v), evaluate(A, f.right(), v));
    case Op::disj:
      return A.join(evaluate(A, f.left(), v), evaluate(A, f.right(), v));
    case Op::carrow:
      return A.arrow(evaluate(A, f.left(), v), evaluate(A, f.right(), v));
    case Op::harrow:
      return A.harrow(evaluate(A, f.left(), v), evaluate(A, f.right(), v));
  }
  return A.zero();
}

/// Formula flattened to straight-line code over a fixed variable order, for
/// exhaustive evaluation loops. Shared subterms are evaluated once.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& vars) {
    std::map<Formula, int> seen;
    root_ = emit(f, vars, seen);
  }

  Elem eval(const FiniteAlgebra& A, const Elem* vals) const {
    thread_local std::vector<Elem> regs;
    regs.resize(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.op) {
        case Op::var:
          regs[i] = vals[in.a];
          break;
        case Op::zero:
          regs[i] = A.zero();
          break;
        case Op::one:
          regs[i] = A.one();
          break;
        case Op::conj:
          regs[i] = A.meet(regs[in.a], regs[in.b]);
          break;
        case Op::disj:
          regs[i] = A.join(regs[in.a], regs[in.b]);
          break;
        case Op::carrow:
          regs[i] = A.arrow(regs[in.a], regs[in.b]);
          break;
        case Op::harrow:
          regs[i] = A.harrow(regs[in.a], regs[in.b]);
          break;
      }
    }
    return regs[root_];
  }

 private:
  struct Instr {
    Op op;
    int a = 0;
    int b = 0;
  };

  int emit(const Formula& f, const std::vector<std::string>& vars, std::map<Formula, int>& seen) {
    if (auto it = seen.find(f); it != seen.end()) return it->second;
    Instr in{f.op()};
    if (f.op() == Op::var) {
      auto pos = std::find(vars.begin(), vars.end(), f.name());
      if (pos == vars.end()) throw std::invalid_argument("unbound variable '" + f.name() + "'");
      in.a = static_cast<int>(pos - vars.begin());
    } else if (f.is_binary()) {
      in.a = emit(f.left(), vars, seen);
      in.b = emit(f.right(), vars, seen);
    }
    code_.push_back(in);
    int idx = static_cast<int>(code_.size()) - 1;
    seen.emplace(f, idx);
    return idx;
  }

  std::vector<Instr> code_;
  int root_ = 0;
};

/// Calls `fn` on every assignment of k elements of an n-element algebra, in
/// mixed-radix order with the first position most significant. Stops early
/// when `fn` returns false; returns false in that case.
template <class Fn>
bool for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<Elem> vals(k, 0);
  while (true) {
    if (!fn(static_cast<const Elem*>(vals.data()))) return false;
    int i = k - 1;
    while (i >= 0 && ++vals[i] == n) vals[i--] = 0;
    if (i < 0) return true;
  }
}

/// Universally quantified equation lhs = rhs.
struct Identity {
  Formula lhs;
  Formula rhs;
};

inline Identity equation(const std::string& lhs, const std::string& rhs) { return {parse_formula(lhs), parse_formula(rhs)}; }

/// lhs <= rhs, encoded as lhs = lhs & rhs.
inline Identity inequality(const Formula& lhs, const Formula& rhs) { return {lhs, Formula::conj(lhs, rhs)}; }
inline Identity inequality(const std::string& lhs, const std::string& rhs) {
  return inequality(parse_formula(lhs), parse_formula(rhs));
}

/// First valuation refuting the identity, or nullopt when it holds.
inline std::optional<Valuation> check_identity(const FiniteAlgebra& A, const Identity& id) {
  auto vars = variables(std::vector<Formula>{id.lhs, id.rhs});
  CompiledFormula l(id.lhs, vars), r(id.rhs, vars);
  std::optional<Valuation> witness;
  for_each_assignment(A.size(), static_cast<int>(vars.size()), [&](const Elem* v) {
    if (l.eval(A, v) == r.eval(A, v)) return true;
    Valuation w;
    for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = v[i];
    witness = std::move(w);
    return false;
  });
  return witness;
}

/// The defining identities C1-C7, in order.
inline const std::vector<std::pair<std::string, Identity>>& cha_axioms() {
  static const std::vector<std::pair<std::string, Identity>> axioms = {
      {"C1", equation("(x -> y) -> ((y -> z) -> (x -> z))", "1")},
      {"C2", equation("(x -> y) -> ~(x -> ~y)", "1")},
      {"C3", equation("x & (x -> y)", "x & y")},
      {"C4", inequality("x -> y", "(z & x) -> (z & y)")},
      {"C5", inequality("x -> y", "(z | x) -> (z | y)")},
      {"C6", equation("x & (y -> z)", "x & ((x & y) -> (x & z))")},
      {"C7", equation("x -> x", "1")},
  };
  return axioms;
}

/// Identity (G) axiomatising the connexive Goedel subvariety.
inline const Identity& goedel_identity() {
  static const Identity g = equation("(x -> (x & y)) | (y -> (x & y))", "1");
  return g;
}

inline std::string render_valuation(const FiniteAlgebra& A, const Valuation& v) {
  std::string out;
  for (const auto& [name, e] : v) {
    if (!out.empty()) out += ", ";
    out += name + "=" + A.name(e);
  }
  return out;
}

}  // namespace chl
