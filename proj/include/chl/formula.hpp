#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace chl {

/// Connectives of the combined language. `carrow` is the connexive arrow,
/// `harrow` the Heyting arrow.
enum class Op : std::uint8_t { var, zero, one, conj, disj, carrow, harrow };

namespace detail {
struct Node;
}

/// Immutable, structurally shared formula.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula zero();
  static Formula one();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula carrow(Formula a, Formula b);
  static Formula harrow(Formula a, Formula b);
  static Formula binary(Op op, Formula a, Formula b);
  /// Connexive negation a -> 0.
  static Formula neg(Formula a) { return carrow(std::move(a), zero()); }

  Op op() const;
  const std::string& name() const;
  const Formula& left() const;
  const Formula& right() const;
  std::size_t hash() const;
  int depth() const;
  std::size_t size() const;

  bool is_binary() const { return op() >= Op::conj; }
  bool is_atomic() const { return !is_binary(); }
  bool is_neg() const { return op() == Op::carrow && right().op() == Op::zero; }
  bool same_node(const Formula& o) const { return node_ == o.node_; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  friend struct detail::Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

namespace detail {
struct Node {
  Op op{};
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t hash = 0;
  int depth = 0;
  std::size_t size = 1;

  static Formula make_atom(Op op, std::string name) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->name = std::move(name);
    n->hash = std::hash<std::string>{}(n->name) * 31u + static_cast<std::size_t>(op) + 0x9e3779b9u;
    return Formula(std::move(n));
  }

  static Formula make_binary(Op op, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    std::size_t h = static_cast<std::size_t>(op) * 0x100000001b3ull;
    h ^= a.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= b.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    n->hash = h;
    n->depth = 1 + std::max(a.depth(), b.depth());
    n->size = 1 + a.size() + b.size();
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return Formula(std::move(n));
  }
};
}  // namespace detail

inline Formula Formula::var(std::string name) { return detail::Node::make_atom(Op::var, std::move(name)); }

inline Formula Formula::zero() {
  static const Formula z = detail::Node::make_atom(Op::zero, "0");
  return z;
}

inline Formula Formula::one() {
  static const Formula o = detail::Node::make_atom(Op::one, "1");
  return o;
}

inline Formula Formula::binary(Op op, Formula a, Formula b) {
  return detail::Node::make_binary(op, std::move(a), std::move(b));
}
inline Formula Formula::conj(Formula a, Formula b) { return binary(Op::conj, std::move(a), std::move(b)); }
inline Formula Formula::disj(Formula a, Formula b) { return binary(Op::disj, std::move(a), std::move(b)); }
inline Formula Formula::carrow(Formula a, Formula b) { return binary(Op::carrow, std::move(a), std::move(b)); }
inline Formula Formula::harrow(Formula a, Formula b) { return binary(Op::harrow, std::move(a), std::move(b)); }

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::left() const { return node_->lhs; }
inline const Formula& Formula::right() const { return node_->rhs; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline int Formula::depth() const { return node_->depth; }
inline std::size_t Formula::size() const { return node_->size; }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
  if (a.is_atomic()) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

inline std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (a.is_atomic()) {
    int c = a.name().compare(b.name());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Sorted, duplicate-free collection of formulas.
using FormulaSet = std::vector<Formula>;

inline FormulaSet make_set(std::vector<Formula> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const FormulaSet& s, const Formula& f) { return std::binary_search(s.begin(), s.end(), f); }

inline FormulaSet set_insert(FormulaSet s, const Formula& f) {
  auto it = std::lower_bound(s.begin(), s.end(), f);
  if (it == s.end() || !(*it == f)) s.insert(it, f);
  return s;
}

inline FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline FormulaSet set_intersection(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline FormulaSet set_difference(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool set_includes(const FormulaSet& big, const FormulaSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Variable names occurring in `f`, sorted.
inline std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.op() == Op::var) {
      out.push_back(g.name());
    } else if (g.is_binary()) {
      stack.push_back(g.left());
      stack.push_back(g.right());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::string> variables(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) {
    auto v = variables(f);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Subformulas of `f` including `f`, as a set.
inline FormulaSet subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    out.push_back(g);
    if (g.is_binary()) {
      stack.push_back(g.left());
      stack.push_back(g.right());
    }
  }
  return make_set(std::move(out));
}

inline bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  return f.is_binary() && (contains_op(f.left(), op) || contains_op(f.right(), op));
}

}  // namespace chl

template <>
struct std::hash<chl::Formula> {
  std::size_t operator()(const chl::Formula& f) const noexcept { return f.hash(); }
};
