#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chl/formula.hpp"

namespace chl {

/// Raised on malformed input; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

namespace detail {

enum class Tok { lparen, rparen, tilde, amp, bar, carrow, harrow, iff, zero, one, ident, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto two = s.substr(i, 2);
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::iff, "<->", start});
      i += 3;
    } else if (two == "->") {
      out.push_back({Tok::carrow, "->", start});
      i += 2;
    } else if (two == "=>") {
      out.push_back({Tok::harrow, "=>", start});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::tilde, "~", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::amp, "&", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::bar, "|", start});
      ++i;
    } else if (c == '0') {
      out.push_back({Tok::zero, "0", start});
      ++i;
    } else if (c == '1') {
      out.push_back({Tok::one, "1", start});
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

  Formula parse_all() {
    Formula f = iff();
    if (peek().kind != Tok::end) throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  Formula iff() {
    Formula f = arrow();
    while (peek().kind == Tok::iff) {
      take();
      Formula g = arrow();
      f = Formula::conj(Formula::carrow(f, g), Formula::carrow(g, f));
    }
    return f;
  }

  Formula arrow() {
    Formula f = disj();
    if (peek().kind == Tok::carrow || peek().kind == Tok::harrow) {
      Op op = take().kind == Tok::carrow ? Op::carrow : Op::harrow;
      return Formula::binary(op, f, arrow());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::bar) {
      take();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = neg();
    while (peek().kind == Tok::amp) {
      take();
      f = Formula::conj(f, neg());
    }
    return f;
  }

  Formula neg() {
    if (peek().kind == Tok::tilde) {
      take();
      return Formula::neg(neg());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::zero:
        return Formula::zero();
      case Tok::one:
        return Formula::one();
      case Tok::ident:
        return Formula::var(t.text);
      case Tok::lparen: {
        Formula f = iff();
        if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        take();
        return f;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

inline int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::var:
    case Op::zero:
    case Op::one:
      return 5;
    case Op::conj:
      return 3;
    case Op::disj:
      return 2;
    case Op::carrow:
      return f.is_neg() ? 4 : 1;
    case Op::harrow:
      return 1;
  }
  return 0;
}

inline void render_into(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, int needed) {
    if (precedence(c) < needed) {
      out += '(';
      render_into(c, out);
      out += ')';
    } else {
      render_into(c, out);
    }
  };
  switch (f.op()) {
    case Op::var:
    case Op::zero:
    case Op::one:
      out += f.name();
      return;
    case Op::conj:
      child(f.left(), 3);
      out += " & ";
      child(f.right(), 4);
      return;
    case Op::disj:
      child(f.left(), 2);
      out += " | ";
      child(f.right(), 3);
      return;
    case Op::carrow:
      if (f.is_neg()) {
        out += '~';
        child(f.left(), 4);
        return;
      }
      [[fallthrough]];
    case Op::harrow:
      child(f.left(), 2);
      out += f.op() == Op::carrow ? " -> " : " => ";
      child(f.right(), 1);
      return;
  }
}

}  // namespace detail

/// Parses the ASCII surface syntax. `~a` and `a <-> b` are expanded on input.
inline Formula parse_formula(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Renders with minimal parentheses; `a -> 0` prints as `~a`.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

inline Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma) {
  switch (f.op()) {
    case Op::var: {
      auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case Op::zero:
    case Op::one:
      return f;
    default:
      return Formula::binary(f.op(), substitute(f.left(), sigma), substitute(f.right(), sigma));
  }
}

/// Rewrites every `a => b` into `a -> (a & b)`.
inline Formula expand_heyting(const Formula& f) {
  if (f.is_atomic()) return f;
  Formula l = expand_heyting(f.left());
  Formula r = expand_heyting(f.right());
  if (f.op() == Op::harrow) return Formula::carrow(l, Formula::conj(l, r));
  if (l.same_node(f.left()) && r.same_node(f.right())) return f;
  return Formula::binary(f.op(), l, r);
}

/// All formulas of depth at most `max_depth` over `vars`, 0 and 1 built with
/// the given binary connectives. Ordered by depth, then connective, then
/// operands in generation order.
inline std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars, int max_depth,
                                               const std::vector<Op>& ops = {Op::conj, Op::disj, Op::carrow}) {
  std::vector<Formula> all;
  for (const auto& v : vars) all.push_back(Formula::var(v));
  all.push_back(Formula::zero());
  all.push_back(Formula::one());
  std::size_t prev_begin = 0;
  for (int d = 1; d <= max_depth; ++d) {
    const std::size_t upto = all.size();
    std::vector<Formula> layer;
    for (Op op : ops) {
      for (std::size_t i = 0; i < upto; ++i) {
        for (std::size_t j = 0; j < upto; ++j) {
          if (i < prev_begin && j < prev_begin) continue;
          layer.push_back(Formula::binary(op, all[i], all[j]));
        }
      }
    }
    prev_begin = upto;
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

}  // namespace chl
