#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "contig/laurent.hpp"
#include "contig/mpoly.hpp"

namespace contig {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

constexpr int kMaxExponent = 1'000'000;

/// Recursive-descent parser for the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' signed-int)?
///   base   := rational-literal | identifier | '(' expr ')'
/// Whitespace is insignificant. A leading minus on the first term is
/// accepted as a convenience.
class ExprParser {
 public:
  ExprParser(const std::string& text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  LaurentPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    LaurentPoly b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long e = signed_int();
      return b.pow(check_exponent(e));
    }
    return b;
  }

  LaurentPoly base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError("expected number, variable or '('", pos_);
  }

  LaurentPoly literal() {
    std::size_t start = pos_;
    std::string digits = read_digits();
    std::string den;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator digits", pos_);
      den = read_digits();
    }
    try {
      Rational r(den.empty() ? digits : digits + "/" + den);
      return LaurentPoly(ring_, r);
    } catch (const std::exception&) {
      throw ParseError("invalid rational literal", start);
    }
  }

  LaurentPoly identifier() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    int idx = ring_->index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    return LaurentPoly::variable(ring_, idx);
  }

  long signed_int() {
    skip_ws();
    long sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer exponent", pos_);
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 7) throw ParseError("exponent overflow", start);
    return sign * std::stol(digits);
  }

  int check_exponent(long e) {
    if (e > kMaxExponent || e < -kMaxExponent)
      throw ParseError("exponent overflow", pos_);
    return static_cast<int>(e);
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a Laurent-polynomial expression over the given torus variables.
inline LaurentPoly parse_laurent(const std::string& text, const RingPtr& ring) {
  return detail::ExprParser(text, ring).parse();
}

inline LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars) {
  return parse_laurent(text, make_ring(vars));
}

/// Parse a polynomial in the parameter variables. Negative exponents are
/// rejected here: the parameter ring is an honest polynomial ring.
inline MPoly parse_mpoly(const std::string& text, const RingPtr& ring) {
  LaurentPoly p = detail::ExprParser(text, ring).parse();
  MPoly out(ring);
  for (auto& [e, c] : p.terms()) {
    for (int x : e)
      if (x < 0) throw ParseError("negative exponent in polynomial context", 0);
    out.add_term(e, c);
  }
  return out;
}

/// Convenience for fixture values: "num" or "num / den" over the given ring.
inline RatFun parse_ratfun(const std::string& text, const RingPtr& ring) {
  // Split at a top-level '/': one that is not inside parentheses and not part
  // of a rational literal (digit '/' digit with no space is consumed by the
  // literal lexer, so a standalone " / " separates num and den).
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      bool literal_slash = i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
                           i + 1 < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[i + 1]));
      if (!literal_slash)
        return RatFun(parse_mpoly(text.substr(0, i), ring),
                      parse_mpoly(text.substr(i + 1), ring));
    }
  }
  return RatFun(parse_mpoly(text, ring));
}

}  // namespace contig
