#include "monoproj/parse.hpp"

#include <cctype>
#include <string>

#include "monoproj/errors.hpp"

namespace monoproj {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string> &names)
      : text_(text), names_(names), nvars_(static_cast<int>(names.size())) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == text_.size())
      throw ParseError("empty polynomial", pos_);
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*'))
      acc = acc * unary();
    skip_ws();
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      throw ParseError("implicit multiplication is not allowed", pos_);
    return acc;
  }

  MultiPoly unary() {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (!peek_digit())
        throw ParseError("exponent must be a non-negative integer", at);
      const mpz_class k(digits(), 10);
      if (k > 64)
        throw ParseError("exponent too large", at);
      base = base.pow(static_cast<int>(k.get_si()));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (peek_digit())
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ == text_.size())
      throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      mpz_class den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        if (!peek_digit())
          throw ParseError("rational literal needs an integer denominator", at);
        den = mpz_class(digits(), 10);
        if (den == 0)
          throw ParseError("zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly::constant(nvars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string id(text_.substr(start, pos_ - start));
      return MultiPoly::variable(nvars_, lookup(id, start));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  int lookup(const std::string &id, std::size_t at) const {
    for (int i = 0; i < nvars_; ++i)
      if (names_[i] == id)
        return i;
    if (id.size() == 2 && id[0] == 'x' && std::isdigit(static_cast<unsigned char>(id[1]))) {
      const int k = id[1] - '0';
      if (k < nvars_)
        return k;
    }
    throw ParseError("unknown variable '" + id + "'", at);
  }

  std::string_view text_;
  const std::vector<std::string> &names_;
  int nvars_;
  std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string> &names) {
  return Parser(text, names).parse();
}

MultiPoly parse_poly(std::string_view text, int nvars) {
  return parse_poly(text, default_var_names(nvars));
}

MultiPoly parse_hypersurface(std::string_view text, int nvars) {
  MultiPoly f = parse_poly(text, nvars);
  if (f.degree() < 1)
    throw ParseError("hypersurface needs a polynomial of degree >= 1");
  if (!f.is_homogeneous())
    throw ParseError("polynomial is not homogeneous");
  return f;
}

} // namespace monoproj
