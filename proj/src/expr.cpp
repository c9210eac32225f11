#include "gwa/expr.hpp"

#include <cctype>

namespace gwa {

namespace {

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    skip();
    const std::size_t at = pos_;
    const long e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    if (neg && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) throw ParseError("integer literal too long for an exponent", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r(std::string(s_.substr(start, pos_ - start)));
      return RationalFunction(Poly(ring_, Scalar(ring_->field(), r)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const int vi = ring_->variable_index(name);
      if (vi >= 0) return RationalFunction(Poly::variable(ring_, vi));
      const auto& field = ring_->field();
      if (field->parameter_index(name) >= 0) return RationalFunction(Poly(ring_, Scalar::parameter(field, name)));
      if (name == "zeta") {
        if (field->cyclotomic_order() == 1) throw ParseError("zeta used in a field without roots of unity", start);
        return RationalFunction(Poly(ring_, Scalar::zeta(field)));
      }
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  RationalFunction r = parse_rational(text, ring);
  if (auto p = r.as_poly()) return *p;
  throw ParseError("expression '" + std::string(text) + "' is not a polynomial", 0);
}

Scalar parse_scalar(std::string_view text, const FieldPtr& field) {
  const RingPtr ring = make_ring(field, 0);
  return parse_poly(text, ring).constant_value();
}

}  // namespace gwa
