#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "base.hpp"
#include "errors.hpp"
#include "ofn.hpp"

namespace tofn {

/// Recursive-descent evaluator for ring expressions over typed OFN literals.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | primary
///   primary := literal | '(' expr ')'
///   literal := trap(a,b,c,d) | gauss(a,b,c,d) | expo(a,b,c,d) | sqrtb(a,b,c,d)
///            | rect(b1,b2) | crisp(v)
///
/// Literal arguments are real numbers in the C locale. Operators are
/// left-associative. Arithmetic errors propagate from the ring operations.
class ExpressionParser {
public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  TypedOfn parse() {
    TypedOfn v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  TypedOfn expr() {
    TypedOfn v = term();
    for (;;) {
      if (eat('+'))
        v = add(v, term());
      else if (eat('-'))
        v = sub(v, term());
      else
        return v;
    }
  }

  TypedOfn term() {
    TypedOfn v = unary();
    for (;;) {
      if (eat('*'))
        v = mul(v, unary());
      else if (eat('/'))
        v = div(v, unary());
      else
        return v;
    }
  }

  TypedOfn unary() {
    if (eat('-')) return neg(unary());
    return primary();
  }

  TypedOfn primary() {
    if (eat('(')) {
      TypedOfn v = expr();
      expect(')');
      return v;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name.empty()) fail(pos_ < s_.size() ? "expected a literal" : "unexpected end of expression");

    struct Kind {
      std::string_view name;
      std::size_t arity;
      BaseRef (*base)();
    };
    static const Kind kinds[] = {{"trap", 4, bases::identity}, {"gauss", 4, bases::gaussian},
                                 {"expo", 4, bases::exponential}, {"sqrtb", 4, bases::sqrt},
                                 {"rect", 2, bases::identity},  {"crisp", 1, bases::identity}};
    const Kind* kind = nullptr;
    for (const auto& k : kinds)
      if (k.name == name) kind = &k;
    if (!kind) {
      pos_ = start;
      fail("unknown literal '" + std::string(name) + "'");
    }

    expect('(');
    std::vector<double> args;
    do {
      args.push_back(number());
    } while (eat(','));
    if (args.size() != kind->arity)
      fail(std::string(kind->name) + " takes " + std::to_string(kind->arity) + " arguments");
    expect(')');

    if (kind->arity == 4) return {kind->base(), {args[0], args[1], args[2], args[3]}};
    if (kind->arity == 2) return rectangular(args[0], args[1]);
    return crisp(args[0]);
  }

  double number() {
    skip_ws();
    std::size_t p = pos_;
    if (p < s_.size() && s_[p] == '+') ++p;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + p, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    if (!std::isfinite(v)) fail("literal arguments must be finite");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline TypedOfn evaluate_expression(std::string_view text) { return ExpressionParser(text).parse(); }

} // namespace tofn
