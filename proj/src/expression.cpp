#include "jetsym/expression.hpp"

#include <algorithm>
#include <cctype>

namespace jetsym {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Parser {
public:
  Parser(std::string_view text, const VarList& vars, const NameResolver& resolve)
      : text_(text), vars_(vars), resolve_(resolve) {}

  RationalFunction parse() {
    RationalFunction r = sum();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction sum() {
    RationalFunction acc = product();
    while (true) {
      if (eat('+')) {
        acc += product();
      } else if (eat('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  RationalFunction product() {
    RationalFunction acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    while (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c == '(') {
      ++pos_;
      RationalFunction inner = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && ident_start(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("identifier may not start with a digit", start);
      return RationalFunction(vars_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (resolve_) name = resolve_(name);
      if (!vars_ || std::find(vars_->begin(), vars_->end(), name) == vars_->end())
        throw ParseError("unknown identifier '" + name + "'", start);
      return RationalFunction::variable(vars_, name);
    }
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  const VarList& vars_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const VarList& vars, const NameResolver& resolve) {
  return Parser(text, vars, resolve).parse();
}

}  // namespace jetsym
