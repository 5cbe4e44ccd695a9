#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "jetsym/rational_function.hpp"

namespace jetsym {

/// Syntax error in an expression; carries the byte offset of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Maps an identifier as written to a declared variable name.
using NameResolver = std::function<std::string(const std::string&)>;

/// Parses the expression grammar
///
///   expr := rational | ident | expr op expr | '-' expr | '(' expr ')' | expr '^' int
///
/// with op in {+, -, *, /}, into a rational function over vars. Identifiers
/// are ASCII letters, digits and underscores (bytes >= 0x80 are accepted as
/// letters so UTF-8 names like a Greek lambda work) and may not start with a digit.
RationalFunction parse_expression(std::string_view text, const VarList& vars, const NameResolver& resolve = {});

}  // namespace jetsym
