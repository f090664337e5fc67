#pragma once

// Polynomial expressions:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
// Whitespace is ignored.

#include <string>
#include <string_view>

#include "ratsub/poly.hpp"

namespace ratsub {

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InvalidArgument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Over F_p, rationals are reduced mod p; a denominator divisible by p is an error.
template <class F>
Poly<F> parse_poly(std::string_view src, const FieldSpec& field, const std::string& var = "x");

/// A constant expression (no variable).
template <class F>
F parse_scalar(std::string_view src, const FieldSpec& field);

}  // namespace ratsub
