#pragma once

#include <stdexcept>
#include <string>

#include "affkm/autos.hpp"

namespace affkm {

/// Malformed text input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// t^k, t^(-k), t^(p/q) for the exponent numerator p over m.
std::string exponent_text(int p, int m);
std::string to_text(const Laurent& p);
std::string to_text(const LoopElt& x);
std::string to_text(const AffineElt& x);
std::string to_text(const AutoGen& g);
std::string to_text(const AutoWord& w);

/// Expressions: sums of products of rationals, z, t^e and at most one basis
/// label (H_i, X_a12, X_-a1, c, d; "H" and "X_a" when rank is 1).
AffineElt parse_affine(const ChevAlgebra* g, int m, const std::string& text, int line = 1);
Laurent parse_laurent(int m, const std::string& text, int line = 1);
CycScalar parse_scalar(int m, const std::string& text, int line = 1);

/// "rootexp(a1, 2*t^1) . cochar(1,0) . ring(1,-1) @ hat"; "id" is the empty word.
AutoWord parse_word(const LoopAlgebra& alg, const std::string& text, int line = 1);

}  // namespace affkm
