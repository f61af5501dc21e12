#ifndef PETERSON_UNIPOLY_HPP
#define PETERSON_UNIPOLY_HPP

#include <map>
#include <string>
#include <string_view>

#include "peterson/numeric.hpp"

namespace peterson {

// Exact polynomial in the single variable t with rational coefficients.
// Zero coefficients are never stored.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rational c);
  // c * t^k
  static UniPoly term(Rational c, int k);
  static UniPoly t() { return term(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Rational coeff(int k) const;
  bool is_single_term() const { return coeffs_.size() == 1; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly scaled(const Rational& c) const;

  Rational evaluate(const Rational& x) const;

  // Exact quotient: returns q with *this == q * divisor.  Throws
  // DomainError on zero divisor and InexactDivision when no exact
  // quotient exists.
  UniPoly div_exact(const UniPoly& divisor) const;

  // "3*t^2 - 1/2*t + 4"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void add_term(int k, const Rational& c);

  std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
};

// Inverse of to_string; accepts any sum of rational multiples of powers of t.
UniPoly parse_unipoly(std::string_view text);

}  // namespace peterson

#endif  // PETERSON_UNIPOLY_HPP
