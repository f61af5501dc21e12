#ifndef PETERSON_BASIS_EXPANSION_HPP
#define PETERSON_BASIS_EXPANSION_HPP

#include <map>
#include <string>

#include "peterson/subset.hpp"
#include "peterson/unipoly.hpp"

namespace peterson {

// A class written in the module basis {p_A}: a finitely supported mapping
// from subsets to coefficients in Q[t].  Zero coefficients are not stored.
class BasisExpansion {
 public:
  using TermMap = std::map<SubsetIndex, UniPoly, CardLexLess>;

  BasisExpansion() = default;
  explicit BasisExpansion(int n) : n_(n) {}

  // The identity class 1 * p_empty.
  static BasisExpansion unit(int n);
  // 1 * p_A.
  static BasisExpansion basis_class(const SubsetIndex& a);

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  UniPoly coeff(const SubsetIndex& a) const;

  void add_term(const SubsetIndex& a, const UniPoly& c);

  BasisExpansion operator+(const BasisExpansion& o) const;
  BasisExpansion operator-(const BasisExpansion& o) const;
  BasisExpansion& operator+=(const BasisExpansion& o);
  BasisExpansion scaled(const UniPoly& c) const;
  BasisExpansion scaled(const Rational& c) const;

  // "t^2*p{1} + 3*t*p{1,2} + p{1,2,3}", terms in enumeration order;
  // multi-term coefficients are parenthesized.  "0" when empty.
  std::string to_string() const;

  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;

 private:
  int n_ = 1;
  TermMap terms_;
};

}  // namespace peterson

#endif  // PETERSON_BASIS_EXPANSION_HPP
