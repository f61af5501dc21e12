#ifndef PETERSON_SPARSE_POLY_HPP
#define PETERSON_SPARSE_POLY_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "peterson/numeric.hpp"

namespace peterson {

// Dense exponent vector, one entry per variable.  Variables are listed from
// lowest precedence to highest.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool exponents_divide(const Exponents& a, const Exponents& b);  // a | b
Exponents exponents_add(const Exponents& a, const Exponents& b);
Exponents exponents_sub(const Exponents& a, const Exponents& b);  // b | a required
Exponents exponents_lcm(const Exponents& a, const Exponents& b);

// Degree-reverse-lexicographic order.  With variables listed from lowest
// precedence upward, a exceeds b when it has higher total degree, or on a
// tie when the first differing entry (scanning from the lowest-precedence
// variable) is smaller in a.
struct DegRevLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed number of variables.  Zero terms are never stored; terms are kept
// sorted by DegRevLexLess, so the leading term is the map's last entry.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Rational, DegRevLexLess>;

  SparsePoly() = default;
  explicit SparsePoly(int var_count) : var_count_(var_count) {}

  static SparsePoly constant(int var_count, Rational c);
  static SparsePoly monomial(Exponents e, Rational c);
  static SparsePoly variable(int var_count, int index);

  int var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  const std::pair<const Exponents, Rational>& leading_term() const;

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly scaled(const Rational& c) const;

  void add_term(const Exponents& e, const Rational& c);

  // Scales so that all coefficients are integers with no common factor,
  // preserving sign.  Zero is left unchanged.
  SparsePoly primitive_integer_form() const;
  // Scales so the leading coefficient is 1.  Zero is left unchanged.
  SparsePoly monic() const;

  // Substitutes per-variable values drawn from any commutative ring R with
  // addition, multiplication and a multiplicative identity supplied by the
  // caller through `one`.
  template <typename R>
  R evaluate(const std::vector<R>& values, R one) const {
    R acc = one;
    bool any = false;
    for (const auto& [e, c] : terms_) {
      R term = one;
      for (int v = 0; v < var_count_; ++v)
        for (int i = 0; i < e[v]; ++i) term = term * values[v];
      term = term.scaled(c);
      if (!any) {
        acc = term;
        any = true;
      } else {
        acc = acc + term;
      }
    }
    return any ? acc : one.scaled(Rational(0));
  }

  // Renders terms in descending monomial order; `var_name` maps a variable
  // index to its display name.  Example: "3*p1^2*p2 - 6*t*p1*p2".
  std::string to_string(const std::function<std::string(int)>& var_name) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void check_compatible(const SparsePoly& o) const;

  int var_count_ = 0;
  TermMap terms_;
};

}  // namespace peterson

#endif  // PETERSON_SPARSE_POLY_HPP
