#ifndef PETERSON_MULTIPOLY_HPP
#define PETERSON_MULTIPOLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "peterson/sparse_poly.hpp"
#include "peterson/unipoly.hpp"

namespace peterson {

// Polynomial in t, p_1, ..., p_{n-1} with exact rational coefficients.
// Variable 0 is t; variable j (1 <= j <= n-1) is p_j, so var_count == n.
// The monomial order is degree-reverse-lexicographic with precedence
// t < p_1 < ... < p_{n-1}.
using MultiPoly = SparsePoly;

MultiPoly multipoly_zero(int n);
MultiPoly multipoly_constant(int n, Rational c);
MultiPoly multipoly_t(int n);
MultiPoly multipoly_p(int n, int j);

std::string multipoly_var_name(int v);
std::string multipoly_to_string(const MultiPoly& f);

// Parses sums of rational multiples of monomials in t and pJ, e.g.
// "2*p1^2 - 2*t*p1 - p1*p2".
MultiPoly parse_multipoly(int n, std::string_view text);

// Substitutes t -> t and p_j -> p_values[j-1]; p_values must have n-1
// entries.  Used to evaluate presentation relations in the fixed-point ring.
UniPoly multipoly_substitute_unipoly(const MultiPoly& f,
                                     const std::vector<UniPoly>& p_values);

}  // namespace peterson

#endif  // PETERSON_MULTIPOLY_HPP
