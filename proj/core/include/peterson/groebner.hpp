#ifndef PETERSON_GROEBNER_HPP
#define PETERSON_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "peterson/multipoly.hpp"

namespace peterson {

struct GroebnerLimits {
  std::size_t max_pairs;
  int max_degree;

  // Read from PETERSON_GB_MAX_PAIRS / PETERSON_GB_MAX_DEGREE, with defaults
  // 100000 and 30.
  static GroebnerLimits defaults();
};

struct GroebnerBasis {
  int rank = 1;
  std::vector<MultiPoly> elements;  // reduced: monic, minimal, tails reduced
};

// Remainder of multivariate division of f by the divisors, under the fixed
// degree-reverse-lexicographic order.  No term of the remainder is divisible
// by any divisor's leading monomial.  A zero remainder certifies membership
// of the ideal generated by the divisors (and is equivalent to it when they
// form a Groebner basis).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Buchberger's algorithm with normal pair selection and the coprime and
// chain criteria; the result is the reduced Groebner basis of the input
// ideal.  Throws ResourceCapExceeded when the pair or degree budget runs
// out, leaving no claim about the ideal.
GroebnerBasis buchberger(int rank, const std::vector<MultiPoly>& generators,
                         const GroebnerLimits& limits = GroebnerLimits::defaults());

// True iff every generator of ideal_K(n) reduces to zero modulo the
// Groebner basis of the quadratic generators alone.  Propagates
// ResourceCapExceeded as "undetermined".
bool quadratic_conjecture_check(int n,
                                const GroebnerLimits& limits = GroebnerLimits::defaults());

}  // namespace peterson

#endif  // PETERSON_GROEBNER_HPP
