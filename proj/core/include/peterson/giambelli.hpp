#ifndef PETERSON_GIAMBELLI_HPP
#define PETERSON_GIAMBELLI_HPP

#include "peterson/multipoly.hpp"
#include "peterson/numeric.hpp"
#include "peterson/subset.hpp"

namespace peterson {

// sigma(A) = product over maximal consecutive substrings [lo,hi] of A of
// 1/(hi - lo + 1)!.  sigma(empty) = 1.
Rational giambelli_sigma(const SubsetIndex& a);

// The monomial sigma(A) * prod_{j in A} p_j in Q[t, p_1, ..., p_{n-1}],
// which equals p_A in the cohomology ring.
MultiPoly giambelli_monomial(const SubsetIndex& a);

// Checks the defining identity: expanding prod_{j in A} p_j through the Monk
// rule and scaling by sigma(A) must give exactly 1 * p_A.
bool giambelli_verify(int n, const SubsetIndex& a);

}  // namespace peterson

#endif  // PETERSON_GIAMBELLI_HPP
