#ifndef PETERSON_RESTRICTION_HPP
#define PETERSON_RESTRICTION_HPP

#include "peterson/basis_expansion.hpp"
#include "peterson/subset.hpp"
#include "peterson/unipoly.hpp"

namespace peterson {

// Restriction p_i(w_B) of a degree-2 class to a fixed point, closed form:
//   0                                          if i not in B,
//   (i - tail(B,i) + 1) * (head(B,i) - i + 1) * t   otherwise.
UniPoly restrict_generator(int n, int i, const SubsetIndex& b);

// Independent route to the same value from the one-line notation of w_B:
//   sum_{j <= i} (w_B(j) - j) * t.
// Agreement of the two routes is a tested invariant of the build.
UniPoly restrict_generator_oneline(int n, int i, const SubsetIndex& b);

// Restriction of a general basis class:
//   p_A(w_B) = sigma(A) * prod_{j in A} p_j(w_B),
// extended linearly over an expansion.  Vanishes unless A is contained in B.
UniPoly restrict_basis_class(const SubsetIndex& a, const SubsetIndex& b);
UniPoly restrict_class(const BasisExpansion& e, const SubsetIndex& b);

}  // namespace peterson

#endif  // PETERSON_RESTRICTION_HPP
