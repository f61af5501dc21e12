#ifndef PETERSON_EXPANSION_HPP
#define PETERSON_EXPANSION_HPP

#include <vector>

#include "peterson/basis_expansion.hpp"
#include "peterson/subset.hpp"

namespace peterson {

// Expansion of a product of degree-2 classes in the module basis, obtained
// by iterated Monk multiplication starting from the identity class.  The
// result does not depend on the order of the factors; they are processed in
// sorted order internally.
BasisExpansion expand_monomial(int n, std::vector<int> factors);

// One Monk multiplication step applied linearly to an expansion.
BasisExpansion multiply_by_generator(const BasisExpansion& e, int i);

// The closed form of p_1^k in the basis:
//   sum_{j=1}^{min(k, n-1)} S(k, j) t^(k-j) p_{[1,j]}.
// Terms with j > n-1 do not exist at rank n and are omitted; the identity
// with expand_monomial holds for k <= n-1.
BasisExpansion stirling_expansion(int n, int k);

// Reinterprets an expansion at rank n+1 whose keys all omit n as an
// expansion at rank n.  Fixed-point restrictions at the surviving subsets
// are unchanged.  Throws NotStable if some key contains n.
BasisExpansion stability_restrict(const BasisExpansion& e);

}  // namespace peterson

#endif  // PETERSON_EXPANSION_HPP
