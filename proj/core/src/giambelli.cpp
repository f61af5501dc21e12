#include "peterson/giambelli.hpp"

#include "peterson/basis_expansion.hpp"
#include "peterson/expansion.hpp"

namespace peterson {

Rational giambelli_sigma(const SubsetIndex& a) {
  Rational sigma = 1;
  for (const Substring& s : decompose_substrings(a))
    sigma /= Rational(factorial(s.length()));
  return sigma;
}

MultiPoly giambelli_monomial(const SubsetIndex& a) {
  const int n = a.rank();
  Exponents e(n, 0);
  for (int j : a.members()) e[j] = 1;
  return MultiPoly::monomial(std::move(e), giambelli_sigma(a));
}

bool giambelli_verify(int n, const SubsetIndex& a) {
  const BasisExpansion lhs =
      expand_monomial(n, a.with_rank(n).members()).scaled(giambelli_sigma(a));
  return lhs == BasisExpansion::basis_class(a.with_rank(n));
}

}  // namespace peterson
