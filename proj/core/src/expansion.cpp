#include "peterson/expansion.hpp"

#include <algorithm>

#include "peterson/errors.hpp"
#include "peterson/monk.hpp"
#include "peterson/stirling.hpp"

namespace peterson {

BasisExpansion multiply_by_generator(const BasisExpansion& e, int i) {
  const int n = e.rank();
  BasisExpansion out(n);
  for (const auto& [a, c] : e.terms()) out += monk_product(n, i, a).scaled(c);
  return out;
}

BasisExpansion expand_monomial(int n, std::vector<int> factors) {
  for (int i : factors)
    if (i < 1 || i > n - 1)
      throw DomainError("generator index " + std::to_string(i) +
                        " outside {1.." + std::to_string(n - 1) + "}");
  std::sort(factors.begin(), factors.end());
  BasisExpansion e = BasisExpansion::unit(n);
  for (int i : factors) e = multiply_by_generator(e, i);
  return e;
}

BasisExpansion stirling_expansion(int n, int k) {
  if (k < 1) throw DomainError("power must be positive");
  BasisExpansion e(n);
  for (int j = 1; j <= std::min(k, n - 1); ++j)
    e.add_term(SubsetIndex::interval(n, 1, j),
               UniPoly::term(Rational(stirling2(k, j)), k - j));
  return e;
}

BasisExpansion stability_restrict(const BasisExpansion& e) {
  const int n = e.rank() - 1;
  if (n < 1) throw DomainError("cannot restrict below rank 1");
  BasisExpansion out(n);
  for (const auto& [a, c] : e.terms()) {
    if (a.contains(n))
      throw NotStable("expansion term " + a.to_string() +
                      " involves the top index " + std::to_string(n));
    out.add_term(a.with_rank(n), c);
  }
  return out;
}

}  // namespace peterson
