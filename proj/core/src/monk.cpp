#include "peterson/monk.hpp"

#include "peterson/errors.hpp"
#include "peterson/restriction.hpp"

namespace peterson {

MonkCoefficient::MonkCoefficient(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw DomainError("Monk coefficient must be nonnegative");
}

MonkCoefficient monk_coefficient(int n, int i, const SubsetIndex& a,
                                 const SubsetIndex& b) {
  if (i < 1 || i > n - 1)
    throw DomainError("generator index " + std::to_string(i) + " outside {1.." +
                      std::to_string(n - 1) + "}");
  if (a.rank() != n || b.rank() != n) throw DomainError("subset rank mismatch");
  if (b.size() != a.size() + 1 || !a.subset_of(b))
    throw DomainError("expected B = A u {k} with |B| = |A| + 1");
  int k = 0;
  for (int m : b.members())
    if (!a.contains(m)) k = m;

  if (!b.contains(i)) return MonkCoefficient(0);
  const int t = tail(b, k);
  const int h = head(b, k);
  if (i < t || i > h) return MonkCoefficient(0);
  if (i >= k) return MonkCoefficient(BigInt(h - i + 1) * binomial(h - t + 1, k - t));
  return MonkCoefficient(BigInt(i - t + 1) * binomial(h - t + 1, k - t + 1));
}

BasisExpansion monk_product(int n, int i, const SubsetIndex& a) {
  if (a.rank() != n) throw DomainError("subset rank mismatch");
  BasisExpansion e(n);
  e.add_term(a, restrict_generator(n, i, a));
  for (int k = 1; k <= n - 1; ++k) {
    if (a.contains(k)) continue;
    const SubsetIndex b = a.united_with(k);
    const MonkCoefficient c = monk_coefficient(n, i, a, b);
    if (!c.is_zero()) e.add_term(b, UniPoly::constant(Rational(c.value())));
  }
  return e;
}

}  // namespace peterson
