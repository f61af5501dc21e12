#include "peterson/restriction.hpp"

#include "peterson/errors.hpp"
#include "peterson/giambelli.hpp"
#include "peterson/permutation.hpp"

namespace peterson {

namespace {

void check_generator_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw DomainError("generator index " + std::to_string(i) + " outside {1.." +
                      std::to_string(n - 1) + "}");
}

}  // namespace

UniPoly restrict_generator(int n, int i, const SubsetIndex& b) {
  check_generator_index(n, i);
  if (b.rank() != n) throw DomainError("fixed-point subset rank mismatch");
  if (!b.contains(i)) return UniPoly::zero();
  const Rational c = Rational(i - tail(b, i) + 1) * Rational(head(b, i) - i + 1);
  return UniPoly::term(c, 1);
}

UniPoly restrict_generator_oneline(int n, int i, const SubsetIndex& b) {
  check_generator_index(n, i);
  if (b.rank() != n) throw DomainError("fixed-point subset rank mismatch");
  const Permutation w = fixed_point_permutation(b);
  Rational c = 0;
  for (int j = 1; j <= i; ++j) c += w(j) - j;
  return UniPoly::term(c, 1);
}

UniPoly restrict_basis_class(const SubsetIndex& a, const SubsetIndex& b) {
  if (a.rank() != b.rank()) throw DomainError("subset rank mismatch");
  UniPoly value = UniPoly::constant(giambelli_sigma(a));
  for (int j : a.members()) {
    const UniPoly f = restrict_generator(a.rank(), j, b);
    if (f.is_zero()) return UniPoly::zero();
    value = value * f;
  }
  return value;
}

UniPoly restrict_class(const BasisExpansion& e, const SubsetIndex& b) {
  if (e.rank() != b.rank()) throw DomainError("expansion rank mismatch");
  UniPoly value;
  for (const auto& [a, c] : e.terms()) value += c * restrict_basis_class(a, b);
  return value;
}

}  // namespace peterson
