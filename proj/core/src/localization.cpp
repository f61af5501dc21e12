#include "peterson/localization.hpp"

#include "peterson/errors.hpp"
#include "peterson/monk.hpp"
#include "peterson/restriction.hpp"

namespace peterson {

LocalizedClass::LocalizedClass(int n)
    : n_(n), values_(all_subsets(n).size()) {}

const UniPoly& LocalizedClass::value(const SubsetIndex& b) const {
  if (b.rank() != n_) throw DomainError("localized value rank mismatch");
  return values_[subset_position(b)];
}

void LocalizedClass::set_value(const SubsetIndex& b, UniPoly v) {
  if (b.rank() != n_) throw DomainError("localized value rank mismatch");
  values_[subset_position(b)] = std::move(v);
}

bool LocalizedClass::is_zero() const {
  for (const UniPoly& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

LocalizedClass localize(const BasisExpansion& e) {
  LocalizedClass f(e.rank());
  for (const SubsetIndex& b : all_subsets(e.rank()))
    f.set_value(b, restrict_class(e, b));
  return f;
}

LocalizedClass pointwise_product(const LocalizedClass& f, const LocalizedClass& g) {
  if (f.rank() != g.rank()) throw DomainError("localized class rank mismatch");
  LocalizedClass h(f.rank());
  for (const SubsetIndex& b : all_subsets(f.rank()))
    h.set_value(b, f.value(b) * g.value(b));
  return h;
}

BasisExpansion expand_localized(const LocalizedClass& f) {
  const int n = f.rank();
  const std::vector<SubsetIndex> subsets = all_subsets(n);

  // Residual starts as f and has the already-determined terms subtracted.
  std::vector<UniPoly> residual;
  residual.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) residual.push_back(f.value_at(i));

  BasisExpansion e(n);
  for (std::size_t pos = 0; pos < subsets.size(); ++pos) {
    const SubsetIndex& a = subsets[pos];
    if (residual[pos].is_zero()) continue;
    const UniPoly diagonal = restrict_basis_class(a, a);  // never zero
    UniPoly coeff;
    try {
      coeff = residual[pos].div_exact(diagonal);
    } catch (const InexactDivision&) {
      throw NotInSpan("residual at " + a.to_string() +
                      " is not divisible by p_A(w_A)");
    }
    e.add_term(a, coeff);
    // The basis class p_A restricts to zero outside { B : A subset of B }.
    for (std::size_t q = pos; q < subsets.size(); ++q)
      if (a.subset_of(subsets[q]))
        residual[q] -= coeff * restrict_basis_class(a, subsets[q]);
  }
  for (std::size_t pos = 0; pos < subsets.size(); ++pos)
    if (!residual[pos].is_zero())
      throw NotInSpan("nonzero residual at " + subsets[pos].to_string());
  return e;
}

MonkOracleReport oracle_check_monk(int n) {
  MonkOracleReport report;
  report.n = n;
  const std::vector<SubsetIndex> subsets = all_subsets(n);

  std::vector<LocalizedClass> generator_loc;
  generator_loc.reserve(n >= 1 ? n - 1 : 0);
  for (int i = 1; i <= n - 1; ++i)
    generator_loc.push_back(
        localize(BasisExpansion::basis_class(SubsetIndex::singleton(n, i))));

  for (int i = 1; i <= n - 1; ++i) {
    for (const SubsetIndex& a : subsets) {
      const LocalizedClass product = pointwise_product(
          generator_loc[i - 1], localize(BasisExpansion::basis_class(a)));
      const BasisExpansion from_oracle = expand_localized(product);
      const BasisExpansion from_monk = monk_product(n, i, a);
      ++report.pairs_checked;
      if (from_oracle != from_monk)
        report.mismatches.push_back(MonkOracleMismatch{
            i, a, from_oracle.to_string(), from_monk.to_string()});
    }
  }
  return report;
}

}  // namespace peterson
