#ifndef PETERSON_LOCALIZATION_HPP
#define PETERSON_LOCALIZATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "peterson/basis_expansion.hpp"
#include "peterson/subset.hpp"
#include "peterson/unipoly.hpp"

namespace peterson {

// A class represented by its restrictions at all 2^(n-1) fixed points,
// stored densely in subset enumeration order.  Restriction to fixed points
// is injective, so this representation is faithful; it multiplies pointwise,
// which is what makes it an independent check on the Monk formula.
class LocalizedClass {
 public:
  explicit LocalizedClass(int n);

  int rank() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const UniPoly& value_at(std::size_t position) const { return values_[position]; }
  const UniPoly& value(const SubsetIndex& b) const;
  void set_value(const SubsetIndex& b, UniPoly v);

  bool is_zero() const;

  friend bool operator==(const LocalizedClass&, const LocalizedClass&) = default;

 private:
  int n_;
  std::vector<UniPoly> values_;
};

// Restriction of an expansion at every fixed point.
LocalizedClass localize(const BasisExpansion& e);

// The direct-product multiplication of the fixed-point ring.
LocalizedClass pointwise_product(const LocalizedClass& f, const LocalizedClass& g);

// Inverts localize by the triangular solve: subsets are visited in the
// inclusion-refining enumeration order, and p_A(w_B) = 0 unless A is a
// subset of B while p_A(w_A) != 0.  Throws NotInSpan when the input is not
// an exact combination of localized basis classes (inexact division or a
// nonzero final residual); for products of genuine classes this never
// happens.
BasisExpansion expand_localized(const LocalizedClass& f);

struct MonkOracleMismatch {
  int i;
  SubsetIndex a;
  std::string expected;  // oracle expansion
  std::string actual;    // Monk expansion
};

struct MonkOracleReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::vector<MonkOracleMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

// Sweeps every (i, A), comparing the Monk expansion of p_i * p_A with the
// expansion recovered from the pointwise product of localizations.  The two
// routes share only the generator restriction formula, which is itself
// double-implemented.
MonkOracleReport oracle_check_monk(int n);

}  // namespace peterson

#endif  // PETERSON_LOCALIZATION_HPP
