#ifndef PETERSON_MONK_HPP
#define PETERSON_MONK_HPP

#include "peterson/basis_expansion.hpp"
#include "peterson/numeric.hpp"
#include "peterson/subset.hpp"

namespace peterson {

// A structure constant c^B_{i,A} of the Monk rule.  The rule is manifestly
// positive: construction enforces value >= 0.
class MonkCoefficient {
 public:
  explicit MonkCoefficient(BigInt value);

  const BigInt& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const MonkCoefficient&, const MonkCoefficient&) = default;

 private:
  BigInt value_;
};

// Requires B = A u {k} with |B| = |A| + 1.  The four cases, with head/tail
// taken in B relative to k:
//   i not in B                          -> 0
//   i in B, i not in [tail, head]       -> 0
//   k <= i <= head   -> (head - i + 1) * C(head - tail + 1, k - tail)
//   tail <= i <= k-1 -> (i - tail + 1) * C(head - tail + 1, k - tail + 1)
MonkCoefficient monk_coefficient(int n, int i, const SubsetIndex& a,
                                 const SubsetIndex& b);

// The full expansion of p_i * p_A:
//   p_i(w_A) on p_A itself, c^B_{i,A} on each B = A u {k}.
BasisExpansion monk_product(int n, int i, const SubsetIndex& a);

}  // namespace peterson

#endif  // PETERSON_MONK_HPP
