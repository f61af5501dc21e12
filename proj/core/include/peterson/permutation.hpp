#ifndef PETERSON_PERMUTATION_HPP
#define PETERSON_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "peterson/subset.hpp"

namespace peterson {

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() : oneline_{1} {}
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  // The simple transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation simple_transposition(int n, int i);

  int rank() const { return static_cast<int>(oneline_.size()); }
  const std::vector<int>& oneline() const { return oneline_; }

  // Image of x under the permutation, 1-based.
  int operator()(int x) const;

  Permutation inverse() const;
  // Function composition: (*this)(other(x)).
  Permutation compose(const Permutation& other) const;

  // Number of inversions = Coxeter length.
  int length() const;

  // "32154" when n <= 9, "3,2,1,5,4" otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> oneline_;
};

// The fixed point w_A: its inverse's one-line notation is the concatenation
// of descending blocks whose internal bonds are exactly the members of A
// (i and i+1 lie in the same block iff i is a member).  Always an involution.
Permutation fixed_point_permutation(const SubsetIndex& a);

// Recovers A from a fixed-point permutation via the defining condition
// { i : w^{-1}(i) = w^{-1}(i+1) + 1 }.
SubsetIndex fixed_point_subset(const Permutation& w);

struct VPermutation {
  std::vector<int> word;  // ascending members of A, as simple-reflection indices
  Permutation perm;
};

// v_A = s_{j_1} s_{j_2} ... s_{j_m} for A = {j_1 < ... < j_m}, composed with
// the rightmost factor applied first.  The word is reduced: length(v_A) = |A|.
VPermutation v_permutation(const SubsetIndex& a);

// Accepts digit form ("32154", only for n <= 9) and comma form ("3,2,1,5,4").
Permutation parse_permutation(std::string_view text);

}  // namespace peterson

#endif  // PETERSON_PERMUTATION_HPP
