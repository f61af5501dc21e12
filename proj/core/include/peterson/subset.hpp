#ifndef PETERSON_SUBSET_HPP
#define PETERSON_SUBSET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace peterson {

// Inclusive interval [lo, hi] of consecutive integers; a maximal consecutive
// substring of a subset.
struct Substring {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  friend bool operator==(const Substring&, const Substring&) = default;
};

// A subset of {1, ..., n-1} indexing a fixed point w_A, a permutation v_A
// and a basis class p_A.  Members are kept sorted and duplicate-free;
// construction validates the range.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  // Members may be given in any order; duplicates are rejected.
  SubsetIndex(int n, std::vector<int> members);

  static SubsetIndex empty(int n) { return SubsetIndex(n, {}); }
  static SubsetIndex interval(int n, int lo, int hi);
  static SubsetIndex singleton(int n, int j) { return SubsetIndex(n, {j}); }
  // Bits 0..n-2 of `mask` flag membership of 1..n-1.
  static SubsetIndex from_mask(int n, std::uint64_t mask);

  int rank() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  bool contains(int j) const;
  std::uint64_t mask() const;

  // Same members re-validated against a different rank.
  SubsetIndex with_rank(int n) const { return SubsetIndex(n, members_); }
  SubsetIndex united_with(int k) const;

  bool subset_of(const SubsetIndex& other) const;

  // "{1,2,4}"; "{}" for the empty set.
  std::string to_string() const;

  // Equality ignores nothing: both rank and members must agree.
  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  int n_ = 1;
  std::vector<int> members_;
};

// Strict order by cardinality, then lexicographically by the sorted member
// list.  This is the enumeration order: it refines inclusion, which the
// localization triangular solve relies on.
struct CardLexLess {
  bool operator()(const SubsetIndex& a, const SubsetIndex& b) const;
};

// The unique decomposition of A into maximal consecutive substrings,
// sorted increasingly.  {1,2,3,5,6,8} -> [1,3],[5,6],[8,8].
std::vector<Substring> decompose_substrings(const SubsetIndex& a);

// Maximal element of the maximal consecutive substring of A containing j.
// Throws DomainError if j is not a member.
int head(const SubsetIndex& a, int j);

// Minimal element of the maximal consecutive substring of A containing j.
int tail(const SubsetIndex& a, int j);

// All 2^(n-1) subsets of {1..n-1} in cardinality-then-lexicographic order.
// Throws ResourceCapExceeded when n exceeds `enum_cap` (see config.hpp for
// the default).
std::vector<SubsetIndex> all_subsets(int n);
std::vector<SubsetIndex> all_subsets(int n, int enum_cap);

// Position of `a` in the all_subsets(rank) order, without enumerating.
std::size_t subset_position(const SubsetIndex& a);

// Parses "{1,2,4}" or "1,2,4"; "{}" and "" give the empty set.
SubsetIndex parse_subset(int n, std::string_view text);

}  // namespace peterson

#endif  // PETERSON_SUBSET_HPP
