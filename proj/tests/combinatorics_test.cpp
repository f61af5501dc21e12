#include "doctest.h"

#include <algorithm>
#include <vector>

#include "peterson/errors.hpp"
#include "peterson/permutation.hpp"
#include "peterson/stirling.hpp"
#include "peterson/subset.hpp"

using namespace peterson;

namespace {

// Independent oracle: count partitions of {0..k-1} into exactly j nonempty
// blocks by enumerating restricted growth strings.
long count_partitions(int k, int j) {
  if (k == 0) return j == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> assign(k, 0);
  auto rec = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == k) {
      if (blocks == j) ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return count;
}

// Independent oracle: Bell numbers by the Bell triangle recurrence.
std::vector<BigInt> bell_numbers(int up_to) {
  std::vector<BigInt> bell = {1};
  std::vector<BigInt> row = {1};
  for (int k = 1; k <= up_to; ++k) {
    std::vector<BigInt> next = {row.back()};
    for (const BigInt& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

}  // namespace

TEST_CASE("substring decomposition") {
  CHECK(decompose_substrings(SubsetIndex(9, {1, 2, 3, 5, 6, 8})) ==
        std::vector<Substring>{{1, 3}, {5, 6}, {8, 8}});
  CHECK(decompose_substrings(SubsetIndex::empty(5)).empty());
  CHECK(decompose_substrings(SubsetIndex(5, {2, 4})) ==
        std::vector<Substring>{{2, 2}, {4, 4}});
}

TEST_CASE("head and tail") {
  const SubsetIndex a(5, {1, 2, 4});
  CHECK(head(a, 1) == 2);
  CHECK(head(a, 4) == 4);
  CHECK(tail(a, 2) == 1);
  CHECK(tail(a, 4) == 4);
  const SubsetIndex b(4, {1, 2, 3});
  CHECK(head(b, 2) == 3);
  CHECK(tail(b, 3) == 1);
  CHECK_THROWS_AS(head(a, 3), DomainError);
  CHECK_THROWS_AS(tail(a, 5), DomainError);
}

TEST_CASE("head/tail bracket j and are constant on substrings") {
  for (int n = 2; n <= 8; ++n) {
    for (const SubsetIndex& a : all_subsets(n)) {
      for (const Substring& s : decompose_substrings(a)) {
        for (int j = s.lo; j <= s.hi; ++j) {
          CHECK(tail(a, j) == s.lo);
          CHECK(head(a, j) == s.hi);
          CHECK(tail(a, j) <= j);
          CHECK(j <= head(a, j));
        }
      }
    }
  }
}

TEST_CASE("decomposition partitions the subset") {
  for (int n = 2; n <= 8; ++n) {
    for (const SubsetIndex& a : all_subsets(n)) {
      std::vector<int> flattened;
      const auto parts = decompose_substrings(a);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) CHECK(parts[i].lo > parts[i - 1].hi + 1);  // maximality
        CHECK(!a.contains(parts[i].lo - 1));
        CHECK(!a.contains(parts[i].hi + 1));
        for (int j = parts[i].lo; j <= parts[i].hi; ++j) flattened.push_back(j);
      }
      CHECK(flattened == a.members());
    }
  }
}

TEST_CASE("fixed point permutations from the worked examples") {
  CHECK(fixed_point_permutation(SubsetIndex(5, {1, 2, 4})).to_string() == "32154");
  CHECK(fixed_point_permutation(SubsetIndex::empty(4)).to_string() == "1234");
  CHECK(fixed_point_permutation(SubsetIndex(9, {1, 2, 4, 5, 6, 8})).to_string() ==
        "321765498");
}

TEST_CASE("rank-4 fixed point census") {
  const std::vector<std::pair<std::vector<int>, std::string>> expected = {
      {{}, "1234"},     {{1}, "2134"},    {{2}, "1324"},     {{3}, "1243"},
      {{1, 2}, "3214"}, {{2, 3}, "1432"}, {{1, 3}, "2143"},  {{1, 2, 3}, "4321"},
  };
  for (const auto& [members, oneline] : expected)
    CHECK(fixed_point_permutation(SubsetIndex(4, members)).to_string() == oneline);
}

TEST_CASE("fixed points are involutions and recover their subset") {
  for (int n = 1; n <= 10; ++n) {
    for (const SubsetIndex& a : all_subsets(n)) {
      const Permutation w = fixed_point_permutation(a);
      CHECK(w.inverse() == w);
      CHECK(fixed_point_subset(w) == a);
    }
  }
}

TEST_CASE("v permutation word and composition convention") {
  const VPermutation v = v_permutation(SubsetIndex(4, {1, 2}));
  CHECK(v.word == std::vector<int>{1, 2});
  // Rightmost factor first: s_1(s_2(x)).
  const Permutation expected = Permutation::simple_transposition(4, 1).compose(
      Permutation::simple_transposition(4, 2));
  CHECK(v.perm == expected);
  CHECK(v.perm.to_string() == "2314");

  const VPermutation id = v_permutation(SubsetIndex::empty(4));
  CHECK(id.word.empty());
  CHECK(id.perm == Permutation::identity(4));
}

TEST_CASE("v permutation has Coxeter length |A|") {
  for (int n = 1; n <= 8; ++n)
    for (const SubsetIndex& a : all_subsets(n))
      CHECK(v_permutation(a).perm.length() == a.size());
}

TEST_CASE("subset enumeration order") {
  const auto n2 = all_subsets(2);
  REQUIRE(n2.size() == 2);
  CHECK(n2[0] == SubsetIndex::empty(2));
  CHECK(n2[1] == SubsetIndex(2, {1}));

  CHECK(all_subsets(4).size() == 8);
  CHECK(all_subsets(1).size() == 1);

  for (int n = 1; n <= 9; ++n) {
    const auto subsets = all_subsets(n);
    CHECK(subsets.size() == std::size_t{1} << (n - 1));
    CardLexLess less;
    for (std::size_t i = 0; i + 1 < subsets.size(); ++i)
      CHECK(less(subsets[i], subsets[i + 1]));
    // Inclusion-refining: strict subsets appear strictly earlier.
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      CHECK(subset_position(subsets[i]) == i);
      for (std::size_t j = i + 1; j < subsets.size(); ++j)
        CHECK(!subsets[j].subset_of(subsets[i]));
    }
  }
}

TEST_CASE("subset parsing and rendering") {
  CHECK(parse_subset(5, "{1,2,4}") == SubsetIndex(5, {1, 2, 4}));
  CHECK(parse_subset(5, "1,2,4") == SubsetIndex(5, {1, 2, 4}));
  CHECK(parse_subset(5, "{}") == SubsetIndex::empty(5));
  CHECK(SubsetIndex(5, {1, 2, 4}).to_string() == "{1,2,4}");
  CHECK(SubsetIndex::empty(3).to_string() == "{}");
  CHECK_THROWS_AS(parse_subset(3, "{1,7}"), ParseError);
  CHECK_THROWS_AS(parse_subset(3, "{1,,2}"), ParseError);
  CHECK_THROWS_AS(parse_subset(3, "{1,2"), ParseError);
}

TEST_CASE("permutation parsing and rendering") {
  CHECK(parse_permutation("32154") == fixed_point_permutation(SubsetIndex(5, {1, 2, 4})));
  CHECK(parse_permutation("3,2,1,5,4") == parse_permutation("32154"));
  const SubsetIndex big(11, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const Permutation w = fixed_point_permutation(big);
  CHECK(w.to_string() == "11,10,9,8,7,6,5,4,3,2,1");
  CHECK(parse_permutation(w.to_string()) == w);
  CHECK_THROWS_AS(parse_permutation("1223"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
}

TEST_CASE("stirling numbers") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(4, 2) == count_partitions(4, 2));
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  for (int k = 1; k <= 10; ++k) {
    CHECK(stirling2(k, 1) == 1);
    CHECK(stirling2(k, k) == 1);
  }
}

TEST_CASE("stirling recurrence against enumeration") {
  for (int k = 0; k <= 7; ++k)
    for (int j = 0; j <= k; ++j) CHECK(stirling2(k, j) == count_partitions(k, j));
  for (int k = 0; k <= 9; ++k)
    for (int j = 1; j <= k; ++j)
      CHECK(stirling2(k + 1, j) == j * stirling2(k, j) + stirling2(k, j - 1));
}

TEST_CASE("stirling row sums are Bell numbers") {
  const auto bell = bell_numbers(10);
  for (int k = 0; k <= 10; ++k) {
    BigInt row_sum = 0;
    for (int j = 0; j <= k; ++j) row_sum += stirling2(k, j);
    CHECK(row_sum == bell[k]);
  }
}
