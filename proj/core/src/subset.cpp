#include "peterson/subset.hpp"

#include <algorithm>
#include <cctype>

#include "peterson/config.hpp"
#include "peterson/errors.hpp"
#include "peterson/numeric.hpp"

namespace peterson {

SubsetIndex::SubsetIndex(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1) throw DomainError("subset rank must be positive");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n - 1)
      throw DomainError("subset member " + std::to_string(members_[i]) +
                        " outside {1.." + std::to_string(n - 1) + "}");
    if (i > 0 && members_[i] == members_[i - 1])
      throw DomainError("duplicate subset member " + std::to_string(members_[i]));
  }
}

SubsetIndex SubsetIndex::interval(int n, int lo, int hi) {
  std::vector<int> m;
  for (int j = lo; j <= hi; ++j) m.push_back(j);
  return SubsetIndex(n, std::move(m));
}

SubsetIndex SubsetIndex::from_mask(int n, std::uint64_t mask) {
  std::vector<int> m;
  for (int j = 1; j <= n - 1; ++j)
    if (mask & (std::uint64_t{1} << (j - 1))) m.push_back(j);
  return SubsetIndex(n, std::move(m));
}

bool SubsetIndex::contains(int j) const {
  return std::binary_search(members_.begin(), members_.end(), j);
}

std::uint64_t SubsetIndex::mask() const {
  std::uint64_t m = 0;
  for (int j : members_) m |= std::uint64_t{1} << (j - 1);
  return m;
}

SubsetIndex SubsetIndex::united_with(int k) const {
  std::vector<int> m = members_;
  m.push_back(k);
  return SubsetIndex(n_, std::move(m));
}

bool SubsetIndex::subset_of(const SubsetIndex& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string SubsetIndex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(members_[i]);
  }
  s += "}";
  return s;
}

bool CardLexLess::operator()(const SubsetIndex& a, const SubsetIndex& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

std::vector<Substring> decompose_substrings(const SubsetIndex& a) {
  std::vector<Substring> out;
  const auto& m = a.members();
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
    out.push_back(Substring{m[i], m[j]});
    i = j + 1;
  }
  return out;
}

namespace {

Substring substring_containing(const SubsetIndex& a, int j) {
  if (!a.contains(j))
    throw DomainError("element " + std::to_string(j) + " not in subset " +
                      a.to_string());
  int lo = j;
  while (a.contains(lo - 1)) --lo;
  int hi = j;
  while (a.contains(hi + 1)) ++hi;
  return Substring{lo, hi};
}

}  // namespace

int head(const SubsetIndex& a, int j) { return substring_containing(a, j).hi; }

int tail(const SubsetIndex& a, int j) { return substring_containing(a, j).lo; }

std::vector<SubsetIndex> all_subsets(int n) {
  return all_subsets(n, config::enumeration_cap());
}

std::vector<SubsetIndex> all_subsets(int n, int enum_cap) {
  if (n < 1) throw DomainError("rank must be positive");
  if (n > enum_cap)
    throw ResourceCapExceeded("rank " + std::to_string(n) +
                              " exceeds enumeration cap " +
                              std::to_string(enum_cap));
  std::vector<SubsetIndex> out;
  out.reserve(std::size_t{1} << (n - 1));
  // Cardinality-major; within each cardinality the standard lexicographic
  // successor on sorted member vectors.
  for (int card = 0; card <= n - 1; ++card) {
    std::vector<int> pick(card);
    for (int i = 0; i < card; ++i) pick[i] = i + 1;
    while (true) {
      out.emplace_back(n, pick);
      int i = card - 1;
      while (i >= 0 && pick[i] == n - 1 - (card - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int r = i + 1; r < card; ++r) pick[r] = pick[r - 1] + 1;
    }
  }
  return out;
}

std::size_t subset_position(const SubsetIndex& a) {
  const int n = a.rank();
  const int card = a.size();
  BigInt pos = 0;
  for (int c = 0; c < card; ++c) pos += binomial(n - 1, c);
  // Lexicographic rank among card-subsets of {1..n-1}: count the sets that
  // branch below each chosen member.
  int prev = 0;
  for (int i = 0; i < card; ++i) {
    for (int v = prev + 1; v < a.members()[i]; ++v)
      pos += binomial(n - 1 - v, card - 1 - i);
    prev = a.members()[i];
  }
  return static_cast<std::size_t>(pos);
}

SubsetIndex parse_subset(int n, std::string_view text) {
  std::size_t pos = 0;
  std::size_t end = text.size();
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unterminated '{'", text.size());
    pos = 1;
    end = text.size() - 1;
  }
  std::vector<int> members;
  while (pos < end) {
    std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected subset member", pos);
    members.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    if (pos < end) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      if (pos == end) throw ParseError("trailing ','", pos);
    }
  }
  try {
    return SubsetIndex(n, std::move(members));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace peterson
