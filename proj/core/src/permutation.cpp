#include "peterson/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "peterson/errors.hpp"

namespace peterson {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = static_cast<int>(oneline_.size());
  if (n < 1) throw DomainError("permutation rank must be positive");
  std::vector<bool> seen(n + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > n || seen[v])
      throw DomainError("one-line notation is not a bijection of {1.." +
                        std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i > n - 1)
    throw DomainError("simple transposition index " + std::to_string(i) +
                      " outside {1.." + std::to_string(n - 1) + "}");
  Permutation p = identity(n);
  std::swap(p.oneline_[i - 1], p.oneline_[i]);
  return p;
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > rank()) throw DomainError("permutation argument out of range");
  return oneline_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(oneline_.size());
  for (int x = 1; x <= rank(); ++x) inv[oneline_[x - 1] - 1] = x;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (rank() != other.rank()) throw DomainError("composing permutations of different rank");
  std::vector<int> v(oneline_.size());
  for (int x = 1; x <= rank(); ++x) v[x - 1] = oneline_[other.oneline_[x - 1] - 1];
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < oneline_.size(); ++i)
    for (std::size_t j = i + 1; j < oneline_.size(); ++j)
      if (oneline_[i] > oneline_[j]) ++inv;
  return inv;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < oneline_.size(); ++i) {
    if (rank() > 9 && i > 0) s += ",";
    s += std::to_string(oneline_[i]);
  }
  return s;
}

Permutation fixed_point_permutation(const SubsetIndex& a) {
  const int n = a.rank();
  std::vector<int> winv;
  winv.reserve(n);
  int lo = 1;
  while (lo <= n) {
    int hi = lo;
    while (hi < n && a.contains(hi)) ++hi;  // bond i joins i and i+1
    for (int v = hi; v >= lo; --v) winv.push_back(v);
    lo = hi + 1;
  }
  return Permutation(std::move(winv)).inverse();
}

SubsetIndex fixed_point_subset(const Permutation& w) {
  const Permutation winv = w.inverse();
  std::vector<int> members;
  for (int i = 1; i <= w.rank() - 1; ++i)
    if (winv(i) == winv(i + 1) + 1) members.push_back(i);
  return SubsetIndex(w.rank(), std::move(members));
}

VPermutation v_permutation(const SubsetIndex& a) {
  const int n = a.rank();
  VPermutation v;
  v.word = a.members();
  v.perm = Permutation::identity(n);
  // Rightmost factor first: fold s_{j_1} o (s_{j_2} o (... o s_{j_m})).
  for (auto it = v.word.rbegin(); it != v.word.rend(); ++it)
    v.perm = Permutation::simple_transposition(n, *it).compose(v.perm);
  return v;
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw ParseError("empty permutation", 0);
  std::vector<int> oneline;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
        throw ParseError("expected digit 1-9 in one-line notation", i);
      oneline.push_back(text[i] - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected integer", pos);
      oneline.push_back(std::stoi(std::string(text.substr(start, pos - start))));
      if (pos < text.size()) {
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
      }
    }
  }
  try {
    return Permutation(std::move(oneline));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace peterson
