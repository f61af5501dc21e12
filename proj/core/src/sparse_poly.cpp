#include "peterson/sparse_poly.hpp"

#include <algorithm>
#include <cstddef>

#include "peterson/errors.hpp"

namespace peterson {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool exponents_divide(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exponents_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents exponents_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents exponents_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool DegRevLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = a[i] - b[i];
    if (d != 0) return d > 0;  // more of the lowest variable loses the tie
  }
  return false;
}

SparsePoly SparsePoly::constant(int var_count, Rational c) {
  return monomial(Exponents(var_count, 0), std::move(c));
}

SparsePoly SparsePoly::monomial(Exponents e, Rational c) {
  SparsePoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

SparsePoly SparsePoly::variable(int var_count, int index) {
  if (index < 0 || index >= var_count)
    throw DomainError("variable index out of range");
  Exponents e(var_count, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>& SparsePoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (var_count_ != o.var_count_)
    throw DomainError("polynomial rank mismatch: " + std::to_string(var_count_) +
                      " vs " + std::to_string(o.var_count_));
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p(var_count_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly p = *this;
  p += o;
  return p;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly p = *this;
  p -= o;
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly p(var_count_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) p.add_term(exponents_add(ea, eb), ca * cb);
  return p;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly p(var_count_);
  if (c == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

SparsePoly SparsePoly::primitive_integer_form() const {
  if (terms_.empty()) return *this;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : terms_)
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  BigInt num_gcd = 0;
  for (const auto& [e, c] : terms_)
    num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
  return scaled(Rational(den_lcm, num_gcd));
}

SparsePoly SparsePoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / leading_term().second);
}

std::string SparsePoly::to_string(
    const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational abs_c = negative ? Rational(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (int v = 0; v < var_count_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      s += format_rational(abs_c);
    } else {
      if (abs_c != 1) s += format_rational(abs_c) + "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace peterson
