#include "peterson/basis_expansion.hpp"

#include "peterson/errors.hpp"

namespace peterson {

BasisExpansion BasisExpansion::unit(int n) {
  BasisExpansion e(n);
  e.add_term(SubsetIndex::empty(n), UniPoly::constant(1));
  return e;
}

BasisExpansion BasisExpansion::basis_class(const SubsetIndex& a) {
  BasisExpansion e(a.rank());
  e.add_term(a, UniPoly::constant(1));
  return e;
}

UniPoly BasisExpansion::coeff(const SubsetIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? UniPoly::zero() : it->second;
}

void BasisExpansion::add_term(const SubsetIndex& a, const UniPoly& c) {
  if (a.rank() != n_) throw DomainError("expansion term rank mismatch");
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BasisExpansion BasisExpansion::operator+(const BasisExpansion& o) const {
  BasisExpansion e = *this;
  e += o;
  return e;
}

BasisExpansion BasisExpansion::operator-(const BasisExpansion& o) const {
  BasisExpansion e = *this;
  for (const auto& [a, c] : o.terms_) e.add_term(a, -c);
  return e;
}

BasisExpansion& BasisExpansion::operator+=(const BasisExpansion& o) {
  if (o.n_ != n_) throw DomainError("expansion rank mismatch");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

BasisExpansion BasisExpansion::scaled(const UniPoly& c) const {
  BasisExpansion e(n_);
  if (c.is_zero()) return e;
  for (const auto& [a, v] : terms_) e.terms_.emplace(a, v * c);
  return e;
}

BasisExpansion BasisExpansion::scaled(const Rational& c) const {
  return scaled(UniPoly::constant(c));
}

std::string BasisExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    const std::string sym = "p" + a.to_string();
    if (c.is_single_term()) {
      const auto& [k, q] = *c.coeffs().begin();
      const bool negative = q < 0;
      const UniPoly abs_term = UniPoly::term(negative ? Rational(-q) : q, k);
      if (s.empty()) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      if (abs_term == UniPoly::constant(1))
        s += sym;
      else
        s += abs_term.to_string() + "*" + sym;
    } else {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + sym;
    }
  }
  return s;
}

}  // namespace peterson
