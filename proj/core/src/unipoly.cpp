#include "peterson/unipoly.hpp"

#include <cctype>
#include <cstddef>

#include "peterson/errors.hpp"

namespace peterson {

UniPoly UniPoly::constant(Rational c) { return term(std::move(c), 0); }

UniPoly UniPoly::term(Rational c, int k) {
  if (k < 0) throw DomainError("negative exponent of t");
  UniPoly p;
  if (c != 0) p.coeffs_[k] = std::move(c);
  return p;
}

Rational UniPoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void UniPoly::add_term(int k, const Rational& c) {
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

UniPoly UniPoly::operator-() const {
  UniPoly p;
  for (const auto& [k, c] : coeffs_) p.coeffs_.emplace(k, -c);
  return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly p = *this;
  p += o;
  return p;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly p = *this;
  p -= o;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  return *this;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly p;
  for (const auto& [ka, ca] : coeffs_)
    for (const auto& [kb, cb] : o.coeffs_) p.add_term(ka + kb, ca * cb);
  return p;
}

UniPoly UniPoly::scaled(const Rational& c) const {
  UniPoly p;
  if (c == 0) return p;
  for (const auto& [k, v] : coeffs_) p.coeffs_.emplace(k, v * c);
  return p;
}

Rational UniPoly::evaluate(const Rational& x) const {
  // Horner over the sparse representation, highest exponent first.
  Rational acc = 0;
  int prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - it->first; ++i) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) acc *= x;
  return acc;
}

UniPoly UniPoly::div_exact(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division of UniPoly by zero");
  UniPoly rem = *this;
  UniPoly quot;
  const int d_deg = divisor.degree();
  const Rational& d_lead = divisor.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    const int r_deg = rem.degree();
    if (r_deg < d_deg)
      throw InexactDivision("no exact quotient of " + to_string() + " by " +
                            divisor.to_string());
    const Rational c = rem.coeffs_.rbegin()->second / d_lead;
    const int k = r_deg - d_deg;
    quot.add_term(k, c);
    rem -= divisor * term(c, k);
  }
  return quot;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = c < 0;
    const Rational abs_c = negative ? Rational(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (k == 0) {
      s += format_rational(abs_c);
    } else {
      if (abs_c != 1) s += format_rational(abs_c) + "*";
      s += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  return s;
}

UniPoly parse_unipoly(std::string_view text) {
  UniPoly result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;
    // term := rational ['*' tpow] | tpow
    Rational coeff = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      coeff = parse_rational(text.substr(start, pos - start));
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      } else {
        result += UniPoly::term(sign * coeff, 0);
        skip_ws();
        continue;
      }
    }
    if (pos >= text.size() || text[pos] != 't')
      throw ParseError(saw_coeff ? "expected 't' after '*'" : "expected term", pos);
    ++pos;
    int k = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected exponent after '^'", pos);
      k = std::stoi(std::string(text.substr(start, pos - start)));
    }
    result += UniPoly::term(sign * coeff, k);
    skip_ws();
  }
  return result;
}

}  // namespace peterson
