#include "peterson/numeric.hpp"

#include <cctype>
#include <cstddef>

#include "peterson/errors.hpp"

namespace peterson {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i) * i! / i!
  }
  return r;
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto parse_int = [&text, &pos]() -> BigInt {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected integer", start);
    return BigInt(std::string(text.substr(start, pos - start)));
  };
  BigInt num = parse_int();
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int();
    if (den == 0) throw ParseError("zero denominator", pos - 1);
  }
  if (pos != text.size()) throw ParseError("trailing characters after rational", pos);
  return Rational(num, den);
}

}  // namespace peterson
