#include "peterson/expr_parse.hpp"

#include <cctype>
#include <cstddef>
#include <string>

#include "peterson/errors.hpp"

namespace peterson {

std::vector<int> parse_generator_monomial(int n, std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_number = [&]() -> int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected number", pos);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty monomial", pos);
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'p') {
      if (pos < text.size() && text[pos] == 't')
        throw ParseError("'t' is not accepted here; expand takes monomials in the p_i only", pos);
      throw ParseError("expected factor 'pI' or 'pI^K'", pos);
    }
    ++pos;
    const std::size_t at = pos;
    const int index = parse_number();
    if (index < 1 || index > n - 1)
      throw ParseError("generator index " + std::to_string(index) + " outside {1.." +
                       std::to_string(n - 1) + "}", at);
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_number();
    }
    for (int r = 0; r < exponent; ++r) factors.push_back(index);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' between factors", pos);
    ++pos;
  }
  return factors;
}

}  // namespace peterson
