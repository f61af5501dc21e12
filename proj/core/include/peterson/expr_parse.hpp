#ifndef PETERSON_EXPR_PARSE_HPP
#define PETERSON_EXPR_PARSE_HPP

#include <string_view>
#include <vector>

namespace peterson {

// Parses a generator monomial "p1^3", "p1*p2", "p2^0*p3" into the multiset
// of factor indices (each index repeated by its exponent).  The grammar is
//   expr   := factor ('*' factor)*
//   factor := 'p' INDEX ('^' EXPONENT)?
// with 1 <= INDEX <= n-1 and EXPONENT >= 0.  The variable t is not part of
// the input language.  Throws ParseError with a position on bad input.
std::vector<int> parse_generator_monomial(int n, std::string_view text);

}  // namespace peterson

#endif  // PETERSON_EXPR_PARSE_HPP
