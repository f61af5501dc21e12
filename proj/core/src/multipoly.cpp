#include "peterson/multipoly.hpp"

#include <cctype>
#include <cstddef>

#include "peterson/errors.hpp"

namespace peterson {

MultiPoly multipoly_zero(int n) { return MultiPoly(n); }

MultiPoly multipoly_constant(int n, Rational c) {
  return MultiPoly::constant(n, std::move(c));
}

MultiPoly multipoly_t(int n) { return MultiPoly::variable(n, 0); }

MultiPoly multipoly_p(int n, int j) {
  if (j < 1 || j > n - 1)
    throw DomainError("generator index " + std::to_string(j) + " outside {1.." +
                      std::to_string(n - 1) + "}");
  return MultiPoly::variable(n, j);
}

std::string multipoly_var_name(int v) {
  return v == 0 ? "t" : "p" + std::to_string(v);
}

std::string multipoly_to_string(const MultiPoly& f) {
  return f.to_string(multipoly_var_name);
}

UniPoly multipoly_substitute_unipoly(const MultiPoly& f,
                                     const std::vector<UniPoly>& p_values) {
  if (static_cast<int>(p_values.size()) != f.var_count() - 1)
    throw DomainError("expected one substitution value per generator");
  std::vector<UniPoly> values;
  values.reserve(f.var_count());
  values.push_back(UniPoly::t());
  values.insert(values.end(), p_values.begin(), p_values.end());
  return f.evaluate<UniPoly>(values, UniPoly::constant(1));
}

namespace {

struct Parser {
  int n;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  int parse_number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected number", pos);
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  Rational parse_coeff() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    return parse_rational(text.substr(start, pos - start));
  }

  // factor := 't' ['^' k] | 'p' j ['^' k]
  void parse_factor(Exponents& e) {
    if (pos >= text.size()) throw ParseError("expected variable", pos);
    int var;
    if (text[pos] == 't') {
      ++pos;
      var = 0;
    } else if (text[pos] == 'p') {
      ++pos;
      const std::size_t at = pos;
      const int j = parse_number();
      if (j < 1 || j > n - 1) throw ParseError("generator index out of range", at);
      var = j;
    } else {
      throw ParseError("expected 't' or 'p'", pos);
    }
    int k = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      k = parse_number();
    }
    e[var] += k;
  }

  MultiPoly parse() {
    MultiPoly result(n);
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
      Rational coeff = 1;
      Exponents e(n, 0);
      bool saw_factor = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = parse_coeff();
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        } else {
          result.add_term(e, sign * coeff);
          skip_ws();
          continue;
        }
      }
      while (true) {
        parse_factor(e);
        saw_factor = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
          continue;
        }
        break;
      }
      if (!saw_factor) throw ParseError("expected term", pos);
      result.add_term(e, sign * coeff);
      skip_ws();
    }
    return result;
  }
};

}  // namespace

MultiPoly parse_multipoly(int n, std::string_view text) {
  Parser p{n, text};
  return p.parse();
}

}  // namespace peterson
