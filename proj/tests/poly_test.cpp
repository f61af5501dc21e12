#include "doctest.h"

#include <random>

#include "peterson/errors.hpp"
#include "peterson/multipoly.hpp"
#include "peterson/numeric.hpp"
#include "peterson/unipoly.hpp"

using namespace peterson;

namespace {

UniPoly random_unipoly(std::mt19937& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  UniPoly p;
  const int terms = deg(rng) + 1;
  for (int i = 0; i < terms; ++i)
    p += UniPoly::term(Rational(num(rng), den(rng)), deg(rng));
  return p;
}

MultiPoly random_multipoly(std::mt19937& rng, int n, int max_degree = 3) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> nterms(1, 5);
  MultiPoly p(n);
  const int terms = nterms(rng);
  for (int i = 0; i < terms; ++i) {
    Exponents e(n, 0);
    int budget = max_degree;
    for (int v = 0; v < n && budget > 0; ++v) {
      e[v] = std::min(exp(rng), budget);
      budget -= e[v];
    }
    p.add_term(e, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("7/21") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK(factorial(6) == 720);
}

TEST_CASE("unipoly arithmetic basics") {
  const UniPoly t = UniPoly::t();
  CHECK(t + t == UniPoly::term(2, 1));
  CHECK(UniPoly::term(2, 1) * UniPoly::term(3, 1) == UniPoly::term(6, 2));
  std::mt19937 rng(1);
  CHECK((UniPoly::zero() * random_unipoly(rng)).is_zero());
  CHECK(UniPoly::term(1, 2).degree() == 2);
  CHECK(UniPoly::zero().degree() == -1);
}

TEST_CASE("unipoly exact division") {
  CHECK(UniPoly::term(6, 3).div_exact(UniPoly::term(2, 1)) == UniPoly::term(3, 2));
  const UniPoly t2_plus_t = UniPoly::term(1, 2) + UniPoly::t();
  CHECK(t2_plus_t.div_exact(UniPoly::t()) == UniPoly::t() + UniPoly::constant(1));
  CHECK_THROWS_AS((UniPoly::t() + UniPoly::constant(1)).div_exact(UniPoly::t()),
                  InexactDivision);
  CHECK_THROWS_AS(UniPoly::t().div_exact(UniPoly::zero()), DomainError);
}

TEST_CASE("unipoly ring axioms, randomized") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    const UniPoly a = random_unipoly(rng);
    const UniPoly b = random_unipoly(rng);
    const UniPoly c = random_unipoly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
    // Exactness cross-check by evaluation.
    for (int x = 1; x <= 3; ++x)
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("unipoly rendering and parsing") {
  CHECK(UniPoly::term(2, 1).to_string() == "2*t");
  CHECK(UniPoly::term(1, 2).to_string() == "t^2");
  CHECK(UniPoly::zero().to_string() == "0");
  CHECK(UniPoly::term(Rational(-1, 2), 1).to_string() == "-1/2*t");
  const UniPoly mixed = UniPoly::term(3, 2) - UniPoly::t() + UniPoly::constant(Rational(1, 4));
  CHECK(mixed.to_string() == "3*t^2 - t + 1/4");
  CHECK(parse_unipoly(mixed.to_string()) == mixed);
  CHECK(parse_unipoly("0") == UniPoly::zero());
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const UniPoly p = random_unipoly(rng);
    CHECK(parse_unipoly(p.to_string()) == p);
  }
  CHECK_THROWS_AS(parse_unipoly("2**t"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("t^"), ParseError);
}

TEST_CASE("degrevlex order") {
  // n = 4: variables t, p1, p2, p3 in increasing precedence.
  DegRevLexLess less;
  const Exponents t_p1 = {1, 1, 0, 0};
  const Exponents p1_sq = {0, 2, 0, 0};
  const Exponents p1p2 = {0, 1, 1, 0};
  const Exponents p1p2p3 = {0, 1, 1, 1};
  CHECK(less(t_p1, p1_sq));   // t is the smallest variable
  CHECK(less(p1_sq, p1p2));   // fewer copies of the small variable wins
  CHECK(less(p1p2, p1p2p3));  // total degree dominates
  CHECK(!less(p1p2, p1p2));
}

TEST_CASE("multipoly arithmetic and the worked scaling example") {
  const int n = 4;
  const MultiPoly p1 = multipoly_p(n, 1);
  const MultiPoly p2 = multipoly_p(n, 2);
  CHECK(multipoly_to_string(p1 * p2) == "p1*p2");
  std::mt19937 rng(3);
  const MultiPoly q = random_multipoly(rng, n);
  CHECK(q + multipoly_zero(n) == q);

  const MultiPoly big = parse_multipoly(n, "2*p1^2 - 2*t*p1 - p1*p2");
  const MultiPoly half = big.scaled(Rational(1, 2));
  CHECK(half == parse_multipoly(n, "p1^2 - t*p1 - 1/2*p1*p2"));
  CHECK_THROWS_AS(half + multipoly_zero(3), DomainError);
}

TEST_CASE("multipoly ring axioms, randomized") {
  std::mt19937 rng(99);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + round % 4;
    const MultiPoly a = random_multipoly(rng, n);
    const MultiPoly b = random_multipoly(rng, n);
    const MultiPoly c = random_multipoly(rng, n);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("multipoly rendering and parsing round trip") {
  const MultiPoly f = parse_multipoly(4, "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3");
  CHECK(parse_multipoly(4, multipoly_to_string(f)) == f);
  CHECK(multipoly_to_string(multipoly_zero(4)) == "0");
  std::mt19937 rng(41);
  for (int round = 0; round < 100; ++round) {
    const MultiPoly p = random_multipoly(rng, 2 + round % 5);
    CHECK(parse_multipoly(p.var_count(), multipoly_to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_multipoly(4, "p9"), ParseError);
  CHECK_THROWS_AS(parse_multipoly(4, "p1 + + p2"), ParseError);
}

TEST_CASE("primitive integer form") {
  const MultiPoly f = parse_multipoly(4, "1/2*p1^2*p2 - t*p1*p2 - 1/6*p1*p2*p3");
  CHECK(f.primitive_integer_form() ==
        parse_multipoly(4, "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3"));
  const MultiPoly g = parse_multipoly(2, "4*p1^2 - 2*t*p1");
  CHECK(g.primitive_integer_form() == parse_multipoly(2, "2*p1^2 - t*p1"));
  // Sign of the input is preserved.
  CHECK((-g).primitive_integer_form() == -(g.primitive_integer_form()));
}

TEST_CASE("multipoly substitution into the fixed point ring") {
  // f = p1^2 - t*p1 at n = 2, evaluated with p1 -> t gives 0.
  const MultiPoly f = parse_multipoly(2, "p1^2 - t*p1");
  CHECK(multipoly_substitute_unipoly(f, {UniPoly::t()}).is_zero());
  CHECK(multipoly_substitute_unipoly(f, {UniPoly::constant(3)}) ==
        UniPoly::constant(9) - UniPoly::term(3, 1));
}
