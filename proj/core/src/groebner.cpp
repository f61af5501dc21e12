#include "peterson/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "peterson/config.hpp"
#include "peterson/errors.hpp"
#include "peterson/relations.hpp"

namespace peterson {

GroebnerLimits GroebnerLimits::defaults() {
  return GroebnerLimits{config::groebner_max_pairs(), config::groebner_max_degree()};
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
  MultiPoly remainder(f.var_count());
  MultiPoly work = f;
  while (!work.is_zero()) {
    const auto& [lead_exp, lead_coeff] = work.leading_term();
    bool reduced = false;
    for (const MultiPoly& g : divisors) {
      if (g.is_zero()) continue;
      const auto& [g_exp, g_coeff] = g.leading_term();
      if (!exponents_divide(g_exp, lead_exp)) continue;
      const MultiPoly factor = MultiPoly::monomial(
          exponents_sub(lead_exp, g_exp), lead_coeff / g_coeff);
      work -= g * factor;
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lead_exp, lead_coeff);
      work.add_term(lead_exp, -lead_coeff);
    }
  }
  return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const auto& [f_exp, f_coeff] = f.leading_term();
  const auto& [g_exp, g_coeff] = g.leading_term();
  const Exponents l = exponents_lcm(f_exp, g_exp);
  const MultiPoly mf =
      MultiPoly::monomial(exponents_sub(l, f_exp), Rational(1) / f_coeff);
  const MultiPoly mg =
      MultiPoly::monomial(exponents_sub(l, g_exp), Rational(1) / g_coeff);
  return f * mf - g * mg;
}

namespace {

struct PairKey {
  int degree;        // total degree of the leading-term lcm
  Exponents lcm;
  std::size_t i, j;  // indices into the working basis, i < j

  bool operator<(const PairKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    DegRevLexLess less;
    if (less(lcm, o.lcm)) return true;
    if (less(o.lcm, lcm)) return false;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

GroebnerBasis buchberger(int rank, const std::vector<MultiPoly>& generators,
                         const GroebnerLimits& limits) {
  std::vector<MultiPoly> basis;
  for (const MultiPoly& g : generators) {
    if (g.var_count() != rank) throw DomainError("generator rank mismatch");
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) throw DomainError("Buchberger requires a nonzero generator");

  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    const Exponents l =
        exponents_lcm(basis[i].leading_term().first, basis[j].leading_term().first);
    queue.insert(PairKey{total_degree(l), l, i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    const PairKey key = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t i = key.i;
    const std::size_t j = key.j;
    treated.insert({i, j});

    if (++processed > limits.max_pairs)
      throw ResourceCapExceeded("Buchberger pair budget exceeded (" +
                                std::to_string(limits.max_pairs) + ")");
    if (key.degree > limits.max_degree)
      throw ResourceCapExceeded("Buchberger degree budget exceeded (" +
                                std::to_string(limits.max_degree) + ")");

    const Exponents& lm_i = basis[i].leading_term().first;
    const Exponents& lm_j = basis[j].leading_term().first;
    // Coprime criterion: disjoint leading supports give an S-polynomial
    // that reduces to zero.
    if (key.lcm == exponents_add(lm_i, lm_j)) continue;
    // Chain criterion: a third element dividing the lcm whose pairs with i
    // and j were both treated makes this pair redundant.
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || k == j) continue;
      if (!exponents_divide(basis[k].leading_term().first, key.lcm)) continue;
      const auto p1 = std::minmax(i, k);
      const auto p2 = std::minmax(j, k);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
        redundant = true;
    }
    if (redundant) continue;

    const MultiPoly remainder = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (remainder.is_zero()) continue;
    if (remainder.degree() > limits.max_degree)
      throw ResourceCapExceeded("Buchberger degree budget exceeded (" +
                                std::to_string(limits.max_degree) + ")");
    basis.push_back(remainder.monic());
    for (std::size_t m = 0; m + 1 < basis.size(); ++m) enqueue(m, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (exponents_divide(basis[j].leading_term().first,
                           basis[i].leading_term().first)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Fully reduce each element against the others.
  GroebnerBasis result;
  result.rank = rank;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly reduced = others.empty() ? minimal[i] : normal_form(minimal[i], others);
    if (!reduced.is_zero()) result.elements.push_back(reduced.monic());
  }
  std::sort(result.elements.begin(), result.elements.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return DegRevLexLess()(a.leading_term().first, b.leading_term().first);
            });
  return result;
}

bool quadratic_conjecture_check(int n, const GroebnerLimits& limits) {
  const RelationSet k = ideal_K(n);
  if (k.relations.empty()) return true;  // rank 1: nothing to generate
  std::vector<MultiPoly> quadratics;
  for (const Relation& r : k.relations)
    if (r.poly.degree() <= 2) quadratics.push_back(r.poly);
  if (quadratics.empty()) return false;
  const GroebnerBasis gb = buchberger(n, quadratics, limits);
  for (const Relation& r : k.relations)
    if (!normal_form(r.poly, gb.elements).is_zero()) return false;
  return true;
}

}  // namespace peterson
