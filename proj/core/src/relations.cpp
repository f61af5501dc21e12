#include "peterson/relations.hpp"

#include "peterson/errors.hpp"
#include "peterson/giambelli.hpp"
#include "peterson/monk.hpp"
#include "peterson/restriction.hpp"

namespace peterson {

int class_ring_var_count(int n) {
  if (n < 1) throw DomainError("rank must be positive");
  if (n > 21) throw ResourceCapExceeded("class ring too large at rank " + std::to_string(n));
  return 1 << (n - 1);
}

int class_ring_var(const SubsetIndex& a) {
  if (a.is_empty()) throw DomainError("the empty subset is the constant 1, not a variable");
  return static_cast<int>(subset_position(a));
}

std::string class_ring_to_string(int n, const ClassRingPoly& f) {
  const std::vector<SubsetIndex> subsets = all_subsets(n);
  return f.to_string([&subsets](int v) {
    return v == 0 ? std::string("t") : "P" + subsets[v].to_string();
  });
}

ClassRingPoly monk_relation(int n, int i, const SubsetIndex& a) {
  if (a.rank() != n) throw DomainError("subset rank mismatch");
  const int vars = class_ring_var_count(n);

  Exponents product(vars, 0);
  product[class_ring_var(SubsetIndex::singleton(n, i))] += 1;
  if (!a.is_empty()) product[class_ring_var(a)] += 1;
  ClassRingPoly m = ClassRingPoly::monomial(std::move(product), 1);

  const UniPoly restriction = restrict_generator(n, i, a);
  if (!restriction.is_zero()) {
    Exponents e(vars, 0);
    e[0] = 1;  // the factor t
    if (!a.is_empty()) e[class_ring_var(a)] += 1;
    m.add_term(e, -restriction.coeff(1));
  }

  for (int k = 1; k <= n - 1; ++k) {
    if (a.contains(k)) continue;
    const SubsetIndex b = a.united_with(k);
    const MonkCoefficient c = monk_coefficient(n, i, a, b);
    if (c.is_zero()) continue;
    Exponents e(vars, 0);
    e[class_ring_var(b)] = 1;
    m.add_term(e, Rational(-c.value()));
  }
  return m;
}

MultiPoly giambelli_substitute(int n, const ClassRingPoly& f) {
  const std::vector<SubsetIndex> subsets = all_subsets(n);
  if (f.var_count() != static_cast<int>(subsets.size()))
    throw DomainError("class ring polynomial has wrong variable count for rank");
  MultiPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    // Every class variable maps to a single monomial, so each term stays a
    // single monomial: accumulate exponents and the rational factor.
    Exponents target(n, 0);
    target[0] = e[0];
    Rational coeff = c;
    for (int v = 1; v < f.var_count(); ++v) {
      if (e[v] == 0) continue;
      const SubsetIndex& b = subsets[v];
      for (int rep = 0; rep < e[v]; ++rep) {
        coeff *= giambelli_sigma(b);
        for (int j : b.members()) target[j] += 1;
      }
    }
    out.add_term(target, coeff);
  }
  return out;
}

MultiPoly giambelli_q_relation(int n, int i, const SubsetIndex& a) {
  return giambelli_substitute(n, monk_relation(n, i, a));
}

RelationSet ideal_K(int n) {
  RelationSet k;
  k.n = n;
  for (const SubsetIndex& a : all_subsets(n)) {
    for (int i : a.members()) {
      MultiPoly q = giambelli_q_relation(n, i, a).primitive_integer_form();
      if (q.is_zero()) continue;
      k.relations.push_back(Relation{i, a, RelationKind::GiambelliQ, std::move(q)});
    }
  }
  return k;
}

VanishingReport vanishing_check(int n) {
  VanishingReport report;
  report.n = n;
  for (const SubsetIndex& a : all_subsets(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      if (a.contains(i)) continue;
      ++report.pairs_checked;
      const bool joins_left = a.contains(i - 1);
      const bool joins_right = a.contains(i + 1);
      if (joins_left && joins_right)
        ++report.gluing;
      else if (joins_left)
        ++report.right_extension;
      else if (joins_right)
        ++report.left_extension;
      else
        ++report.singleton;
      if (!giambelli_q_relation(n, i, a).is_zero())
        report.failures.emplace_back(i, a);
    }
  }
  return report;
}

}  // namespace peterson
