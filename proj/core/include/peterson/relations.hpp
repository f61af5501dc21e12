#ifndef PETERSON_RELATIONS_HPP
#define PETERSON_RELATIONS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "peterson/multipoly.hpp"
#include "peterson/sparse_poly.hpp"
#include "peterson/subset.hpp"

namespace peterson {

// The Monk relations live in the polynomial ring with one abstract variable
// per nonempty subset (the class P_A) next to t; the empty subset is the
// identity class and is represented by the constant 1.  Variable 0 is t and
// variable s >= 1 is the class whose subset sits at enumeration position s,
// so var_count == 2^(n-1).
using ClassRingPoly = SparsePoly;

int class_ring_var_count(int n);
// Variable index of P_A; throws for the empty subset.
int class_ring_var(const SubsetIndex& a);
std::string class_ring_to_string(int n, const ClassRingPoly& f);

// m_{i,A} = P_{i} P_A - p_i(w_A) P_A - sum_B c^B_{i,A} P_B over the class
// variables.  Identically zero when A is empty and i is its own Monk target.
ClassRingPoly monk_relation(int n, int i, const SubsetIndex& a);

// Substitutes every class variable P_B by sigma(B) prod_{j in B} p_j.
MultiPoly giambelli_substitute(int n, const ClassRingPoly& f);

// q_{i,A}: the image of m_{i,A} under the Giambelli substitution, a
// polynomial in t, p_1, ..., p_{n-1}.
MultiPoly giambelli_q_relation(int n, int i, const SubsetIndex& a);

enum class RelationKind { MonkM, GiambelliQ };

struct Relation {
  int i;
  SubsetIndex a;
  RelationKind kind;
  MultiPoly poly;
};

struct RelationSet {
  int n = 1;
  std::vector<Relation> relations;
};

// The defining ideal: all q_{i,A} with i in A (those with i not in A vanish
// identically), swept in enumeration order of A with i ascending.  Each
// generator is scaled to primitive integer coefficients; the sign of the
// definition is kept, so the p_i * prod_{j in A} p_j term stays positive.
RelationSet ideal_K(int n);

struct VanishingReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  // Counts by the shape A u {i} takes: i isolated, i extending a substring
  // right or left, i gluing two substrings.
  std::size_t singleton = 0;
  std::size_t right_extension = 0;
  std::size_t left_extension = 0;
  std::size_t gluing = 0;
  std::vector<std::pair<int, SubsetIndex>> failures;

  bool passed() const { return failures.empty(); }
  bool all_cases_seen() const {
    return singleton > 0 && right_extension > 0 && left_extension > 0 && gluing > 0;
  }
};

// Checks q_{i,A} == 0 for every pair with i not in A.
VanishingReport vanishing_check(int n);

}  // namespace peterson

#endif  // PETERSON_RELATIONS_HPP
