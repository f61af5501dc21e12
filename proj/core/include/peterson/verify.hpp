#ifndef PETERSON_VERIFY_HPP
#define PETERSON_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "peterson/groebner.hpp"

namespace peterson {

struct VerifyFailure {
  std::string identifier;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  int n = 1;
  std::size_t total_checks = 0;
  std::vector<VerifyFailure> failures;
  double wall_ms = 0.0;
  // True when a resource cap prevented an answer; neither pass nor fail.
  bool undetermined = false;
  std::string note;

  bool passed() const { return failures.empty() && !undetermined; }
};

// Monk formula vs localization oracle over every (i, A) at rank n.
VerifyReport verify_monk_oracle(int n, int jobs = 1);

// sigma(A) * prod p_j == p_A for every subset at rank n.
VerifyReport verify_giambelli(int n, int jobs = 1);

// p_1^k by iterated Monk vs the Stirling closed form, k = 1..n-1.
VerifyReport verify_stirling(int n);

// q_{i,A} == 0 for every i not in A, all four substring cases covered.
VerifyReport verify_vanishing(int n);

// Restrictions of each p_A agree between rank n+1 and rank n.
VerifyReport verify_stability(int n, int jobs = 1);

// ideal_K(4) against the known 12-generator presentation (multiset match up
// to positive scaling) plus the redundancy of generators 6 and 7 modulo
// generators 1 and 3.
VerifyReport verify_golden_n4();

// Quadratic generation of ideal_K(n) via Buchberger.
VerifyReport verify_quadratic(int n, const GroebnerLimits& limits = GroebnerLimits::defaults());

// Dispatch by suite name: monk-oracle, giambelli, stirling, vanishing,
// stability, golden-n4, quadratic.  Throws DomainError for unknown names.
VerifyReport run_verify_suite(const std::string& suite, int n, int jobs = 1);

const std::vector<std::string>& verify_suite_names();

// The 12 generators of ideal_K(4), in the canonical input syntax.
const std::vector<std::string>& golden_n4_generators();

}  // namespace peterson

#endif  // PETERSON_VERIFY_HPP
