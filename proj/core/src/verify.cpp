#include "peterson/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "peterson/errors.hpp"
#include "peterson/expansion.hpp"
#include "peterson/giambelli.hpp"
#include "peterson/localization.hpp"
#include "peterson/monk.hpp"
#include "peterson/relations.hpp"
#include "peterson/restriction.hpp"
#include "peterson/stirling.hpp"

namespace peterson {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs fn(index) for every index, fanning out over `jobs` threads.  Results
// are merged in index order, so output is deterministic regardless of
// scheduling.  The first worker exception is rethrown after the join.
void parallel_indices(std::size_t count, int jobs,
                      const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

VerifyReport verify_monk_oracle(int n, int jobs) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "monk-oracle";
  report.n = n;

  const std::vector<SubsetIndex> subsets = all_subsets(n);
  std::vector<LocalizedClass> generator_loc;
  for (int i = 1; i <= n - 1; ++i)
    generator_loc.push_back(
        localize(BasisExpansion::basis_class(SubsetIndex::singleton(n, i))));

  const std::size_t pair_count = subsets.size() * std::max(0, n - 1);
  std::vector<std::vector<VerifyFailure>> failures(pair_count);
  parallel_indices(pair_count, jobs, [&](std::size_t idx) {
    const int i = 1 + static_cast<int>(idx / subsets.size());
    const SubsetIndex& a = subsets[idx % subsets.size()];
    const BasisExpansion from_oracle = expand_localized(pointwise_product(
        generator_loc[i - 1], localize(BasisExpansion::basis_class(a))));
    const BasisExpansion from_monk = monk_product(n, i, a);
    if (from_oracle != from_monk)
      failures[idx].push_back(VerifyFailure{
          "p" + std::to_string(i) + " * p" + a.to_string(),
          from_oracle.to_string(), from_monk.to_string()});
  });
  report.total_checks = pair_count;
  for (auto& f : failures)
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerifyReport verify_giambelli(int n, int jobs) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "giambelli";
  report.n = n;

  const std::vector<SubsetIndex> subsets = all_subsets(n);
  std::vector<std::vector<VerifyFailure>> failures(subsets.size());
  parallel_indices(subsets.size(), jobs, [&](std::size_t idx) {
    const SubsetIndex& a = subsets[idx];
    if (!giambelli_verify(n, a))
      failures[idx].push_back(VerifyFailure{
          "p" + a.to_string(), "1*p" + a.to_string(),
          expand_monomial(n, a.members()).scaled(giambelli_sigma(a)).to_string()});
  });
  report.total_checks = subsets.size();
  for (auto& f : failures)
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerifyReport verify_stirling(int n) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "stirling";
  report.n = n;

  if (stirling2(3, 2) != 3)
    report.failures.push_back(
        VerifyFailure{"S(3,2)", "3", stirling2(3, 2).str()});
  ++report.total_checks;

  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> factors(k, 1);
    const BasisExpansion lhs = expand_monomial(n, factors);
    const BasisExpansion rhs = stirling_expansion(n, k);
    ++report.total_checks;
    if (lhs != rhs)
      report.failures.push_back(VerifyFailure{"p1^" + std::to_string(k),
                                              rhs.to_string(), lhs.to_string()});
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerifyReport verify_vanishing(int n) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "vanishing";
  report.n = n;

  const VanishingReport v = vanishing_check(n);
  report.total_checks = v.pairs_checked;
  for (const auto& [i, a] : v.failures)
    report.failures.push_back(
        VerifyFailure{"q_{" + std::to_string(i) + "," + a.to_string() + "}", "0",
                      multipoly_to_string(giambelli_q_relation(n, i, a))});
  report.note = "cases: singleton " + std::to_string(v.singleton) +
                ", right-extension " + std::to_string(v.right_extension) +
                ", left-extension " + std::to_string(v.left_extension) +
                ", gluing " + std::to_string(v.gluing);
  // All four structural cases must actually occur once the rank allows them.
  if (n >= 5 && !v.all_cases_seen())
    report.failures.push_back(VerifyFailure{"case coverage", "all four cases", report.note});
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerifyReport verify_stability(int n, int jobs) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "stability";
  report.n = n;

  const std::vector<SubsetIndex> subsets = all_subsets(n);
  std::vector<std::vector<VerifyFailure>> failures(subsets.size());
  std::vector<std::size_t> checks(subsets.size(), 0);
  parallel_indices(subsets.size(), jobs, [&](std::size_t idx) {
    const SubsetIndex& a = subsets[idx];
    const BasisExpansion lifted =
        BasisExpansion::basis_class(a.with_rank(n + 1));
    const BasisExpansion restricted = stability_restrict(lifted);
    for (const SubsetIndex& b : all_subsets(n)) {
      ++checks[idx];
      const UniPoly high = restrict_class(lifted, b.with_rank(n + 1));
      const UniPoly low = restrict_class(restricted, b);
      if (high != low)
        failures[idx].push_back(
            VerifyFailure{"p" + a.to_string() + " at w" + b.to_string(),
                          high.to_string(), low.to_string()});
    }
  });
  for (std::size_t c : checks) report.total_checks += c;
  for (auto& f : failures)
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  report.wall_ms = elapsed_ms(start);
  return report;
}

const std::vector<std::string>& golden_n4_generators() {
  static const std::vector<std::string> generators = {
      "2*p1^2 - 2*t*p1 - p1*p2",
      "2*p2^2 - 2*t*p2 - p1*p2 - p2*p3",
      "2*p3^2 - 2*t*p3 - p2*p3",
      "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3",
      "3*p1*p2^2 - 6*t*p1*p2 - 2*p1*p2*p3",
      "2*p1^2*p3 - 2*t*p1*p3 - p1*p2*p3",
      "2*p1*p3^2 - 2*t*p1*p3 - p1*p2*p3",
      "3*p2^2*p3 - 6*t*p2*p3 - 2*p1*p2*p3",
      "3*p2*p3^2 - 6*t*p2*p3 - p1*p2*p3",
      "p1^2*p2*p3 - 3*t*p1*p2*p3",
      "p1*p2^2*p3 - 4*t*p1*p2*p3",
      "p1*p2*p3^2 - 3*t*p1*p2*p3",
  };
  return generators;
}

VerifyReport verify_golden_n4() {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "golden-n4";
  report.n = 4;

  std::vector<MultiPoly> expected;
  for (const std::string& s : golden_n4_generators())
    expected.push_back(parse_multipoly(4, s).primitive_integer_form());

  const RelationSet k = ideal_K(4);
  std::vector<MultiPoly> actual;
  for (const Relation& r : k.relations) actual.push_back(r.poly.primitive_integer_form());

  ++report.total_checks;
  if (actual.size() != expected.size()) {
    report.failures.push_back(VerifyFailure{"generator count",
                                            std::to_string(expected.size()),
                                            std::to_string(actual.size())});
  } else {
    // Multiset comparison up to positive scaling: primitive integer forms
    // with the definition's sign are unique representatives.
    auto key = [](const MultiPoly& f) { return multipoly_to_string(f); };
    std::vector<std::string> lhs, rhs;
    for (const auto& f : expected) lhs.push_back(key(f));
    for (const auto& f : actual) rhs.push_back(key(f));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      report.failures.push_back(VerifyFailure{"generator multiset", "12 known generators",
                                              "divergent ideal_K(4) output"});
  }

  // Generators 6 and 7 are multiples of generators 1 and 3.
  const std::vector<MultiPoly> reducers = {expected[0], expected[2]};
  for (int idx : {5, 6}) {
    ++report.total_checks;
    const MultiPoly nf = normal_form(expected[idx], reducers);
    if (!nf.is_zero())
      report.failures.push_back(
          VerifyFailure{"generator " + std::to_string(idx + 1) +
                            " modulo generators 1 and 3",
                        "0", multipoly_to_string(nf)});
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerifyReport verify_quadratic(int n, const GroebnerLimits& limits) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "quadratic";
  report.n = n;
  ++report.total_checks;
  try {
    if (!quadratic_conjecture_check(n, limits))
      report.failures.push_back(
          VerifyFailure{"quadratic generation at n=" + std::to_string(n), "true", "false"});
  } catch (const ResourceCapExceeded& e) {
    report.undetermined = true;
    report.note = e.what();
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "monk-oracle", "giambelli", "stirling",  "vanishing",
      "stability",   "golden-n4", "quadratic",
  };
  return names;
}

VerifyReport run_verify_suite(const std::string& suite, int n, int jobs) {
  if (suite == "monk-oracle") return verify_monk_oracle(n, jobs);
  if (suite == "giambelli") return verify_giambelli(n, jobs);
  if (suite == "stirling") return verify_stirling(n);
  if (suite == "vanishing") return verify_vanishing(n);
  if (suite == "stability") return verify_stability(n, jobs);
  if (suite == "golden-n4") {
    if (n != 4) throw DomainError("the golden-n4 suite runs at n=4");
    return verify_golden_n4();
  }
  if (suite == "quadratic") return verify_quadratic(n);
  throw DomainError("unknown verification suite '" + suite + "'");
}

}  // namespace peterson
