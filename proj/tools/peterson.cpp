// Command-line interface for the Peterson Schubert calculus library:
// fixed-point listings, Monk products, Giambelli coefficients, basis
// expansions, fixed-point restrictions, localizations, the ring
// presentation and the verification suites.
//
// Exit codes: 0 success/pass, 1 verification failure or internal error,
// 2 usage or parse error, 3 resource cap exceeded.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "peterson/config.hpp"
#include "peterson/errors.hpp"
#include "peterson/expansion.hpp"
#include "peterson/expr_parse.hpp"
#include "peterson/giambelli.hpp"
#include "peterson/groebner.hpp"
#include "peterson/json_io.hpp"
#include "peterson/localization.hpp"
#include "peterson/monk.hpp"
#include "peterson/permutation.hpp"
#include "peterson/relations.hpp"
#include "peterson/restriction.hpp"
#include "peterson/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

constexpr int kDefaultSweepCap = 12;    // 2^11 fixed points
constexpr int kDefaultGroebnerCap = 6;  // presentation / quadratic check

struct Options {
  std::string format = "text";

  bool json() const { return format == "json"; }
};

void emit(const nlohmann::json& j) { std::cout << peterson::canonical_dump(j); }

std::string word_to_string(const std::vector<int>& word) {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(word[i]);
  }
  return s + ")";
}

int run_fixed_points(int n, const Options& opt) {
  if (opt.json()) {
    emit(peterson::fixed_points_to_json(n));
    return kExitPass;
  }
  for (const peterson::SubsetIndex& a : peterson::all_subsets(n)) {
    const peterson::VPermutation v = peterson::v_permutation(a);
    std::cout << a.to_string() << "\t"
              << peterson::fixed_point_permutation(a).to_string() << "\t"
              << word_to_string(v.word) << "\n";
  }
  return kExitPass;
}

int run_monk(int n, int i, const std::string& subset, const Options& opt) {
  const peterson::SubsetIndex a = peterson::parse_subset(n, subset);
  const peterson::BasisExpansion e = peterson::monk_product(n, i, a);
  if (opt.json())
    emit(peterson::expansion_to_json(e));
  else
    std::cout << e.to_string() << "\n";
  return kExitPass;
}

int run_giambelli(int n, const std::string& subset, const Options& opt) {
  const peterson::SubsetIndex a = peterson::parse_subset(n, subset);
  const peterson::Rational sigma = peterson::giambelli_sigma(a);
  const peterson::MultiPoly monomial = peterson::giambelli_monomial(a);
  if (opt.json()) {
    emit(nlohmann::json{{"n", n},
                        {"subset", a.members()},
                        {"sigma", peterson::format_rational(sigma)},
                        {"monomial", peterson::multipoly_to_string(monomial)}});
  } else {
    std::cout << "sigma(" << a.to_string()
              << ") = " << peterson::format_rational(sigma) << "\n";
    std::cout << "p" << a.to_string() << " = "
              << peterson::multipoly_to_string(monomial) << "\n";
  }
  return kExitPass;
}

int run_expand(int n, const std::string& expr, const Options& opt) {
  const std::vector<int> factors = peterson::parse_generator_monomial(n, expr);
  const peterson::BasisExpansion e = peterson::expand_monomial(n, factors);
  if (opt.json())
    emit(peterson::expansion_to_json(e));
  else
    std::cout << e.to_string() << "\n";
  return kExitPass;
}

int run_restrict(int n, const std::string& class_subset,
                 const std::string& point_subset, const Options& opt) {
  const peterson::SubsetIndex a = peterson::parse_subset(n, class_subset);
  const peterson::SubsetIndex b = peterson::parse_subset(n, point_subset);
  const peterson::UniPoly value = peterson::restrict_basis_class(a, b);
  if (opt.json()) {
    emit(nlohmann::json{{"n", n},
                        {"class_subset", a.members()},
                        {"fixed_point", b.members()},
                        {"value", value.to_string()}});
  } else {
    std::cout << "p" << a.to_string() << "(w" << b.to_string()
              << ") = " << value.to_string() << "\n";
  }
  return kExitPass;
}

int run_localize(int n, const std::string& subset, const Options& opt) {
  const peterson::SubsetIndex a = peterson::parse_subset(n, subset);
  const peterson::LocalizedClass f =
      peterson::localize(peterson::BasisExpansion::basis_class(a));
  if (opt.json()) {
    emit(peterson::localized_to_json(f));
    return kExitPass;
  }
  for (const peterson::SubsetIndex& b : peterson::all_subsets(n))
    std::cout << b.to_string() << "\t" << f.value(b).to_string() << "\n";
  return kExitPass;
}

int run_presentation(int n, bool quadratic_only, int cap, const Options& opt) {
  if (n > cap)
    throw peterson::ResourceCapExceeded(
        "presentation rank " + std::to_string(n) + " exceeds cap " +
        std::to_string(cap) + " (raise with --cap)");
  const peterson::RelationSet k = peterson::ideal_K(n);
  std::string flag = "undetermined";
  try {
    flag = peterson::quadratic_conjecture_check(n) ? "true" : "false";
  } catch (const peterson::ResourceCapExceeded&) {
    // leave undetermined
  }
  if (opt.json()) {
    emit(peterson::presentation_to_json(k, flag, quadratic_only));
    return kExitPass;
  }
  std::size_t shown = 0;
  for (const peterson::Relation& r : k.relations) {
    if (quadratic_only && r.poly.degree() > 2) continue;
    ++shown;
    std::cout << "q[" << r.i << "," << r.a.to_string()
              << "] = " << peterson::multipoly_to_string(r.poly) << "\n";
  }
  std::cout << "generators: " << shown << "\n";
  std::cout << "quadratic_conjecture: " << flag << "\n";
  return kExitPass;
}

int run_verify(int n, const std::string& suite, int jobs, int cap,
               const Options& opt) {
  // Unset cap: 12 for enumeration sweeps, 6 where a Groebner run is involved.
  const int effective_cap =
      cap > 0 ? cap
              : ((suite == "quadratic" || suite == "golden-n4") ? kDefaultGroebnerCap
                                                                : kDefaultSweepCap);
  if (n > effective_cap)
    throw peterson::ResourceCapExceeded(
        "suite '" + suite + "' at rank " + std::to_string(n) + " exceeds cap " +
        std::to_string(effective_cap) + " (raise with --cap)");
  const peterson::VerifyReport report = peterson::run_verify_suite(suite, n, jobs);
  if (opt.json()) {
    emit(peterson::report_to_json(report));
  } else {
    std::cout << "suite " << report.suite << " at n=" << report.n << ": "
              << report.total_checks << " checks, " << report.failures.size()
              << " failures";
    if (report.undetermined) std::cout << " [UNDETERMINED]";
    std::cout << (report.passed() ? " [PASS]" : (report.undetermined ? "" : " [FAIL]"))
              << " (" << report.wall_ms << " ms)\n";
    if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
    for (const peterson::VerifyFailure& f : report.failures)
      std::cout << "  " << f.identifier << ": expected " << f.expected << ", got "
                << f.actual << "\n";
  }
  if (report.undetermined) return kExitResourceCap;
  return report.passed() ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Schubert calculus for type A Peterson varieties:\n"
      "fixed points, Monk products, Giambelli coefficients, basis\n"
      "expansions, localization and the ring presentation.\n\n"
      "Subsets are written {1,2,4} (or 1,2,4); expand takes monomials\n"
      "in the generators, e.g. p1^3 or p1*p2 (the class 't' never\n"
      "appears in inputs).  Resource caps honor PETERSON_ENUM_CAP,\n"
      "PETERSON_GB_MAX_PAIRS and PETERSON_GB_MAX_DEGREE."};
  app.require_subcommand(1);

  Options opt;
  int n = 4;
  int index = 1;
  int jobs = 1;
  int cap = 0;  // 0 = per-suite default
  int presentation_cap = kDefaultGroebnerCap;
  std::string subset;
  std::string point;
  std::string expr;
  std::string suite;
  bool quadratic_only = false;

  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* fixed = app.add_subcommand("fixed-points", "List all fixed points w_A");
  fixed->add_option("n", n, "Rank")->required();
  add_format(fixed);

  CLI::App* monk = app.add_subcommand("monk", "Expand the product p_i * p_A");
  monk->add_option("n", n, "Rank")->required();
  monk->add_option("i", index, "Generator index")->required();
  monk->add_option("A", subset, "Subset, e.g. {1,2}")->required();
  add_format(monk);

  CLI::App* giambelli =
      app.add_subcommand("giambelli", "Giambelli coefficient and monomial of p_A");
  giambelli->add_option("n", n, "Rank")->required();
  giambelli->add_option("A", subset, "Subset")->required();
  add_format(giambelli);

  CLI::App* expand =
      app.add_subcommand("expand", "Expand a monomial in the generators");
  expand->add_option("n", n, "Rank")->required();
  expand->add_option("expr", expr, "Monomial, e.g. p1^3 or p1*p2")->required();
  add_format(expand);

  CLI::App* restrict_cmd =
      app.add_subcommand("restrict", "Restriction p_A(w_B) at a fixed point");
  restrict_cmd->add_option("n", n, "Rank")->required();
  restrict_cmd->add_option("A", subset, "Class subset")->required();
  restrict_cmd->add_option("B", point, "Fixed-point subset")->required();
  add_format(restrict_cmd);

  CLI::App* localize_cmd =
      app.add_subcommand("localize", "Restrictions of p_A at every fixed point");
  localize_cmd->add_option("n", n, "Rank")->required();
  localize_cmd->add_option("A", subset, "Subset")->required();
  add_format(localize_cmd);

  CLI::App* presentation =
      app.add_subcommand("presentation", "Generators of the defining ideal");
  presentation->add_option("n", n, "Rank")->required();
  presentation->add_flag("--quadratic-only", quadratic_only,
                         "List only the quadratic generators");
  presentation->add_option("--cap", presentation_cap, "Rank cap for this run")
      ->capture_default_str();
  add_format(presentation);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("n", n, "Rank")->required();
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(peterson::verify_suite_names()));
  verify->add_option("--jobs", jobs, "Parallel workers")->capture_default_str();
  verify->add_option("--cap", cap,
                     "Rank cap for this run (default 12, or 6 for Groebner suites)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (n < 1) throw peterson::DomainError("rank must be positive");
    if (jobs < 1) throw peterson::DomainError("jobs must be positive");
    if (fixed->parsed()) return run_fixed_points(n, opt);
    if (monk->parsed()) return run_monk(n, index, subset, opt);
    if (giambelli->parsed()) return run_giambelli(n, subset, opt);
    if (expand->parsed()) return run_expand(n, expr, opt);
    if (restrict_cmd->parsed()) return run_restrict(n, subset, point, opt);
    if (localize_cmd->parsed()) return run_localize(n, subset, opt);
    if (presentation->parsed())
      return run_presentation(n, quadratic_only, presentation_cap, opt);
    if (verify->parsed()) return run_verify(n, suite, jobs, cap, opt);
    return kExitUsage;
  } catch (const peterson::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const peterson::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const peterson::ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
