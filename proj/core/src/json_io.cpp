#include "peterson/json_io.hpp"

#include "peterson/errors.hpp"
#include "peterson/permutation.hpp"

namespace peterson {

using nlohmann::json;

namespace {

json subset_to_json(const SubsetIndex& a) { return json(a.members()); }

SubsetIndex subset_from_json(int n, const json& j) {
  return SubsetIndex(n, j.get<std::vector<int>>());
}

}  // namespace

json expansion_to_json(const BasisExpansion& e) {
  json terms = json::array();
  for (const auto& [a, c] : e.terms())
    terms.push_back(json{{"subset", subset_to_json(a)}, {"coeff", c.to_string()}});
  return json{{"n", e.rank()}, {"terms", terms}};
}

BasisExpansion expansion_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  BasisExpansion e(n);
  for (const json& term : j.at("terms"))
    e.add_term(subset_from_json(n, term.at("subset")),
               parse_unipoly(term.at("coeff").get<std::string>()));
  return e;
}

json localized_to_json(const LocalizedClass& f) {
  json values = json::array();
  for (const SubsetIndex& b : all_subsets(f.rank()))
    values.push_back(
        json{{"subset", subset_to_json(b)}, {"value", f.value(b).to_string()}});
  return json{{"n", f.rank()}, {"values", values}};
}

LocalizedClass localized_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  LocalizedClass f(n);
  for (const json& entry : j.at("values"))
    f.set_value(subset_from_json(n, entry.at("subset")),
                parse_unipoly(entry.at("value").get<std::string>()));
  return f;
}

json fixed_points_to_json(int n) {
  json rows = json::array();
  for (const SubsetIndex& a : all_subsets(n)) {
    const VPermutation v = v_permutation(a);
    rows.push_back(json{{"subset", subset_to_json(a)},
                        {"w", fixed_point_permutation(a).to_string()},
                        {"word", v.word}});
  }
  return json{{"n", n}, {"fixed_points", rows}};
}

json presentation_to_json(const RelationSet& k, const std::string& quadratic_flag,
                          bool quadratic_only) {
  json generators = json::array();
  for (const Relation& r : k.relations) {
    if (quadratic_only && r.poly.degree() > 2) continue;
    generators.push_back(json{{"i", r.i},
                              {"subset", subset_to_json(r.a)},
                              {"kind", "giambelli-q"},
                              {"poly", multipoly_to_string(r.poly)}});
  }
  return json{{"n", k.n},
              {"generators", generators},
              {"quadratic_conjecture", quadratic_flag}};
}

RelationSet presentation_from_json(const json& j) {
  RelationSet k;
  k.n = j.at("n").get<int>();
  for (const json& g : j.at("generators"))
    k.relations.push_back(Relation{g.at("i").get<int>(),
                                   subset_from_json(k.n, g.at("subset")),
                                   RelationKind::GiambelliQ,
                                   parse_multipoly(k.n, g.at("poly").get<std::string>())});
  return k;
}

json report_to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const VerifyFailure& f : r.failures)
    failures.push_back(json{{"id", f.identifier},
                            {"expected", f.expected},
                            {"actual", f.actual}});
  const std::string status =
      r.undetermined ? "undetermined" : (r.failures.empty() ? "pass" : "fail");
  json out{{"suite", r.suite},
           {"n", r.n},
           {"total_checks", r.total_checks},
           {"failures", failures},
           {"status", status},
           {"wall_ms", r.wall_ms}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace peterson
