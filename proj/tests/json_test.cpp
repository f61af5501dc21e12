#include "doctest.h"

#include "peterson/expansion.hpp"
#include "peterson/json_io.hpp"
#include "peterson/verify.hpp"

using namespace peterson;

TEST_CASE("basis expansion json round trips byte for byte") {
  const BasisExpansion e = expand_monomial(4, {1, 1, 1});
  const auto j = expansion_to_json(e);
  CHECK(expansion_from_json(j) == e);
  CHECK(canonical_dump(expansion_to_json(expansion_from_json(j))) == canonical_dump(j));

  const auto empty = expansion_to_json(BasisExpansion(3));
  CHECK(expansion_from_json(empty).is_zero());
}

TEST_CASE("expansion json carries terms in enumeration order") {
  const BasisExpansion e = expand_monomial(4, {1, 1});
  const auto j = expansion_to_json(e);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0].at("subset") == nlohmann::json::array({1}));
  CHECK(j.at("terms")[0].at("coeff") == "t");
  CHECK(j.at("terms")[1].at("subset") == nlohmann::json::array({1, 2}));
  CHECK(j.at("terms")[1].at("coeff") == "1");
}

TEST_CASE("localized class json covers every subset in order") {
  const LocalizedClass f = localize(BasisExpansion::basis_class(SubsetIndex(3, {1})));
  const auto j = localized_to_json(f);
  REQUIRE(j.at("values").size() == 4);
  CHECK(j.at("values")[0].at("subset") == nlohmann::json::array());
  CHECK(j.at("values")[0].at("value") == "0");
  CHECK(localized_from_json(j) == f);
  CHECK(canonical_dump(localized_to_json(localized_from_json(j))) == canonical_dump(j));
}

TEST_CASE("fixed point json") {
  const auto j = fixed_points_to_json(4);
  REQUIRE(j.at("fixed_points").size() == 8);
  CHECK(j.at("fixed_points")[4].at("subset") == nlohmann::json::array({1, 2}));
  CHECK(j.at("fixed_points")[4].at("w") == "3214");
  CHECK(j.at("fixed_points")[4].at("word") == nlohmann::json::array({1, 2}));
}

TEST_CASE("presentation json round trips") {
  const RelationSet k = ideal_K(4);
  const auto j = presentation_to_json(k, "true", false);
  CHECK(j.at("generators").size() == 12);
  CHECK(j.at("quadratic_conjecture") == "true");
  const RelationSet back = presentation_from_json(j);
  REQUIRE(back.relations.size() == k.relations.size());
  for (std::size_t i = 0; i < k.relations.size(); ++i) {
    CHECK(back.relations[i].poly == k.relations[i].poly);
    CHECK(back.relations[i].a == k.relations[i].a);
    CHECK(back.relations[i].i == k.relations[i].i);
  }
  CHECK(canonical_dump(presentation_to_json(back, "true", false)) == canonical_dump(j));

  const auto quad_only = presentation_to_json(k, "true", true);
  CHECK(quad_only.at("generators").size() == 3);
}

TEST_CASE("verify report json") {
  const VerifyReport r = verify_stirling(5);
  const auto j = report_to_json(r);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("suite") == "stirling");
  CHECK(j.at("n") == 5);
}
