#ifndef PETERSON_JSON_IO_HPP
#define PETERSON_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "peterson/basis_expansion.hpp"
#include "peterson/localization.hpp"
#include "peterson/relations.hpp"
#include "peterson/verify.hpp"

namespace peterson {

// JSON schemas used by the CLI.  Serialization is canonical: keys are
// emitted in sorted order and collections follow the subset enumeration
// order, so serialize(parse(serialize(x))) == serialize(x) byte for byte.

// {"n": 4, "terms": [{"coeff": "2*t", "subset": [1, 2]}, ...]}
nlohmann::json expansion_to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const nlohmann::json& j);

// {"n": 3, "values": [{"subset": [], "value": "0"}, ...]}, all subsets.
nlohmann::json localized_to_json(const LocalizedClass& f);
LocalizedClass localized_from_json(const nlohmann::json& j);

// {"n": 4, "fixed_points": [{"subset": [], "w": "1234", "word": []}, ...]}
nlohmann::json fixed_points_to_json(int n);

// {"n": 4, "generators": [{"i": 1, "kind": "giambelli-q", "poly": "...",
//  "subset": [1]}, ...], "quadratic_conjecture": "true"}
nlohmann::json presentation_to_json(const RelationSet& k,
                                    const std::string& quadratic_flag,
                                    bool quadratic_only);
RelationSet presentation_from_json(const nlohmann::json& j);

// {"failures": [...], "n": 6, "status": "pass", "suite": "monk-oracle",
//  "total_checks": 160, "wall_ms": ...}
nlohmann::json report_to_json(const VerifyReport& r);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace peterson

#endif  // PETERSON_JSON_IO_HPP
