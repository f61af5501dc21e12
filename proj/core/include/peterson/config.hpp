#ifndef PETERSON_CONFIG_HPP
#define PETERSON_CONFIG_HPP

#include <cstddef>

namespace peterson::config {

// Resource caps, overridable through environment variables read once per
// process:
//
//   PETERSON_ENUM_CAP       max rank for full 2^(n-1) subset enumeration
//   PETERSON_GB_MAX_PAIRS   Buchberger S-pair budget
//   PETERSON_GB_MAX_DEGREE  Buchberger total-degree budget

int enumeration_cap();           // default 20
std::size_t groebner_max_pairs();  // default 100000
int groebner_max_degree();       // default 30

}  // namespace peterson::config

#endif  // PETERSON_CONFIG_HPP
