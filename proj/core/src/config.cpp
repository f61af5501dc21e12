#include "peterson/config.hpp"

#include <cstdlib>
#include <string>

namespace peterson::config {

namespace {

long env_or(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed <= 0) return fallback;
  return parsed;
}

}  // namespace

int enumeration_cap() {
  static const int cap = static_cast<int>(env_or("PETERSON_ENUM_CAP", 20));
  return cap;
}

std::size_t groebner_max_pairs() {
  static const std::size_t cap =
      static_cast<std::size_t>(env_or("PETERSON_GB_MAX_PAIRS", 100000));
  return cap;
}

int groebner_max_degree() {
  static const int cap = static_cast<int>(env_or("PETERSON_GB_MAX_DEGREE", 30));
  return cap;
}

}  // namespace peterson::config
