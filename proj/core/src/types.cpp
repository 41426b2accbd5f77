#include "esnkit/types.hpp"

#include <cstdlib>

namespace esnkit {

namespace {

int env_cap(int fallback) {
  const char* v = std::getenv("ESNKIT_MAX_ELEMENTS");
  if (v == nullptr || *v == '\0') return fallback;
  long parsed = std::strtol(v, nullptr, 10);
  if (parsed < 1) return fallback;
  constexpr long hard_ceiling = 1000000;
  if (parsed > hard_ceiling) parsed = hard_ceiling;
  return static_cast<int>(parsed);
}

}  // namespace

int generator_cap() { return env_cap(5000); }
int conversion_cap() { return env_cap(200000); }

}  // namespace esnkit
