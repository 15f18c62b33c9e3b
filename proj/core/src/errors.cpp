#include "pipelat/errors.hpp"

#include <cstdlib>
#include <string>

namespace pipelat {

std::size_t default_cap() {
  constexpr std::size_t fallback = 1000000;
  const char* env = std::getenv("PIPELAT_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) return fallback;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace pipelat
