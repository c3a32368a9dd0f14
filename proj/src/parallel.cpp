#include "chainring/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace chainring {

unsigned thread_count() {
  if (const char* env = std::getenv("CHAINRING_THREADS")) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && *p == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace chainring
