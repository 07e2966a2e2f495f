#include "statmon/parallel.hpp"

#include <cstdlib>
#include <string>

namespace statmon {

std::size_t worker_count() {
  if (const char* env = std::getenv("STATMON_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace statmon
