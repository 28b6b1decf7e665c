#include "metric_lines/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace metric_lines {

std::size_t default_workers() {
  if (const char* env = std::getenv("METRIC_LINES_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace metric_lines
