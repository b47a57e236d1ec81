#include "pinch/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "pinch/error.hpp"

namespace pinch {

std::size_t worker_count() {
  const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("PINCH_THREADS");
  if (env == nullptr || *env == '\0') return hardware;

  std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(Errc::invalid_config, "PINCH_THREADS must be a non-negative integer, got '" +
                                   std::string(text) + "'");
  }
  return value == 0 ? hardware : value;
}

std::size_t resolve_threads(std::size_t requested) {
  return requested == 0 ? worker_count() : requested;
}

}  // namespace pinch
