#include "cocycle_forge/threads.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>

namespace cocycle_forge {

std::size_t worker_count() {
  if (const char* env = std::getenv("COCYCLE_FORGE_THREADS")) {
    const std::string_view s(env);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace cocycle_forge
