#include "coverlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace coverlab {

std::size_t thread_count() {
  if (const char* env = std::getenv("COVERLAB_THREADS"); env != nullptr) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace coverlab
