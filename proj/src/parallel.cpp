#include "chessplex/parallel.hpp"

#include <cstdlib>
#include <string>

namespace chessplex {

unsigned default_thread_count() {
  if (const char* env = std::getenv("CHESSPLEX_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace chessplex
