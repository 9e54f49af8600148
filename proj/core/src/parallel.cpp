#include "takagi/parallel.hpp"

#include <cstdlib>
#include <string>

namespace takagi {

unsigned scan_threads() {
  if (const char* env = std::getenv("TAKAGI_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace takagi
