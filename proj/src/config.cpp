#include "fusionkit/config.hpp"

#include <cstdlib>

namespace fusionkit {

int max_rank() {
  if (const char* env = std::getenv("FUSIONKIT_MAX_RANK")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}

} // namespace fusionkit
