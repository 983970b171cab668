#include "shadowsim/types.hpp"

#include <cstdlib>

namespace shadowsim {

int dense_cutoff() {
  if (const char* env = std::getenv("SHADOWSIM_DENSE_CUTOFF")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return 4096;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw SchemaError(msg);
}

}  // namespace shadowsim
