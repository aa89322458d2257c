#include <cstdlib>

#include "hrg/errors.hpp"

namespace hrg {

std::int64_t default_capacity() {
  static const std::int64_t cap = [] {
    if (const char* env = std::getenv("HRG_CAP")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::int64_t>(v);
    }
    return static_cast<std::int64_t>(10'000'000);
  }();
  return cap;
}

}  // namespace hrg
