#include "tbtop/budget.hpp"

#include <cstdlib>
#include <string>

namespace tbtop {

std::uint64_t budget() {
  static const std::uint64_t value = [] {
    const char* env = std::getenv("TBTOP_BUDGET");
    if (env == nullptr) return std::uint64_t{4096};
    try {
      unsigned long long parsed = std::stoull(env);
      return parsed == 0 ? std::uint64_t{4096}
                         : static_cast<std::uint64_t>(parsed);
    } catch (...) {
      return std::uint64_t{4096};
    }
  }();
  return value;
}

}  // namespace tbtop
