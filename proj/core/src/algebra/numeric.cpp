#include "hilbsym/algebra/numeric.hpp"

#include <cstdlib>
#include <thread>

#include "hilbsym/algebra/parallel.hpp"

namespace hilbsym::algebra {

std::string to_string(Branch b) { return b == Branch::plus_pi ? "+pi" : "-pi"; }

Branch branch_from_string(const std::string& s) {
  if (s == "+pi" || s == "pi" || s == "plus") return Branch::plus_pi;
  if (s == "-pi" || s == "minus") return Branch::minus_pi;
  throw std::invalid_argument("unknown branch '" + s + "' (expected +pi or -pi)");
}

}  // namespace hilbsym::algebra

namespace hilbsym::algebra {

unsigned worker_count() {
  if (const char* env = std::getenv("HILBSYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace hilbsym::algebra
