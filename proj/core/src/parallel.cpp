#include "favard/parallel.hpp"

#include <cstdlib>
#include <string>

namespace favard {

unsigned worker_count() {
  if (const char* env = std::getenv("FAVARD_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const auto half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace favard
