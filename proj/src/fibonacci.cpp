#include "sl2t/fibonacci.hpp"

#include <mutex>

namespace sl2t {

const BigInt& FibCache::fib(std::int64_t m) {
  if (m < 1) fail(errc::bad_index, "Fibonacci index must be >= 1");
  if (m > kMaxIndex)
    fail(errc::too_large, "Fibonacci index " + std::to_string(m) + " beyond cap");
  if (values_.empty()) {
    values_.emplace_back(1);  // F_1
    values_.emplace_back(1);  // F_2
  }
  while (static_cast<std::int64_t>(values_.size()) < m) {
    const std::size_t k = values_.size();
    values_.push_back(values_[k - 1] + values_[k - 2]);
  }
  return values_[static_cast<std::size_t>(m - 1)];
}

BigInt fib(std::int64_t m) {
  static FibCache cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return cache.fib(m);
}

BigInt staircase_value(Coord r) {
  // F_{2r-1} for r >= 1 and F_{1-2r} for r <= 0; both branches give an odd
  // index and meet in the valley staircase_value(0) == staircase_value(1) == 1.
  const std::int64_t index = r >= 1 ? 2 * r - 1 : 1 - 2 * r;
  return fib(index);
}

TilingWindow staircase_plane(const Window& window) {
  if (window.dimension() != 2)
    fail(errc::dimension_mismatch, "staircase plane needs a 2-D window");
  return make_tiling(SignatureMatrix::all_anti(2), window, [](const LatticePoint& p) {
    return staircase_value(p[0] + p[1]);
  });
}

bool check_odd_fib_identity(std::int64_t r_max) {
  if (r_max < 1) fail(errc::bad_index, "r_max must be >= 1");
  FibCache cache;
  cache.fib(2 * r_max + 3);
  for (std::int64_t r = 1; r <= r_max; ++r) {
    if (cache.fib(2 * r - 1) * cache.fib(2 * r + 3) !=
        cache.fib(2 * r + 1) * cache.fib(2 * r + 1) + 1)
      return false;
  }
  return true;
}

}  // namespace sl2t
