#pragma once

#include "sl2t/lattice.hpp"

#include <cstdint>

namespace sl2t {

// Fibonacci numbers under the numbering F_1 = F_2 = 1, F_3 = 2, ...
// Growable memoized cache; not synchronized, give each thread its own
// instance or use the shared fib() below.
class FibCache {
public:
  // Indices above this would no longer be desk scale (F_100000 has ~20900
  // digits); refused as errc::too_large.
  static constexpr std::int64_t kMaxIndex = 100'000;

  const BigInt& fib(std::int64_t m);

private:
  std::vector<BigInt> values_;  // values_[i] = F_{i+1}
};

// Shared, mutex-guarded cache. errc::bad_index for m < 1.
BigInt fib(std::int64_t m);

// Value on the anti-diagonal with coordinate sum r of the staircase tiling:
// F_{2r-1} for r >= 1, F_{1-2r} for r <= 0. Equals 1 exactly on r in {0,1}
// and is symmetric about the valley: staircase_value(r) == staircase_value(1-r).
BigInt staircase_value(Coord r);

// The staircase anti-tiling restricted to a 2-D window: entry at (i,j) is
// staircase_value(i+j), signature all-anti.
TilingWindow staircase_plane(const Window& window);

// Exact check of F_{2r-1} * F_{2r+3} == F_{2r+1}^2 + 1 for r = 1..r_max.
bool check_odd_fib_identity(std::int64_t r_max);

}  // namespace sl2t
