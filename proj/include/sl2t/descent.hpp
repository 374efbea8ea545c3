#pragma once

#include "sl2t/lattice.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sl2t {

// One-dimensional reduction of an n >= 3 tiling: c_r is the single value of
// the slice with coordinate sum r. Interior indices satisfy
// c_{r+1} * c_{r-1} == c_r^2 - sign exactly.
struct SliceSequence {
  std::int64_t offset = 0;      // index of terms.front()
  std::vector<BigInt> terms;    // every term >= 1

  bool operator==(const SliceSequence& other) const = default;
};

enum class Direction { forward, backward };
enum class FailureKind { non_positive, non_integer };

// Replayable witness that a seed of the slice recurrence dies: iterating
// from (c0, c1) in `direction` reproduces `transcript` and then fails at
// step `failure_step` (1-based; step m computes c_{m+1} forward, c_{-m}
// backward).
struct DescentCertificate {
  BigInt seed0;
  BigInt seed1;
  Direction direction = Direction::forward;
  int failure_step = 0;
  FailureKind kind = FailureKind::non_positive;
  std::vector<BigInt> transcript;  // terms computed before the failure

  std::string to_json_line() const;

  bool operator==(const DescentCertificate& other) const = default;
};

using ExtendResult = std::variant<SliceSequence, DescentCertificate>;

// Iterates c_{r+1} = (c_r^2 - sign) / c_{r-1} forward, or
// c_{r-1} = (c_r^2 - sign) / c_{r+1} backward, with exact division. Stops
// with a certificate at the first non-integer or non-positive value;
// otherwise the full sequence, seeds included (offset 0 for c0). Requires
// c0, c1 >= 1 and steps >= 0.
ExtendResult extend_sequence(const BigInt& c0, const BigInt& c1, int steps,
                             Direction direction, int sign);

using Seed = std::pair<int, int>;

struct NonexistenceScan {
  int seed_bound = 0;
  int step_bound = 0;
  std::vector<DescentCertificate> certificates;  // one per seed, seed-sorted
};

// Extends every seed in [1,B]^2 (sign +1) forward then backward, up to K
// steps each. Every seed must die in at least one direction; a seed
// surviving both is errc::scan_inconclusive (cannot occur for K >= B + 2:
// once the pair stops increasing, the minimum drops by at least 1 per step).
// The recorded certificate is the forward one when the forward direction
// dies, the backward one otherwise.
NonexistenceScan nonexistence_scan(int seed_bound, int step_bound,
                                   int sign = +1);

struct UniquenessScan {
  int seed_bound = 0;
  int step_bound = 0;
  std::vector<Seed> survivors;                   // seed-sorted
  std::vector<DescentCertificate> certificates;  // one per dead seed
  std::vector<Seed> expected_survivors;          // staircase-adjacent pairs
  bool matches_expected = false;
};

// A seed survives when it extends K steps in both directions through
// positive integers (sign -1). Survivors are compared against the adjacent
// pairs of the bi-infinite staircase sequence ...,13,5,2,1,1,2,5,13,...
// clipped to [1,B]^2.
UniquenessScan uniqueness_scan(int seed_bound, int step_bound, int sign = -1);

// Adjacent staircase pairs (staircase_value(r), staircase_value(r+1)) with
// both components <= bound, deduplicated and sorted.
std::vector<Seed> staircase_adjacent_pairs(int bound);

// Extracts c_r per coordinate sum represented in the window. n >= 3 and the
// slices must be constant (errc::slices_not_constant otherwise).
SliceSequence tiling_to_slices(const TilingWindow& t);

}  // namespace sl2t
