#include "sl2t/descent.hpp"

#include "sl2t/fibonacci.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace sl2t {

namespace {

void check_sign(int sign) {
  if (sign != 1 && sign != -1) fail(errc::bad_format, "sign must be -1 or +1");
}

// Worker count for seed scans: TILING_THREADS if set, else the hardware
// count, clamped to [1, 64]. Aggregation is per-seed-slot, so results do not
// depend on the schedule.
unsigned scan_workers() {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("TILING_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1) workers = static_cast<unsigned>(parsed);
  }
  return std::clamp(workers, 1u, 64u);
}

template <typename F>
void parallel_for(std::size_t count, F&& fn) {
  const unsigned workers = std::min<std::size_t>(scan_workers(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

}  // namespace

std::string DescentCertificate::to_json_line() const {
  nlohmann::ordered_json line;
  line["seed"] = {to_decimal(seed0), to_decimal(seed1)};
  line["direction"] = direction == Direction::forward ? "forward" : "backward";
  line["step"] = failure_step;
  line["kind"] = kind == FailureKind::non_positive ? "NonPositive" : "NonInteger";
  nlohmann::ordered_json transcript_json = nlohmann::ordered_json::array();
  for (const BigInt& v : transcript) transcript_json.push_back(to_decimal(v));
  line["transcript"] = std::move(transcript_json);
  return line.dump();
}

ExtendResult extend_sequence(const BigInt& c0, const BigInt& c1, int steps,
                             Direction direction, int sign) {
  check_sign(sign);
  if (c0 < 1 || c1 < 1) fail(errc::non_positive_entry, "seed terms must be >= 1");
  if (steps < 0) fail(errc::bad_index, "steps must be >= 0");

  // Forward solves c_{r+1} out of c_{r+1} c_{r-1} = c_r^2 - sign; backward is
  // the same relation read leftward.
  BigInt divisor = direction == Direction::forward ? c0 : c1;
  BigInt current = direction == Direction::forward ? c1 : c0;

  std::vector<BigInt> computed;
  computed.reserve(static_cast<std::size_t>(steps));
  for (int step = 1; step <= steps; ++step) {
    BigInt numerator = current * current - sign;
    BigInt next;
    if (!divide_exact(numerator, divisor, next))
      return DescentCertificate{c0,    c1,   direction, step,
                                FailureKind::non_integer, std::move(computed)};
    if (next < 1)
      return DescentCertificate{c0,    c1,   direction, step,
                                FailureKind::non_positive, std::move(computed)};
    computed.push_back(next);
    divisor = std::move(current);
    current = std::move(next);
  }

  SliceSequence seq;
  if (direction == Direction::forward) {
    seq.offset = 0;
    seq.terms.reserve(computed.size() + 2);
    seq.terms.push_back(c0);
    seq.terms.push_back(c1);
    seq.terms.insert(seq.terms.end(), computed.begin(), computed.end());
  } else {
    seq.offset = -steps;
    seq.terms.reserve(computed.size() + 2);
    seq.terms.insert(seq.terms.end(), computed.rbegin(), computed.rend());
    seq.terms.push_back(c0);
    seq.terms.push_back(c1);
  }
  return seq;
}

namespace {

struct SeedOutcome {
  bool survived = false;
  DescentCertificate certificate;
};

SeedOutcome run_seed(int c0, int c1, int steps, int sign) {
  ExtendResult forward = extend_sequence(c0, c1, steps, Direction::forward, sign);
  if (auto* cert = std::get_if<DescentCertificate>(&forward))
    return {false, std::move(*cert)};
  ExtendResult backward = extend_sequence(c0, c1, steps, Direction::backward, sign);
  if (auto* cert = std::get_if<DescentCertificate>(&backward))
    return {false, std::move(*cert)};
  return {true, {}};
}

std::vector<SeedOutcome> scan_seeds(int seed_bound, int step_bound, int sign) {
  if (seed_bound < 1) fail(errc::bad_index, "seed bound must be >= 1");
  if (step_bound < 1) fail(errc::bad_index, "step bound must be >= 1");
  const std::size_t count =
      static_cast<std::size_t>(seed_bound) * static_cast<std::size_t>(seed_bound);
  std::vector<SeedOutcome> outcomes(count);
  parallel_for(count, [&](std::size_t index) {
    const int c0 = static_cast<int>(index / static_cast<std::size_t>(seed_bound)) + 1;
    const int c1 = static_cast<int>(index % static_cast<std::size_t>(seed_bound)) + 1;
    outcomes[index] = run_seed(c0, c1, step_bound, sign);
  });
  return outcomes;
}

}  // namespace

NonexistenceScan nonexistence_scan(int seed_bound, int step_bound, int sign) {
  check_sign(sign);
  std::vector<SeedOutcome> outcomes = scan_seeds(seed_bound, step_bound, sign);
  NonexistenceScan scan;
  scan.seed_bound = seed_bound;
  scan.step_bound = step_bound;
  std::vector<Seed> survivors;
  for (std::size_t index = 0; index < outcomes.size(); ++index) {
    if (outcomes[index].survived) {
      survivors.emplace_back(static_cast<int>(index) / seed_bound + 1,
                             static_cast<int>(index) % seed_bound + 1);
    } else {
      scan.certificates.push_back(std::move(outcomes[index].certificate));
    }
  }
  if (!survivors.empty()) {
    std::string what = "seeds surviving " + std::to_string(step_bound) +
                       " steps in both directions:";
    for (const Seed& s : survivors)
      what += " (" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
    fail(errc::scan_inconclusive, what);
  }
  return scan;
}

UniquenessScan uniqueness_scan(int seed_bound, int step_bound, int sign) {
  check_sign(sign);
  if (step_bound < 2) fail(errc::bad_index, "step bound must be >= 2");
  std::vector<SeedOutcome> outcomes = scan_seeds(seed_bound, step_bound, sign);
  UniquenessScan scan;
  scan.seed_bound = seed_bound;
  scan.step_bound = step_bound;
  for (std::size_t index = 0; index < outcomes.size(); ++index) {
    if (outcomes[index].survived)
      scan.survivors.emplace_back(static_cast<int>(index) / seed_bound + 1,
                                  static_cast<int>(index) % seed_bound + 1);
    else
      scan.certificates.push_back(std::move(outcomes[index].certificate));
  }
  scan.expected_survivors = staircase_adjacent_pairs(seed_bound);
  scan.matches_expected = scan.survivors == scan.expected_survivors;
  return scan;
}

std::vector<Seed> staircase_adjacent_pairs(int bound) {
  if (bound < 1) fail(errc::bad_index, "bound must be >= 1");
  std::set<Seed> pairs;
  // staircase_value exceeds any int bound well before |r| = 70.
  for (Coord r = -70; r <= 70; ++r) {
    const BigInt a = staircase_value(r);
    const BigInt b = staircase_value(r + 1);
    if (a <= bound && b <= bound)
      pairs.emplace(a.convert_to<int>(), b.convert_to<int>());
  }
  return {pairs.begin(), pairs.end()};
}

SliceSequence tiling_to_slices(const TilingWindow& t) {
  if (t.dimension() < 3)
    fail(errc::dimension_mismatch, "slice reduction needs n >= 3");
  std::map<Coord, BigInt> slices;
  bool constant = true;
  std::size_t index = 0;
  t.window().for_each_point([&](const LatticePoint& p) {
    const BigInt& value = t.entries()[index++];
    auto [it, inserted] = slices.emplace(coordinate_sum(p), value);
    if (!inserted && it->second != value) constant = false;
  });
  if (!constant)
    fail(errc::slices_not_constant, "window entries vary within a slice");
  SliceSequence seq;
  seq.offset = slices.begin()->first;
  seq.terms.reserve(slices.size());
  for (auto& [r, value] : slices) seq.terms.push_back(std::move(value));
  return seq;
}

}  // namespace sl2t
