#include "doctest.h"

#include "sl2t/descent.hpp"
#include "sl2t/engine.hpp"
#include "sl2t/fibonacci.hpp"

#include <vector>

using namespace sl2t;

namespace {

SliceSequence expect_sequence(ExtendResult result) {
  REQUIRE(std::holds_alternative<SliceSequence>(result));
  return std::get<SliceSequence>(result);
}

DescentCertificate expect_certificate(ExtendResult result) {
  REQUIRE(std::holds_alternative<DescentCertificate>(result));
  return std::get<DescentCertificate>(result);
}

std::vector<BigInt> terms(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("forward extension of the staircase seed") {
  SliceSequence seq = expect_sequence(extend_sequence(1, 1, 4, Direction::forward, -1));
  CHECK(seq.offset == 0);
  CHECK(seq.terms == terms({1, 1, 2, 5, 13, 34}));
}

TEST_CASE("backward extension mirrors the staircase") {
  SliceSequence seq = expect_sequence(extend_sequence(1, 1, 3, Direction::backward, -1));
  CHECK(seq.offset == -3);
  CHECK(seq.terms == terms({13, 5, 2, 1, 1}));
}

TEST_CASE("first backward step of (1,2) under +1 dies non-positive") {
  DescentCertificate cert =
      expect_certificate(extend_sequence(1, 2, 1, Direction::backward, +1));
  CHECK(cert.direction == Direction::backward);
  CHECK(cert.failure_step == 1);
  CHECK(cert.kind == FailureKind::non_positive);
  CHECK(cert.transcript.empty());
}

TEST_CASE("seed (2,2) under -1 dies on a non-integer division") {
  DescentCertificate cert =
      expect_certificate(extend_sequence(2, 2, 1, Direction::forward, -1));
  CHECK(cert.failure_step == 1);
  CHECK(cert.kind == FailureKind::non_integer);
}

TEST_CASE("extension validates its inputs") {
  CHECK_THROWS_AS(extend_sequence(0, 1, 1, Direction::forward, -1), tiling_error);
  CHECK_THROWS_AS(extend_sequence(1, 1, -1, Direction::forward, -1), tiling_error);
  CHECK_THROWS_AS(extend_sequence(1, 1, 1, Direction::forward, 2), tiling_error);
}

TEST_CASE("returned sequences satisfy the slice relation at interior indices") {
  for (int sign : {-1, +1}) {
    ExtendResult result = extend_sequence(1, sign == -1 ? 1 : 2, 6, Direction::forward, sign);
    if (!std::holds_alternative<SliceSequence>(result)) continue;
    const SliceSequence seq = std::get<SliceSequence>(result);
    for (std::size_t i = 1; i + 1 < seq.terms.size(); ++i)
      CHECK(seq.terms[i + 1] * seq.terms[i - 1] == seq.terms[i] * seq.terms[i] - sign);
  }
}

TEST_CASE("certificates replay to the recorded failure") {
  DescentCertificate cert =
      expect_certificate(extend_sequence(3, 4, 8, Direction::backward, +1));
  DescentCertificate replay = expect_certificate(extend_sequence(
      cert.seed0, cert.seed1, cert.failure_step, cert.direction, +1));
  CHECK(replay == cert);
}

TEST_CASE("certificate JSON lines are stable") {
  DescentCertificate cert =
      expect_certificate(extend_sequence(3, 4, 8, Direction::backward, +1));
  CHECK(cert.to_json_line() ==
        "{\"seed\":[\"3\",\"4\"],\"direction\":\"backward\",\"step\":3,"
        "\"kind\":\"NonPositive\",\"transcript\":[\"2\",\"1\"]}");
}

TEST_CASE("arithmetic progressions satisfy the +1 relation and die backward at -k") {
  for (int k = 1; k <= 50; ++k) {
    SliceSequence forward =
        expect_sequence(extend_sequence(k, k + 1, 50, Direction::forward, +1));
    for (std::size_t i = 0; i < forward.terms.size(); ++i)
      CHECK(forward.terms[i] == k + static_cast<long>(i));
    DescentCertificate backward =
        expect_certificate(extend_sequence(k, k + 1, k + 2, Direction::backward, +1));
    CHECK(backward.failure_step == k);
    CHECK(backward.kind == FailureKind::non_positive);
  }
}

TEST_CASE("nonexistence scan certifies every seed up to 5") {
  NonexistenceScan scan = nonexistence_scan(5, 8);
  CHECK(scan.certificates.size() == 25);
  for (const DescentCertificate& cert : scan.certificates) {
    // Replaying each certificate reproduces it.
    DescentCertificate replay = expect_certificate(extend_sequence(
        cert.seed0, cert.seed1, cert.failure_step, cert.direction, +1));
    CHECK(replay == cert);
  }
  // Seed (3,4) grows forward as an arithmetic progression, so its
  // certificate must come from the backward direction: 2, 1, then 0.
  const DescentCertificate& cert34 = scan.certificates[2 * 5 + 3];  // (3,4)
  CHECK(cert34.seed0 == 3);
  CHECK(cert34.seed1 == 4);
  CHECK(cert34.direction == Direction::backward);
  CHECK(cert34.transcript == terms({2, 1}));
  CHECK(cert34.failure_step == 3);
  CHECK(cert34.kind == FailureKind::non_positive);
}

TEST_CASE("a scan with too small a step bound is inconclusive") {
  // (2,3) survives one step in both directions under +1.
  CHECK_THROWS_WITH_AS(nonexistence_scan(3, 1), doctest::Contains("ScanInconclusive"),
                       tiling_error);
}

TEST_CASE("uniqueness scan finds exactly the staircase-adjacent pairs") {
  UniquenessScan scan = uniqueness_scan(20, 12);
  const std::vector<Seed> expected = {{1, 1}, {1, 2},  {2, 1}, {2, 5},
                                      {5, 2}, {5, 13}, {13, 5}};
  CHECK(scan.survivors == expected);
  CHECK(scan.expected_survivors == expected);
  CHECK(scan.matches_expected);
  CHECK(scan.certificates.size() == 400 - expected.size());
}

TEST_CASE("staircase_adjacent_pairs clips at the bound") {
  CHECK(staircase_adjacent_pairs(1) == std::vector<Seed>{{1, 1}});
  CHECK(staircase_adjacent_pairs(2) ==
        std::vector<Seed>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(staircase_adjacent_pairs(200).size() == 11);
}

TEST_CASE("uniqueness survivors extend along the staircase profile") {
  UniquenessScan scan = uniqueness_scan(20, 12);
  for (const Seed& seed : scan.survivors) {
    SliceSequence forward = expect_sequence(
        extend_sequence(seed.first, seed.second, 12, Direction::forward, -1));
    bool aligned = false;
    for (Coord shift = -40; shift <= 40 && !aligned; ++shift) {
      bool all = true;
      for (std::size_t i = 0; i < forward.terms.size() && all; ++i)
        all = forward.terms[i] == staircase_value(static_cast<Coord>(i) + shift);
      aligned = all;
    }
    CHECK(aligned);
  }
}

TEST_CASE("tiling_to_slices extracts the cube profile") {
  TilingWindow cube = build_tiling(SignatureMatrix::all_anti(3), Window({0, 0, 0}, {1, 1, 1}), 0);
  SliceSequence seq = tiling_to_slices(cube);
  CHECK(seq.offset == 0);
  CHECK(seq.terms == terms({1, 1, 2, 5}));
}

TEST_CASE("tiling_to_slices respects translations") {
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(3), Window({-2, -2, -2}, {2, 2, 2}), 1);
  SliceSequence seq = tiling_to_slices(t);
  CHECK(seq.offset == -6);
  CHECK(seq.terms.size() == 13);
  for (std::size_t i = 0; i < seq.terms.size(); ++i)
    CHECK(seq.terms[i] == staircase_value(seq.offset + static_cast<Coord>(i) + 1));
}

TEST_CASE("tiling_to_slices rejects inconstant windows") {
  TilingWindow cube = build_tiling(SignatureMatrix::all_anti(3), Window({0, 0, 0}, {1, 1, 1}), 0);
  std::vector<BigInt> entries = cube.entries();
  entries[cube.window().index_of({1, 0, 0})] += 1;  // sum-1 slice has 3 cells
  TilingWindow corrupted(cube.epsilon(), cube.window(), std::move(entries));
  CHECK_THROWS_WITH_AS(tiling_to_slices(corrupted),
                       doctest::Contains("SlicesNotConstant"), tiling_error);
  CHECK_THROWS_AS(tiling_to_slices(staircase_plane(Window({0, 0}, {1, 1}))),
                  tiling_error);
}
