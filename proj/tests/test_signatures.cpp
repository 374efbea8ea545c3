#include "doctest.h"

#include "sl2t/signatures.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace sl2t;

namespace {

// Every signature matrix of dimension n, via the 2^(n(n-1)/2) upper-triangle
// sign choices.
std::vector<SignatureMatrix> all_signature_matrices(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<SignatureMatrix> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::size_t bits = 0; bits < (std::size_t{1} << pairs); ++bits) {
    std::vector<int> signs(pairs);
    for (std::size_t b = 0; b < pairs; ++b) signs[b] = (bits >> b) & 1 ? 1 : -1;
    out.push_back(SignatureMatrix::from_upper_triangle(n, signs));
  }
  return out;
}

std::vector<SignatureMatrix> brute_force_admissible(std::size_t n) {
  std::vector<SignatureMatrix> out;
  for (SignatureMatrix& eps : all_signature_matrices(n))
    if (is_admissible(eps)) out.push_back(std::move(eps));
  std::sort(out.begin(), out.end());
  return out;
}

SignatureMatrix random_signature(std::mt19937& rng, std::size_t n) {
  std::vector<int> signs(n * (n - 1) / 2);
  for (int& s : signs) s = rng() & 1 ? 1 : -1;
  return SignatureMatrix::from_upper_triangle(n, signs);
}

}  // namespace

TEST_CASE("admissibility on the three-dimensional examples") {
  CHECK(is_admissible(SignatureMatrix::all_anti(3)));
  CHECK_FALSE(is_admissible(SignatureMatrix::all_sl2(3)));
  CHECK(is_admissible(SignatureMatrix::from_upper_triangle(3, {1, 1, -1})));
  CHECK(admissibility_witness(SignatureMatrix::all_sl2(3)) ==
        std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("every n = 2 signature matrix is admissible") {
  CHECK(is_admissible(SignatureMatrix::all_anti(2)));
  CHECK(is_admissible(SignatureMatrix::all_sl2(2)));
}

TEST_CASE("flip negates exactly one row and column") {
  SignatureMatrix flipped = flip(SignatureMatrix::all_anti(3), 0);
  CHECK(flipped.at(0, 1) == 1);
  CHECK(flipped.at(0, 2) == 1);
  CHECK(flipped.at(1, 2) == -1);
  CHECK(flipped.at(0, 0) == -1);
  CHECK_THROWS_WITH_AS(flip(SignatureMatrix::all_anti(3), 3),
                       doctest::Contains("BadAxis"), tiling_error);
}

TEST_CASE("flip is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    SignatureMatrix eps = random_signature(rng, n);
    for (std::size_t axis = 0; axis < n; ++axis)
      CHECK(flip(flip(eps, axis), axis) == eps);
  }
}

TEST_CASE("flip preserves admissibility, exhaustively for n = 3 and 4") {
  for (std::size_t n : {3u, 4u})
    for (const SignatureMatrix& eps : all_signature_matrices(n))
      for (std::size_t axis = 0; axis < n; ++axis)
        CHECK(is_admissible(flip(eps, axis)) == is_admissible(eps));
}

TEST_CASE("signature_to_signs on the hand examples") {
  auto [s_anti, s_anti_neg] = signature_to_signs(SignatureMatrix::all_anti(3));
  CHECK(s_anti.signs() == std::vector<std::int8_t>{1, 1, 1});
  CHECK(s_anti_neg.signs() == std::vector<std::int8_t>{-1, -1, -1});

  auto [s, s_neg] =
      signature_to_signs(SignatureMatrix::from_upper_triangle(3, {1, 1, -1}));
  CHECK(s.signs() == std::vector<std::int8_t>{1, -1, -1});
  CHECK(s_neg == s.negated());

  CHECK_THROWS_WITH_AS(signature_to_signs(SignatureMatrix::all_sl2(3)),
                       doctest::Contains("NotAdmissible"), tiling_error);
}

TEST_CASE("signature_to_signs rebuilds the input exactly") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const SignatureMatrix& eps : enumerate_admissible(n)) {
      auto [s, s_neg] = signature_to_signs(eps);
      CHECK(s.at(0) == 1);
      CHECK(s.to_signature() == eps);
      CHECK(s_neg.to_signature() == eps);
    }
}

TEST_CASE("sign vectors validate their entries") {
  CHECK_THROWS_AS(SignVector({1, 0, 1}), tiling_error);
  CHECK_THROWS_AS(SignVector({1}), tiling_error);
}

TEST_CASE("enumerate_admissible counts 2^(n-1)") {
  CHECK(enumerate_admissible(2).size() == 2);
  CHECK(enumerate_admissible(3).size() == 4);
  CHECK(enumerate_admissible(4).size() == 8);
  CHECK(enumerate_admissible(10).size() == 512);
  CHECK_THROWS_WITH_AS(enumerate_admissible(17),
                       doctest::Contains("DimensionTooLarge"), tiling_error);
}

TEST_CASE("enumeration is canonical: sorted and duplicate-free") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<SignatureMatrix> list = enumerate_admissible(n);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
  }
}

TEST_CASE("predicate filter, enumeration, and flip orbit agree (n = 3..5)") {
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<SignatureMatrix> filtered = brute_force_admissible(n);
    CHECK(filtered == enumerate_admissible(n));
    CHECK(filtered == orbit_of_anti(n));
  }
}

TEST_CASE("orbit of the anti matrix for n = 2") {
  CHECK(orbit_of_anti(2) == enumerate_admissible(2));
  CHECK(orbit_of_anti(2).size() == 2);
}

TEST_CASE("flip action on the first n-1 axes is free") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const SignatureMatrix& eps : enumerate_admissible(n))
      for (std::size_t subset = 1; subset < (std::size_t{1} << (n - 1)); ++subset) {
        SignatureMatrix moved = eps;
        for (std::size_t axis = 0; axis + 1 < n; ++axis)
          if (subset >> axis & 1) moved = flip(moved, axis);
        CHECK(moved != eps);
      }
}
