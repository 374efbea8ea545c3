#include "doctest.h"

#include "sl2t/engine.hpp"
#include "sl2t/fibonacci.hpp"

#include <set>
#include <vector>

using namespace sl2t;

namespace {

TilingWindow corrupt(const TilingWindow& t, const LatticePoint& p) {
  std::vector<BigInt> entries = t.entries();
  entries[t.window().index_of(p)] += 1;
  return TilingWindow(t.epsilon(), t.window(), std::move(entries));
}

}  // namespace

TEST_CASE("build_tiling fills the unit cube of the anti signature") {
  TilingWindow cube = build_tiling(SignatureMatrix::all_anti(3), Window({0, 0, 0}, {1, 1, 1}), 0);
  CHECK(cube.at({0, 0, 0}) == 1);
  CHECK(cube.at({1, 0, 0}) == 1);
  CHECK(cube.at({0, 1, 0}) == 1);
  CHECK(cube.at({0, 0, 1}) == 1);
  CHECK(cube.at({1, 1, 0}) == 2);
  CHECK(cube.at({1, 0, 1}) == 2);
  CHECK(cube.at({0, 1, 1}) == 2);
  CHECK(cube.at({1, 1, 1}) == 5);
}

TEST_CASE("build_tiling uses the signed coordinate sum") {
  SignatureMatrix eps = SignatureMatrix::from_upper_triangle(3, {1, 1, -1});
  TilingWindow t = build_tiling(eps, Window({2, 1, 1}, {2, 1, 1}), 0);
  CHECK(t.at({2, 1, 1}) == 1);  // signed sum 2 - 1 - 1 = 0
}

TEST_CASE("build_tiling refuses what cannot exist") {
  CHECK_THROWS_WITH_AS(
      build_tiling(SignatureMatrix::all_sl2(3), Window({0, 0, 0}, {1, 1, 1}), 0),
      doctest::Contains("NotAdmissible"), tiling_error);
  CHECK_THROWS_AS(build_tiling(SignatureMatrix::all_anti(2), Window({0, 0}, {1, 1}), 0),
                  tiling_error);
}

TEST_CASE("built tilings verify cleanly in dimension 4") {
  for (const SignatureMatrix& eps : enumerate_admissible(4)) {
    TilingWindow t = build_tiling(eps, Window({-2, -2, -2, -2}, {2, 2, 2, 2}), 0);
    CHECK(verify_window(t).empty());
    CHECK(verify_diagonal_relation(t).empty());
  }
}

TEST_CASE("verify_window flags only squares touching a corrupted cell") {
  TilingWindow plane = staircase_plane(Window({-5, -5}, {5, 5}));
  CHECK(verify_window(plane).empty());

  ViolationReport report = verify_window(corrupt(plane, {0, 0}));
  CHECK(report.size() == 4);
  std::set<LatticePoint> bases;
  for (const Violation& v : report.violations) {
    bases.insert(v.base);
    CHECK(v.axis_k == 0);
    CHECK(v.axis_l == 1);
    CHECK(v.expected == -1);
  }
  CHECK(bases == std::set<LatticePoint>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});
}

TEST_CASE("the reflected staircase verifies against the +1 signature") {
  TilingWindow reflected =
      make_tiling(SignatureMatrix::all_sl2(2), Window({-4, -4}, {4, 4}),
                  [](const LatticePoint& p) { return staircase_value(p[0] - p[1]); });
  CHECK(verify_window(reflected).empty());
}

TEST_CASE("diagonal relation holds on builds and on the staircase plane") {
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(3), Window({-3, -3, -3}, {3, 3, 3}), 0);
  CHECK(verify_diagonal_relation(t).empty());
  CHECK(verify_diagonal_relation(staircase_plane(Window({-4, -4}, {4, 4}))).empty());
  CHECK_FALSE(verify_diagonal_relation(corrupt(t, {0, 0, 0})).empty());
}

TEST_CASE("constant slices on pure signatures") {
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(3), Window({-2, -2, -2}, {2, 2, 2}), 0);
  CHECK(check_constant_slices(t));
  CHECK(check_constant_slices(staircase_plane(Window({-3, -3}, {3, 3}))));
  CHECK_FALSE(check_constant_slices(corrupt(t, {0, 0, 0})));

  SignatureMatrix mixed = SignatureMatrix::from_upper_triangle(3, {1, 1, -1});
  TilingWindow m = build_tiling(mixed, Window({-2, -2, -2}, {2, 2, 2}), 0);
  CHECK_THROWS_WITH_AS(check_constant_slices(m), doctest::Contains("WrongSignature"),
                       tiling_error);
}

TEST_CASE("cube_consistency on the hand examples") {
  CubeCheck anti = cube_consistency(1, 1, 1, 1, -1);
  CHECK(anti.consistent());
  for (const Rational& f : anti.faces) CHECK(f == 2);
  for (const Rational& t : anti.tops) CHECK(t == 5);

  CubeCheck sl2 = cube_consistency(1, 2, 2, 2, +1);
  CHECK(sl2.consistent());
  for (const Rational& f : sl2.faces) CHECK(f == 3);
  for (const Rational& t : sl2.tops) CHECK(t == 4);

  CubeCheck uneven = cube_consistency(1, 1, 2, 1, -1);
  CHECK(uneven.status == CubeStatus::disagreeing_tops);
  CHECK(uneven.tops[0] == 7);
  CHECK(uneven.tops[1] == 5);
  CHECK(uneven.tops[2] == 7);

  CubeCheck fractional = cube_consistency(2, 2, 2, 2, -1);
  CHECK(fractional.status == CubeStatus::non_integer_face);
  CHECK(fractional.faces[0] == Rational(5, 2));

  CHECK_THROWS_AS(cube_consistency(0, 1, 1, 1, -1), tiling_error);
  CHECK_THROWS_AS(cube_consistency(1, 1, 1, 1, 2), tiling_error);
}

TEST_CASE("staircase-derived cubes agree three ways") {
  for (Coord r = -10; r <= 10; ++r) {
    CubeCheck check = cube_consistency(staircase_value(r), staircase_value(r + 1),
                                       staircase_value(r + 1), staircase_value(r + 1), -1);
    CHECK(check.consistent());
    CHECK(check.faces[0] == Rational(staircase_value(r + 2)));
    CHECK(check.tops[0] == Rational(staircase_value(r + 3)));
  }
}

TEST_CASE("flip_tiling is an involution and needs a symmetric window") {
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(3), Window({-2, -2, -2}, {2, 2, 2}), 1);
  for (std::size_t axis = 0; axis < 3; ++axis)
    CHECK(flip_tiling(flip_tiling(t, axis), axis) == t);
  TilingWindow off = build_tiling(SignatureMatrix::all_anti(3), Window({-1, -2, -2}, {2, 2, 2}), 0);
  CHECK_THROWS_WITH_AS(flip_tiling(off, 0), doctest::Contains("WindowNotSymmetric"),
                       tiling_error);
}

TEST_CASE("flipping the staircase plane yields the +1 signature tiling") {
  TilingWindow flipped = flip_tiling(staircase_plane(Window({-4, -4}, {4, 4})), 1);
  CHECK(flipped.epsilon().at(0, 1) == 1);
  CHECK(verify_window(flipped).empty());
}

TEST_CASE("flip_tiling matches rebuilding with the flipped signature") {
  const Window w({-3, -3, -3}, {3, 3, 3});
  for (const SignatureMatrix& eps : enumerate_admissible(3)) {
    for (Coord t = -2; t <= 2; ++t) {
      TilingWindow built = build_tiling(eps, w, t);
      for (std::size_t axis = 0; axis < 3; ++axis) {
        TilingWindow flipped = flip_tiling(built, axis);
        // Flipping the normalization axis reflects the profile, which the
        // translation parameter absorbs as t -> 1 - t.
        const Coord expected_translation = axis == 0 ? 1 - t : t;
        CHECK(flipped == build_tiling(flip(eps, axis), w, expected_translation));
      }
    }
  }
}

TEST_CASE("entries depend only on the signed sum plus translation") {
  SignatureMatrix eps = SignatureMatrix::from_upper_triangle(3, {1, -1, 1});
  const SignVector s = signature_to_signs(eps).first;
  const Window w({-2, -2, -2}, {2, 2, 2});
  TilingWindow t0 = build_tiling(eps, w, 0);
  TilingWindow t1 = build_tiling(eps, w, 1);
  w.for_each_point([&](const LatticePoint& p) {
    Coord sum = 0;
    for (std::size_t k = 0; k < 3; ++k) sum += s.at(k) * p[k];
    CHECK(t0.at(p) == staircase_value(sum));
    CHECK(t1.at(p) == staircase_value(sum + 1));
  });
}

TEST_CASE("two-dimensional slices of the anti build are staircase translates") {
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(3), Window({-2, -2, -2}, {2, 2, 2}), 1);
  for (Coord fixed = -2; fixed <= 2; ++fixed) {
    // Fix the last coordinate; the slice must match some diagonal shift of
    // the staircase.
    const auto matches_shift = [&](Coord shift) {
      for (Coord i = -2; i <= 2; ++i)
        for (Coord j = -2; j <= 2; ++j)
          if (t.at({i, j, fixed}) != staircase_value(i + j + shift)) return false;
      return true;
    };
    bool matched = false;
    for (Coord shift = -10; shift <= 10 && !matched; ++shift)
      matched = matches_shift(shift);
    CHECK(matched);
  }
}

TEST_CASE("every constructed entry is an odd-indexed Fibonacci number") {
  std::set<BigInt> odd_fibs;
  for (std::int64_t m = 1; m <= 61; m += 2) odd_fibs.insert(fib(m));
  TilingWindow t = build_tiling(SignatureMatrix::all_anti(4), Window({-3, -3, -3, -3}, {3, 3, 3, 3}), 2);
  for (const BigInt& v : t.entries()) CHECK(odd_fibs.count(v) == 1);
}
