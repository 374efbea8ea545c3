#pragma once

#include "sl2t/lattice.hpp"
#include "sl2t/signatures.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace sl2t {

// Witness of one failed unit-square relation: at base point `base` and axis
// pair (k,l) the combination a(base+e_l)*a(base+e_k) - a(base)*a(base+e_k+e_l)
// came out as `computed` instead of `expected`. k == l marks a diagonal-
// relation check (a(base+e_k)^2 - a(base)*a(base+2e_k) vs -1).
struct Violation {
  LatticePoint base;
  std::size_t axis_k = 0;
  std::size_t axis_l = 0;
  BigInt computed;
  int expected = 0;

  bool operator==(const Violation& other) const = default;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const noexcept { return violations.empty(); }
  std::size_t size() const noexcept { return violations.size(); }

  // One JSON object per line, axes and coordinates 1-based to match the
  // rendering of signature matrices.
  std::string to_json_lines() const;
};

// The unique-up-to-translation tiling for an admissible signature: entry at
// point p is staircase_value(sum_j s_j p_j + translation) with s the
// normalized sign vector of eps. n >= 3; errc::not_admissible otherwise
// refused (no tiling exists to build).
TilingWindow build_tiling(const SignatureMatrix& eps, const Window& window,
                          Coord translation);

// Checks the unit-square relation for every base point and unordered axis
// pair k < l fully inside the window. Violations are data; report order is
// lexicographic in (base, k, l) regardless of execution schedule.
ViolationReport verify_window(const TilingWindow& t);

// Checks a(p+e_k)^2 - a(p)*a(p+2e_k) == -1 for every point and axis where
// both neighbours lie in the window.
ViolationReport verify_diagonal_relation(const TilingWindow& t);

// True when every set of window entries with equal coordinate sum is a
// single value. Applies to the pure signatures only; a mixed-sign epsilon is
// errc::wrong_signature.
bool check_constant_slices(const TilingWindow& t);

enum class CubeStatus {
  consistent,
  non_integer_face,   // some (xy-eps)/a face is not a positive integer
  disagreeing_tops,   // the three top-corner routes differ
};

// Extension of the corner data (a; x,y,z) one cube upward, computed three
// ways over exact rationals. faces = {xy,xz,yz routes}, tops = routes via
// x, y, z. Any status other than `consistent` certifies that the corner data
// extends to no positive-integer cube.
struct CubeCheck {
  CubeStatus status = CubeStatus::consistent;
  std::array<Rational, 3> faces;
  std::array<Rational, 3> tops;

  bool consistent() const noexcept { return status == CubeStatus::consistent; }
};

CubeCheck cube_consistency(const BigInt& a, const BigInt& x, const BigInt& y,
                           const BigInt& z, int eps_sign);

// Reflects coordinate `axis` about 0: entry of the result at p is the input
// entry at p - 2*p_axis*e_axis, signature flipped at `axis`. The window must
// be symmetric about 0 along that axis (errc::window_not_symmetric).
TilingWindow flip_tiling(const TilingWindow& t, std::size_t axis);

}  // namespace sl2t
