#include "sl2t/engine.hpp"

#include "sl2t/fibonacci.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <map>
#include <sstream>

namespace sl2t {

namespace {

// Offsets of one lexicographic index step along each axis.
std::vector<std::size_t> strides(const Window& w) {
  const std::size_t n = w.dimension();
  std::vector<std::size_t> s(n, 1);
  for (std::size_t k = n - 1; k-- > 0;) {
    std::size_t extent = static_cast<std::size_t>(w.hi()[k + 1] - w.lo()[k + 1] + 1);
    s[k] = s[k + 1] * extent;
  }
  return s;
}

Coord signed_sum(const SignVector& s, const LatticePoint& p, Coord translation) {
  __int128 sum = translation;
  for (std::size_t k = 0; k < p.size(); ++k)
    sum += s.at(k) > 0 ? static_cast<__int128>(p[k]) : -static_cast<__int128>(p[k]);
  if (sum > std::numeric_limits<Coord>::max() || sum < std::numeric_limits<Coord>::min())
    fail(errc::too_large, "signed coordinate sum overflows");
  return static_cast<Coord>(sum);
}

}  // namespace

std::string ViolationReport::to_json_lines() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    nlohmann::ordered_json line;
    line["base"] = v.base;
    line["axes"] = {v.axis_k + 1, v.axis_l + 1};
    line["computed"] = to_decimal(v.computed);
    line["expected"] = v.expected;
    out << line.dump() << "\n";
  }
  return out.str();
}

TilingWindow build_tiling(const SignatureMatrix& eps, const Window& window,
                          Coord translation) {
  if (eps.dimension() != window.dimension())
    fail(errc::dimension_mismatch, "signature and window dimension differ");
  if (eps.dimension() < 3)
    fail(errc::dimension_mismatch,
         "construction covers n >= 3 (use the staircase plane for n = 2)");
  if (!is_admissible(eps)) {
    auto witness = admissibility_witness(eps);
    fail(errc::not_admissible,
         "no tiling exists: triple (" + std::to_string((*witness)[0] + 1) + "," +
             std::to_string((*witness)[1] + 1) + "," + std::to_string((*witness)[2] + 1) +
             ") has product +1");
  }
  const SignVector s = signature_to_signs(eps).first;
  return make_tiling(eps, window, [&](const LatticePoint& p) {
    return staircase_value(signed_sum(s, p, translation));
  });
}

ViolationReport verify_window(const TilingWindow& t) {
  const Window& w = t.window();
  const std::size_t n = w.dimension();
  const std::vector<std::size_t> stride = strides(w);
  const std::vector<BigInt>& a = t.entries();

  ViolationReport report;
  std::size_t base_index = 0;
  w.for_each_point([&](const LatticePoint& p) {
    for (std::size_t k = 0; k < n; ++k) {
      if (p[k] >= w.hi()[k]) continue;
      for (std::size_t l = k + 1; l < n; ++l) {
        if (p[l] >= w.hi()[l]) continue;
        const BigInt& corner = a[base_index];
        const BigInt& up_k = a[base_index + stride[k]];
        const BigInt& up_l = a[base_index + stride[l]];
        const BigInt& up_kl = a[base_index + stride[k] + stride[l]];
        BigInt computed = up_l * up_k - corner * up_kl;
        const int expected = t.epsilon().at(k, l);
        if (computed != expected)
          report.violations.push_back({p, k, l, std::move(computed), expected});
      }
    }
    ++base_index;
  });
  return report;
}

ViolationReport verify_diagonal_relation(const TilingWindow& t) {
  const Window& w = t.window();
  const std::size_t n = w.dimension();
  const std::vector<std::size_t> stride = strides(w);
  const std::vector<BigInt>& a = t.entries();

  ViolationReport report;
  std::size_t base_index = 0;
  w.for_each_point([&](const LatticePoint& p) {
    for (std::size_t k = 0; k < n; ++k) {
      if (p[k] + 2 > w.hi()[k]) continue;
      const BigInt& mid = a[base_index + stride[k]];
      BigInt computed = mid * mid - a[base_index] * a[base_index + 2 * stride[k]];
      if (computed != -1)
        report.violations.push_back({p, k, k, std::move(computed), -1});
    }
    ++base_index;
  });
  return report;
}

bool check_constant_slices(const TilingWindow& t) {
  const SignatureMatrix& eps = t.epsilon();
  if (!eps.is_constant_off_diagonal(-1) && !eps.is_constant_off_diagonal(+1))
    fail(errc::wrong_signature,
         "constant slices apply to the pure signatures only");
  std::map<Coord, const BigInt*> first_seen;
  bool constant = true;
  std::size_t index = 0;
  t.window().for_each_point([&](const LatticePoint& p) {
    if (!constant) {
      ++index;
      return;
    }
    const Coord r = coordinate_sum(p);
    auto [it, inserted] = first_seen.emplace(r, &t.entries()[index]);
    if (!inserted && *it->second != t.entries()[index]) constant = false;
    ++index;
  });
  return constant;
}

CubeCheck cube_consistency(const BigInt& a, const BigInt& x, const BigInt& y,
                           const BigInt& z, int eps_sign) {
  if (a < 1 || x < 1 || y < 1 || z < 1)
    fail(errc::non_positive_entry, "cube corners must be positive");
  if (eps_sign != 1 && eps_sign != -1) fail(errc::bad_format, "eps must be -1 or +1");

  const Rational eps(eps_sign);
  const Rational ra(a);
  CubeCheck check;
  // Faces adjacent to the base corner, one per axis pair.
  const Rational face_xy = (Rational(x) * Rational(y) - eps) / ra;
  const Rational face_xz = (Rational(x) * Rational(z) - eps) / ra;
  const Rational face_yz = (Rational(y) * Rational(z) - eps) / ra;
  check.faces = {face_xy, face_xz, face_yz};
  // Top corner computed through each of the three edges.
  check.tops = {
      (face_xy * face_xz - eps) / Rational(x),
      (face_xy * face_yz - eps) / Rational(y),
      (face_xz * face_yz - eps) / Rational(z),
  };

  const auto positive_integer = [](const Rational& v) {
    return is_integer(v) && v > 0;
  };
  if (!positive_integer(face_xy) || !positive_integer(face_xz) ||
      !positive_integer(face_yz)) {
    check.status = CubeStatus::non_integer_face;
  } else if (check.tops[0] != check.tops[1] || check.tops[1] != check.tops[2]) {
    check.status = CubeStatus::disagreeing_tops;
  } else {
    check.status = CubeStatus::consistent;
  }
  return check;
}

TilingWindow flip_tiling(const TilingWindow& t, std::size_t axis) {
  const Window& w = t.window();
  if (axis >= w.dimension()) fail(errc::bad_axis, "flip axis out of range");
  if (w.lo()[axis] != -w.hi()[axis])
    fail(errc::window_not_symmetric,
         "window must be symmetric about 0 along axis " + std::to_string(axis + 1));
  return make_tiling(flip(t.epsilon(), axis), w, [&](const LatticePoint& p) {
    LatticePoint q = p;
    q[axis] = -q[axis];
    return t.at(q);
  });
}

}  // namespace sl2t
