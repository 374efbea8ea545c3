#include "sl2t/signatures.hpp"

#include <algorithm>
#include <set>

namespace sl2t {

SignVector::SignVector(std::vector<std::int8_t> signs) : s_(std::move(signs)) {
  if (s_.size() < 2) fail(errc::dimension_mismatch, "sign vector needs n >= 2");
  for (std::int8_t v : s_)
    if (v != 1 && v != -1) fail(errc::bad_format, "sign vector entries must be -1 or +1");
}

int SignVector::at(std::size_t k) const {
  if (k >= s_.size()) fail(errc::bad_axis, "sign vector index out of range");
  return s_[k];
}

SignVector SignVector::negated() const {
  std::vector<std::int8_t> s(s_.size());
  for (std::size_t k = 0; k < s_.size(); ++k) s[k] = static_cast<std::int8_t>(-s_[k]);
  return SignVector(std::move(s));
}

SignatureMatrix SignVector::to_signature() const {
  const std::size_t n = s_.size();
  std::vector<std::int8_t> eps(n * n, -1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      std::int8_t v = static_cast<std::int8_t>(-s_[k] * s_[l]);
      eps[k * n + l] = v;
      eps[l * n + k] = v;
    }
  return SignatureMatrix(n, std::move(eps));
}

bool is_admissible(const SignatureMatrix& eps) {
  return !admissibility_witness(eps).has_value();
}

std::optional<std::array<std::size_t, 3>> admissibility_witness(
    const SignatureMatrix& eps) {
  const std::size_t n = eps.dimension();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l)
        if (eps.at(j, k) * eps.at(k, l) * eps.at(j, l) != -1)
          return std::array<std::size_t, 3>{j, k, l};
  return std::nullopt;
}

SignatureMatrix flip(const SignatureMatrix& eps, std::size_t axis) {
  const std::size_t n = eps.dimension();
  if (axis >= n) fail(errc::bad_axis, "flip axis out of range");
  std::vector<std::int8_t> out = eps.flat();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == axis) continue;
    out[axis * n + k] = static_cast<std::int8_t>(-out[axis * n + k]);
    out[k * n + axis] = static_cast<std::int8_t>(-out[k * n + axis]);
  }
  return SignatureMatrix(n, std::move(out));
}

std::pair<SignVector, SignVector> signature_to_signs(const SignatureMatrix& eps) {
  const std::size_t n = eps.dimension();
  std::vector<std::int8_t> s(n, 1);
  for (std::size_t l = 1; l < n; ++l)
    s[l] = static_cast<std::int8_t>(-eps.at(0, l));
  // The first row forces everything; any disagreement elsewhere is exactly a
  // triple with product +1.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (eps.at(k, l) != -s[k] * s[l])
        fail(errc::not_admissible,
             "no sign vector realizes this signature (triple " +
                 std::to_string(1) + "," + std::to_string(k + 1) + "," +
                 std::to_string(l + 1) + " has product +1)");
  SignVector first(std::move(s));
  SignVector second = first.negated();
  return {std::move(first), std::move(second)};
}

namespace {

void check_enumerable(std::size_t n) {
  if (n < 2) fail(errc::dimension_mismatch, "enumeration needs n >= 2");
  if (n > kMaxEnumerationDimension)
    fail(errc::dimension_too_large,
         "enumeration capped at n = " + std::to_string(kMaxEnumerationDimension));
}

}  // namespace

std::vector<SignatureMatrix> enumerate_admissible(std::size_t n) {
  check_enumerable(n);
  std::vector<SignatureMatrix> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::size_t bits = 0; bits < (std::size_t{1} << (n - 1)); ++bits) {
    std::vector<std::int8_t> s(n, 1);
    for (std::size_t l = 1; l < n; ++l)
      s[l] = (bits >> (l - 1)) & 1 ? std::int8_t{-1} : std::int8_t{1};
    out.push_back(SignVector(std::move(s)).to_signature());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignatureMatrix> orbit_of_anti(std::size_t n) {
  check_enumerable(n);
  std::set<SignatureMatrix> seen;
  std::vector<SignatureMatrix> frontier{SignatureMatrix::all_anti(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SignatureMatrix> next;
    for (const SignatureMatrix& eps : frontier)
      for (std::size_t axis = 0; axis < n; ++axis) {
        SignatureMatrix flipped = flip(eps, axis);
        if (seen.insert(flipped).second) next.push_back(std::move(flipped));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace sl2t
