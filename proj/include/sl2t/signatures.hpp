#pragma once

#include "sl2t/lattice.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sl2t {

// Element s of {-1,+1}^n realizing its signature through eps_kl = -s_k s_l.
// Construction validates that relation against every off-diagonal entry.
class SignVector {
public:
  explicit SignVector(std::vector<std::int8_t> signs);

  std::size_t dimension() const noexcept { return s_.size(); }
  int at(std::size_t k) const;
  const std::vector<std::int8_t>& signs() const noexcept { return s_; }

  SignVector negated() const;
  SignatureMatrix to_signature() const;

  bool operator==(const SignVector& other) const = default;

private:
  std::vector<std::int8_t> s_;
};

// Admissible: every off-diagonal triple product eps_jk*eps_kl*eps_jl is -1.
// For n = 2 the predicate is vacuous and every signature matrix counts as
// admissible (the plane has tilings for both off-diagonal signs); the
// classification statements below are meaningful for n >= 3 only.
bool is_admissible(const SignatureMatrix& eps);

// First triple (j,k,l), 0-based, whose product is +1; nullopt when admissible.
std::optional<std::array<std::size_t, 3>> admissibility_witness(
    const SignatureMatrix& eps);

// Negates row and column `axis` (0-based), diagonal fixed. Involution.
SignatureMatrix flip(const SignatureMatrix& eps, std::size_t axis);

// The two solutions (s, -s) of eps_kl = -s_k s_l, first normalized to
// s_0 = +1. errc::not_admissible exactly when some triple product is +1.
std::pair<SignVector, SignVector> signature_to_signs(const SignatureMatrix& eps);

inline constexpr std::size_t kMaxEnumerationDimension = 16;

// All 2^(n-1) admissible matrices, canonically ordered (lexicographic by
// flattened entries). 2 <= n <= 16.
std::vector<SignatureMatrix> enumerate_admissible(std::size_t n);

// Closure of the all-anti matrix under flips at every axis, canonically
// ordered. Equals enumerate_admissible(n).
std::vector<SignatureMatrix> orbit_of_anti(std::size_t n);

}  // namespace sl2t
