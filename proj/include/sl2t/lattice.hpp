#pragma once

#include "sl2t/bigint.hpp"
#include "sl2t/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace sl2t {

using Coord = std::int64_t;

// A point of Z^n. Dimension is the vector length; all points handed to one
// window must share it.
using LatticePoint = std::vector<Coord>;

LatticePoint unit_vector(std::size_t n, std::size_t axis);
Coord coordinate_sum(const LatticePoint& p);

// Finite axis-aligned box in Z^n with inclusive bounds. Cell iteration order
// is lexicographic (first coordinate most significant) and deterministic.
class Window {
public:
  // Total cell budget; larger boxes are refused outright.
  static constexpr std::uint64_t kMaxCells = 100'000'000;

  Window(LatticePoint lo, LatticePoint hi);

  std::size_t dimension() const noexcept { return lo_.size(); }
  const LatticePoint& lo() const noexcept { return lo_; }
  const LatticePoint& hi() const noexcept { return hi_; }
  std::size_t cell_count() const noexcept { return cells_; }

  bool contains(const LatticePoint& p) const;

  // Lexicographic offset of p; errc::out_of_window when p is not inside.
  std::size_t index_of(const LatticePoint& p) const;
  LatticePoint point_at(std::size_t index) const;

  // In-place lexicographic successor; false once p was the last cell.
  bool advance(LatticePoint& p) const;

  template <typename F>
  void for_each_point(F&& fn) const {
    LatticePoint p = lo_;
    do {
      fn(const_cast<const LatticePoint&>(p));
    } while (advance(p));
  }

  bool operator==(const Window& other) const = default;

private:
  LatticePoint lo_;
  LatticePoint hi_;
  std::size_t cells_ = 0;
};

Window make_window(LatticePoint lo, LatticePoint hi);

// Symmetric n x n matrix over {-1,+1} with -1 diagonal. Entries are stored
// flat, row-major; comparison is lexicographic on that storage so sets of
// matrices have one canonical order.
class SignatureMatrix {
public:
  SignatureMatrix(std::size_t n, std::vector<std::int8_t> entries);

  static SignatureMatrix all_anti(std::size_t n);
  static SignatureMatrix all_sl2(std::size_t n);
  // Strict upper triangle in row-major order: (1,2),(1,3),...,(n-1,n).
  static SignatureMatrix from_upper_triangle(std::size_t n,
                                             const std::vector<int>& signs);

  std::size_t dimension() const noexcept { return n_; }
  int at(std::size_t k, std::size_t l) const;
  const std::vector<std::int8_t>& flat() const noexcept { return eps_; }

  // True when every off-diagonal entry equals `sign`.
  bool is_constant_off_diagonal(int sign) const;

  bool operator==(const SignatureMatrix& other) const = default;
  bool operator<(const SignatureMatrix& other) const;

private:
  std::size_t n_;
  std::vector<std::int8_t> eps_;
};

// Finite restriction of a claimed signature tiling: a positive entry for
// every cell of the window, stored in lexicographic cell order.
class TilingWindow {
public:
  TilingWindow(SignatureMatrix epsilon, Window window,
               std::vector<BigInt> entries);

  std::size_t dimension() const noexcept { return window_.dimension(); }
  const SignatureMatrix& epsilon() const noexcept { return epsilon_; }
  const Window& window() const noexcept { return window_; }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  const BigInt& at(const LatticePoint& p) const;

  bool operator==(const TilingWindow& other) const = default;

private:
  SignatureMatrix epsilon_;
  Window window_;
  std::vector<BigInt> entries_;
};

const BigInt& get_entry(const TilingWindow& t, const LatticePoint& p);

template <typename F>
TilingWindow make_tiling(SignatureMatrix epsilon, const Window& window, F&& value_at) {
  std::vector<BigInt> entries;
  entries.reserve(window.cell_count());
  window.for_each_point([&](const LatticePoint& p) { entries.push_back(value_at(p)); });
  return TilingWindow(std::move(epsilon), window, std::move(entries));
}

}  // namespace sl2t
