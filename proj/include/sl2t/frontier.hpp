#pragma once

#include "sl2t/engine.hpp"
#include "sl2t/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sl2t {

enum class Step : std::uint8_t {
  right,  // column j + 1
  down,   // row i - 1
};

// Finite monotone staircase path in Z^2, every visited cell labeled 1.
// Monotone right/down steps visit distinct cells by construction.
struct Frontier {
  LatticePoint start;  // dimension 2: (row i, column j)
  std::vector<Step> steps;

  std::vector<LatticePoint> path_cells() const;
};

// Text form `@(i,j) RDRD...` (empty step string allowed: single cell).
Frontier parse_frontier(std::string_view text);
std::string frontier_to_string(const Frontier& f);

// Everything the unit-square relation determines from a frontier of 1's
// within a propagation depth. Cells the given depth did not reach are simply
// absent; a rectangular TilingWindow can be cut out wherever the region has
// no holes.
class Completion {
public:
  Completion(int sign, Window bounding_box,
             std::map<LatticePoint, BigInt> cells);

  int sign() const noexcept { return sign_; }
  const Window& bounding_box() const noexcept { return box_; }
  const std::map<LatticePoint, BigInt>& cells() const noexcept { return cells_; }

  bool determined(const LatticePoint& p) const;
  const BigInt& at(const LatticePoint& p) const;  // errc::unreachable_cell

  // Dense window over `box`; errc::unreachable_cell when any cell of the box
  // is undetermined. The no-argument form uses the full bounding box.
  TilingWindow window(const Window& box) const;
  TilingWindow window() const;

  // Checks the relation on every unit square whose four corners are all
  // determined, same report order as verify_window.
  ViolationReport verify() const;

private:
  int sign_;
  Window box_;
  std::map<LatticePoint, BigInt> cells_;
};

// Completes the frontier by solving the unit-square relation (off-diagonal
// sign `sign`, -1 or +1) for the unknown corner of every square whose other
// three corners are known, layer by layer up to `depth` rounds. Exact
// division is mandatory: a remainder raises errc::non_integer_division and a
// computed value < 1 raises errc::non_positive_entry, each naming the failing
// cell; that failure is the operational certificate that the frontier does
// not complete.
Completion complete_frontier(const Frontier& f, int depth, int sign);

// b(i,j) = a(i,-j) on the reflected window; off-diagonal signature sign
// negated. Dimension 2 only. Involution; maps verifier-clean windows to
// verifier-clean windows.
TilingWindow reflect_plane(const TilingWindow& t);

}  // namespace sl2t
