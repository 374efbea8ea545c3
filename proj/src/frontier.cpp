#include "sl2t/frontier.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sl2t {

namespace {

std::string cell_name(Coord i, Coord j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Coord parse_coord(std::string_view text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  Coord value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{}) fail(errc::bad_format, "bad coordinate in frontier");
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

std::vector<LatticePoint> Frontier::path_cells() const {
  if (start.size() != 2) fail(errc::dimension_mismatch, "frontier lives in Z^2");
  std::vector<LatticePoint> cells;
  cells.reserve(steps.size() + 1);
  LatticePoint p = start;
  cells.push_back(p);
  for (Step s : steps) {
    if (s == Step::right)
      ++p[1];
    else
      --p[0];
    cells.push_back(p);
  }
  return cells;
}

Frontier parse_frontier(std::string_view text) {
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      fail(errc::bad_format, std::string("expected '") + c + "' in frontier text");
    ++pos;
  };
  expect('@');
  expect('(');
  Frontier f;
  f.start.resize(2);
  f.start[0] = parse_coord(text, pos);
  expect(',');
  f.start[1] = parse_coord(text, pos);
  expect(')');
  while (pos < text.size() && text[pos] == ' ') ++pos;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == 'R' || c == 'r')
      f.steps.push_back(Step::right);
    else if (c == 'D' || c == 'd')
      f.steps.push_back(Step::down);
    else if (c == '\n' && pos + 1 == text.size())
      break;
    else
      fail(errc::bad_format, std::string("unexpected step character '") + c + "'");
  }
  return f;
}

std::string frontier_to_string(const Frontier& f) {
  std::ostringstream out;
  out << "@(" << f.start.at(0) << "," << f.start.at(1) << ") ";
  for (Step s : f.steps) out << (s == Step::right ? 'R' : 'D');
  return out.str();
}

Completion::Completion(int sign, Window bounding_box,
                       std::map<LatticePoint, BigInt> cells)
    : sign_(sign), box_(std::move(bounding_box)), cells_(std::move(cells)) {}

bool Completion::determined(const LatticePoint& p) const {
  return cells_.find(p) != cells_.end();
}

const BigInt& Completion::at(const LatticePoint& p) const {
  auto it = cells_.find(p);
  if (it == cells_.end())
    fail(errc::unreachable_cell,
         "cell " + cell_name(p.at(0), p.at(1)) + " was not determined");
  return it->second;
}

TilingWindow Completion::window(const Window& box) const {
  SignatureMatrix eps = sign_ < 0 ? SignatureMatrix::all_anti(2)
                                  : SignatureMatrix::all_sl2(2);
  return make_tiling(std::move(eps), box,
                     [&](const LatticePoint& p) { return at(p); });
}

TilingWindow Completion::window() const { return window(box_); }

ViolationReport Completion::verify() const {
  ViolationReport report;
  for (const auto& [p, corner] : cells_) {
    const Coord i = p[0], j = p[1];
    auto bottom_right = cells_.find({i, j + 1});
    auto top_left = cells_.find({i + 1, j});
    auto top_right = cells_.find({i + 1, j + 1});
    if (bottom_right == cells_.end() || top_left == cells_.end() ||
        top_right == cells_.end())
      continue;
    BigInt computed =
        bottom_right->second * top_left->second - corner * top_right->second;
    if (computed != sign_)
      report.violations.push_back({p, 0, 1, std::move(computed), sign_});
  }
  return report;
}

namespace {

struct Solver {
  const std::map<LatticePoint, BigInt>& cells;
  int sign;

  const BigInt* find(Coord i, Coord j) const {
    auto it = cells.find({i, j});
    return it == cells.end() ? nullptr : &it->second;
  }

  // Unknown corner (i,j) of the unit square with base (bi,bj); the other
  // three corners must already be determined. orientation +1 when (i,j) is
  // on the main diagonal of its square (base or top-right corner).
  bool solve(Coord i, Coord j, const BigInt& adj_a, const BigInt& adj_b,
             const BigInt& opposite, int orientation, BigInt& out) const {
    BigInt numerator = adj_a * adj_b - orientation * sign;
    if (!divide_exact(numerator, opposite, out))
      fail(errc::non_integer_division,
           "cell " + cell_name(i, j) + " needs " + to_decimal(numerator) + "/" +
               to_decimal(opposite));
    if (out < 1)
      fail(errc::non_positive_entry,
           "cell " + cell_name(i, j) + " computed as " + to_decimal(out));
    return true;
  }

  // All solves of cell (i,j) from squares whose other corners are known.
  std::vector<BigInt> candidates(Coord i, Coord j) const {
    std::vector<BigInt> values;
    BigInt value;
    // As bottom-left corner: needs (i,j+1), (i+1,j), (i+1,j+1).
    if (const BigInt* r = find(i, j + 1), *u = find(i + 1, j), *d = find(i + 1, j + 1);
        r && u && d && solve(i, j, *r, *u, *d, +1, value))
      values.push_back(value);
    // As bottom-right corner: needs (i,j-1), (i+1,j), (i+1,j-1).
    if (const BigInt* l = find(i, j - 1), *u = find(i + 1, j), *d = find(i + 1, j - 1);
        l && u && d && solve(i, j, *l, *u, *d, -1, value))
      values.push_back(value);
    // As top-left corner: needs (i-1,j), (i,j+1), (i-1,j+1).
    if (const BigInt* b = find(i - 1, j), *r = find(i, j + 1), *d = find(i - 1, j + 1);
        b && r && d && solve(i, j, *b, *r, *d, -1, value))
      values.push_back(value);
    // As top-right corner: needs (i-1,j), (i,j-1), (i-1,j-1).
    if (const BigInt* b = find(i - 1, j), *l = find(i, j - 1), *d = find(i - 1, j - 1);
        b && l && d && solve(i, j, *b, *l, *d, +1, value))
      values.push_back(value);
    return values;
  }
};

}  // namespace

Completion complete_frontier(const Frontier& f, int depth, int sign) {
  if (sign != 1 && sign != -1) fail(errc::bad_format, "sign must be -1 or +1");
  if (depth < 1) fail(errc::bad_index, "depth must be >= 1");

  const std::vector<LatticePoint> path = f.path_cells();
  LatticePoint lo = path.front();
  LatticePoint hi = path.front();
  for (const LatticePoint& p : path)
    for (std::size_t k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  Window box(lo, hi);

  std::map<LatticePoint, BigInt> cells;
  for (const LatticePoint& p : path) cells.emplace(p, 1);

  // Layer-by-layer propagation: each round determines, in lexicographic
  // order, every still-open box cell some fully-known unit square reaches.
  // Candidate values are taken against the previous round's snapshot, so the
  // result does not depend on scan order; cells with several determining
  // squares must agree.
  for (int round = 0; round < depth; ++round) {
    Solver solver{cells, sign};
    std::vector<std::pair<LatticePoint, BigInt>> fresh;
    box.for_each_point([&](const LatticePoint& p) {
      if (cells.find(p) != cells.end()) return;
      std::vector<BigInt> values = solver.candidates(p[0], p[1]);
      if (values.empty()) return;
      for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] != values[0])
          throw std::logic_error("local confluence violated at cell " +
                                 cell_name(p[0], p[1]));
      fresh.emplace_back(p, std::move(values[0]));
    });
    if (fresh.empty()) break;
    for (auto& [p, v] : fresh) cells.emplace(std::move(p), std::move(v));
  }

  return Completion(sign, std::move(box), std::move(cells));
}

TilingWindow reflect_plane(const TilingWindow& t) {
  if (t.dimension() != 2) fail(errc::dimension_mismatch, "reflection needs n = 2");
  const Window& w = t.window();
  Window reflected({w.lo()[0], -w.hi()[1]}, {w.hi()[0], -w.lo()[1]});
  const int off = t.epsilon().at(0, 1);
  SignatureMatrix eps = SignatureMatrix::from_upper_triangle(2, {-off});
  return make_tiling(std::move(eps), reflected, [&](const LatticePoint& p) {
    return t.at({p[0], -p[1]});
  });
}

}  // namespace sl2t
