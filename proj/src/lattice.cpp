#include "sl2t/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace sl2t {

namespace {

std::string point_to_string(const LatticePoint& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out << ',';
    out << p[k];
  }
  out << ')';
  return out.str();
}

}  // namespace

LatticePoint unit_vector(std::size_t n, std::size_t axis) {
  if (axis >= n) fail(errc::bad_axis, "axis out of range");
  LatticePoint e(n, 0);
  e[axis] = 1;
  return e;
}

Coord coordinate_sum(const LatticePoint& p) {
  Coord sum = 0;
  for (Coord c : p) sum += c;
  return sum;
}

Window::Window(LatticePoint lo, LatticePoint hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size())
    fail(errc::dimension_mismatch, "window bounds of unequal dimension");
  if (lo_.size() < 2) fail(errc::dimension_mismatch, "dimension must be >= 2");
  unsigned __int128 cells = 1;
  for (std::size_t k = 0; k < lo_.size(); ++k) {
    if (lo_[k] > hi_[k])
      fail(errc::empty_window, "lo exceeds hi on axis " + std::to_string(k + 1));
    unsigned __int128 extent =
        static_cast<unsigned __int128>(hi_[k]) - static_cast<unsigned __int128>(lo_[k]) + 1;
    cells *= extent;
    if (cells > kMaxCells)
      fail(errc::too_large, "window exceeds " + std::to_string(kMaxCells) + " cells");
  }
  cells_ = static_cast<std::size_t>(cells);
}

bool Window::contains(const LatticePoint& p) const {
  if (p.size() != lo_.size()) return false;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] < lo_[k] || p[k] > hi_[k]) return false;
  return true;
}

std::size_t Window::index_of(const LatticePoint& p) const {
  if (!contains(p))
    fail(errc::out_of_window, "point " + point_to_string(p) + " not in window");
  std::size_t index = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t extent = static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    index = index * extent + static_cast<std::size_t>(p[k] - lo_[k]);
  }
  return index;
}

LatticePoint Window::point_at(std::size_t index) const {
  if (index >= cells_) fail(errc::out_of_window, "cell index out of range");
  LatticePoint p(lo_.size());
  for (std::size_t k = lo_.size(); k-- > 0;) {
    std::size_t extent = static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    p[k] = lo_[k] + static_cast<Coord>(index % extent);
    index /= extent;
  }
  return p;
}

bool Window::advance(LatticePoint& p) const {
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] < hi_[k]) {
      ++p[k];
      return true;
    }
    p[k] = lo_[k];
  }
  return false;
}

Window make_window(LatticePoint lo, LatticePoint hi) {
  return Window(std::move(lo), std::move(hi));
}

SignatureMatrix::SignatureMatrix(std::size_t n, std::vector<std::int8_t> entries)
    : n_(n), eps_(std::move(entries)) {
  if (n_ < 2) fail(errc::dimension_mismatch, "signature matrix needs n >= 2");
  if (eps_.size() != n_ * n_)
    fail(errc::dimension_mismatch, "signature matrix entry count mismatch");
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t l = 0; l < n_; ++l) {
      std::int8_t v = eps_[k * n_ + l];
      if (v != 1 && v != -1)
        fail(errc::bad_format, "signature entries must be -1 or +1");
      if (k == l && v != -1)
        fail(errc::bad_format, "signature diagonal must be -1");
      if (v != eps_[l * n_ + k])
        fail(errc::bad_format, "signature matrix must be symmetric");
    }
  }
}

SignatureMatrix SignatureMatrix::all_anti(std::size_t n) {
  std::vector<std::int8_t> eps(n * n, -1);
  return SignatureMatrix(n, std::move(eps));
}

SignatureMatrix SignatureMatrix::all_sl2(std::size_t n) {
  std::vector<std::int8_t> eps(n * n, 1);
  for (std::size_t k = 0; k < n; ++k) eps[k * n + k] = -1;
  return SignatureMatrix(n, std::move(eps));
}

SignatureMatrix SignatureMatrix::from_upper_triangle(std::size_t n,
                                                     const std::vector<int>& signs) {
  if (n < 2) fail(errc::dimension_mismatch, "signature matrix needs n >= 2");
  if (signs.size() != n * (n - 1) / 2)
    fail(errc::bad_format, "expected n(n-1)/2 upper-triangle signs, got " +
                               std::to_string(signs.size()));
  std::vector<std::int8_t> eps(n * n, -1);
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      int v = signs[next++];
      if (v != 1 && v != -1) fail(errc::bad_format, "signs must be -1 or +1");
      eps[k * n + l] = static_cast<std::int8_t>(v);
      eps[l * n + k] = static_cast<std::int8_t>(v);
    }
  }
  return SignatureMatrix(n, std::move(eps));
}

int SignatureMatrix::at(std::size_t k, std::size_t l) const {
  if (k >= n_ || l >= n_) fail(errc::bad_axis, "signature index out of range");
  return eps_[k * n_ + l];
}

bool SignatureMatrix::is_constant_off_diagonal(int sign) const {
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = k + 1; l < n_; ++l)
      if (eps_[k * n_ + l] != sign) return false;
  return true;
}

bool SignatureMatrix::operator<(const SignatureMatrix& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return std::lexicographical_compare(eps_.begin(), eps_.end(),
                                      other.eps_.begin(), other.eps_.end());
}

TilingWindow::TilingWindow(SignatureMatrix epsilon, Window window,
                           std::vector<BigInt> entries)
    : epsilon_(std::move(epsilon)),
      window_(std::move(window)),
      entries_(std::move(entries)) {
  if (epsilon_.dimension() != window_.dimension())
    fail(errc::dimension_mismatch, "signature and window dimension differ");
  if (entries_.size() != window_.cell_count())
    fail(errc::dimension_mismatch,
         "expected " + std::to_string(window_.cell_count()) + " entries, got " +
             std::to_string(entries_.size()));
  for (const BigInt& v : entries_)
    if (v < 1) fail(errc::non_positive_entry, "tiling entries must be >= 1");
}

const BigInt& TilingWindow::at(const LatticePoint& p) const {
  return entries_[window_.index_of(p)];
}

const BigInt& get_entry(const TilingWindow& t, const LatticePoint& p) {
  return t.at(p);
}

}  // namespace sl2t
