#pragma once

// Canonical realizations of cycle-type specs on Z^2.
//
// RowLayout (specs with infinitely many cycles) keeps every horizontal line
// invariant. Rows are either translated (x -> x+1), tiled by finite cycles, or
// carry the finitely many finite-count cycles on a segment.
//
//   k < inf infinite cycles:       rows 1..k translated, all other rows tiled;
//                                  segment [0, L) on row 0
//   inf infinite, inf finite:      even rows translated, odd rows tiled;
//                                  segment [0, L) on row 1
//   inf infinite, finitely many    every row translated; row 0 jumps 0 -> L+1
//   finite cycles:                 and carries the segment [1, L]
//
// Tiled rows repeat the aleph_0-count sizes (longest first) with period P; row
// y is shifted by y so tiles on neighbouring rows are staggered.
//
// SweepLayout (finitely many cycles, m >= 1 infinite) moves points by at most
// one unit vertically. The finite cycles sit on the segment [1, L] x {0}.
//   m = 1:  one cycle sweeping the upper half plane in growing semi-squares,
//           mirrored (y -> -1-y) onto the lower half plane.
//   m >= 2: c_1 sweeps y >= 0 in quadrant squares on x >= 0 mirrored onto
//           x < 0; c_j (2 <= j < m) translates row 1-j; c_m is c_1 reflected
//           through y -> (1-m)-y with the direction reversed.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/inf/point.hpp"

namespace covext::inf {

namespace detail {

constexpr std::uint64_t kMaxSegment = 1ULL << 32;

/// Consecutive blocks of finite cycles; entries are (length, count).
class Segment {
 public:
  Segment() = default;
  Segment(std::int64_t start, std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks)
      : start_(start), blocks_(std::move(blocks)) {
    for (const auto& [len, count] : blocks_) {
      if (len != 0 && count > kMaxSegment / len) throw input_error("finite cycles too large to lay out");
      length_ += static_cast<std::int64_t>(len * count);
      if (static_cast<std::uint64_t>(length_) > kMaxSegment) throw input_error("finite cycles too large to lay out");
    }
  }

  std::int64_t start() const { return start_; }
  std::int64_t length() const { return length_; }
  bool contains(std::int64_t x) const { return x >= start_ && x < start_ + length_; }

  std::int64_t step(std::int64_t x, bool forward) const {
    std::int64_t d = x - start_;
    for (const auto& [len, count] : blocks_) {
      const auto block = static_cast<std::int64_t>(len * count);
      if (d < block) {
        const auto l = static_cast<std::int64_t>(len);
        const std::int64_t p = d % l;
        if (forward) return p < l - 1 ? x + 1 : x - (l - 1);
        return p > 0 ? x - 1 : x + (l - 1);
      }
      d -= block;
    }
    throw std::logic_error("Segment::step outside segment");
  }

 private:
  std::int64_t start_ = 0;
  std::int64_t length_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks_;
};

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> finite_count_blocks(const CycleTypeSpec& s) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& e : s.finite_entries())
    if (!e.count.infinite) out.emplace_back(e.size.value, e.count.value);
  return out;
}

}  // namespace detail

class RowLayout {
 public:
  enum class Shape { finite_rows, all_rows, even_rows, skip_row };

  explicit RowLayout(const CycleTypeSpec& spec) : spec_(spec) {
    if (!spec.has_infinitely_many_cycles()) {
      throw input_error("SIGMA_INF needs infinitely many cycles; use SIGMA_FIN for {" + spec.to_string() + "}");
    }
    for (const auto& e : spec.finite_entries()) {
      if (e.count.infinite) {
        tile_starts_.push_back(period_);
        tile_sizes_.push_back(static_cast<std::int64_t>(e.size.value));
        period_ += static_cast<std::int64_t>(e.size.value);
      }
    }
    const Cardinal c = spec.infinite_cycles();
    const bool tiled = period_ > 0;
    const auto blocks = detail::finite_count_blocks(spec);
    if (!c.infinite) {
      shape_ = Shape::finite_rows;
      shift_rows_ = static_cast<std::int64_t>(c.value);
      host_row_ = 0;
      segment_ = detail::Segment(0, blocks);
    } else if (tiled) {
      shape_ = Shape::even_rows;
      host_row_ = 1;
      segment_ = detail::Segment(0, blocks);
    } else if (blocks.empty()) {
      shape_ = Shape::all_rows;
    } else {
      shape_ = Shape::skip_row;
      host_row_ = 0;
      segment_ = detail::Segment(1, blocks);
    }
  }

  const CycleTypeSpec& spec() const { return spec_; }
  Shape shape() const { return shape_; }
  const detail::Segment& segment() const { return segment_; }
  std::int64_t host_row() const { return host_row_; }

  Point forward(Point p) const { return {step(p, true), p.y}; }
  Point backward(Point p) const { return {step(p, false), p.y}; }

 private:
  bool is_shift_row(std::int64_t y) const {
    switch (shape_) {
      case Shape::finite_rows: return y >= 1 && y <= shift_rows_;
      case Shape::all_rows: return true;
      case Shape::even_rows: return floor_mod(y, 2) == 0;
      case Shape::skip_row: return y != 0;
    }
    return false;
  }

  std::int64_t step(Point p, bool fwd) const {
    const std::int64_t x = p.x;
    if (shape_ == Shape::skip_row && p.y == 0) {
      if (segment_.contains(x)) return segment_.step(x, fwd);
      const std::int64_t gap = segment_.length() + 1;
      if (fwd) return x == 0 ? gap : x + 1;
      return x == gap ? 0 : x - 1;
    }
    if (is_shift_row(p.y)) return fwd ? x + 1 : x - 1;
    std::int64_t u = x - p.y;
    if (p.y == host_row_) {
      if (segment_.contains(x)) return segment_.step(x, fwd);
      u = x < 0 ? x : x - segment_.length();
    }
    const std::int64_t o = floor_mod(u, period_);
    std::size_t t = 0;
    while (t + 1 < tile_starts_.size() && tile_starts_[t + 1] <= o) ++t;
    const std::int64_t pos = o - tile_starts_[t];
    const std::int64_t len = tile_sizes_[t];
    if (fwd) return pos < len - 1 ? x + 1 : x - (len - 1);
    return pos > 0 ? x - 1 : x + (len - 1);
  }

  CycleTypeSpec spec_;
  Shape shape_ = Shape::all_rows;
  std::int64_t shift_rows_ = 0;
  std::int64_t host_row_ = 0;
  detail::Segment segment_;
  std::vector<std::int64_t> tile_starts_;
  std::vector<std::int64_t> tile_sizes_;
  std::int64_t period_ = 0;
};

namespace sweep {

inline std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Semi-square enumeration of the upper half plane y >= 0. Shell r holds the
/// points with max(|x|, y) = r and starts at index 2r^2 - r. Odd shells run up
/// x = r, left along y = r, down x = -r; even shells are the mirror image.
inline std::int64_t semi_index(Point p) {
  const std::int64_t r = std::max(std::abs(p.x), p.y);
  const std::int64_t x = (r % 2 == 1) ? p.x : -p.x;
  const std::int64_t y = p.y;
  std::int64_t off;
  if (x == r) off = y;
  else if (y == r) off = r + (r - x);
  else off = 3 * r + (r - y);
  return 2 * r * r - r + off;
}

inline Point semi_point(std::int64_t n) {
  std::int64_t r = (1 + isqrt(1 + 8 * n)) / 4;
  while (2 * r * r - r > n) --r;
  while (2 * (r + 1) * (r + 1) - (r + 1) <= n) ++r;
  const std::int64_t off = n - (2 * r * r - r);
  Point p;
  if (off <= r) p = {r, off};
  else if (off <= 3 * r) p = {r - (off - r), r};
  else p = {-r, 4 * r - off};
  if (r % 2 == 0) p.x = -p.x;
  return p;
}

/// Whole plane: lower half plane mirrored through y -> -1-y at negative indices.
inline std::int64_t plane_index(Point p) {
  if (p.y >= 0) return semi_index(p);
  return -1 - semi_index({p.x, -1 - p.y});
}

inline Point plane_point(std::int64_t n) {
  if (n >= 0) return semi_point(n);
  const Point q = semi_point(-1 - n);
  return {q.x, -1 - q.y};
}

/// Quadrant-square enumeration of x, y >= 0. Shell r starts at r^2. Odd
/// shells run (r,0) up to (r,r) then left to (0,r); even shells run (0,r)
/// right to (r,r) then down to (r,0).
inline std::int64_t quadrant_index(Point p) {
  const std::int64_t r = std::max(p.x, p.y);
  std::int64_t off;
  if (r % 2 == 1) off = (p.x == r) ? p.y : r + (r - p.x);
  else off = (p.y == r) ? p.x : r + (r - p.y);
  return r * r + off;
}

inline Point quadrant_point(std::int64_t n) {
  const std::int64_t r = isqrt(n);
  const std::int64_t off = n - r * r;
  if (r % 2 == 1) return off <= r ? Point{r, off} : Point{2 * r - off, r};
  return off <= r ? Point{off, r} : Point{r, 2 * r - off};
}

/// Upper half plane: x < 0 mirrored through x -> -1-x at negative indices.
inline std::int64_t half_index(Point p) {
  if (p.x >= 0) return quadrant_index(p);
  return -1 - quadrant_index({-1 - p.x, p.y});
}

inline Point half_point(std::int64_t n) {
  if (n >= 0) return quadrant_point(n);
  const Point q = quadrant_point(-1 - n);
  return {-1 - q.x, q.y};
}

}  // namespace sweep

class SweepLayout {
 public:
  explicit SweepLayout(const CycleTypeSpec& spec) : spec_(spec) {
    if (spec.has_infinitely_many_cycles()) {
      throw input_error("SIGMA_FIN needs finitely many cycles; use SIGMA_INF for {" + spec.to_string() + "}");
    }
    const Cardinal c = spec.infinite_cycles();
    if (c.is_zero()) throw input_error("infeasible spec {" + spec.to_string() + "}: no infinite cycle");
    m_ = static_cast<std::int64_t>(c.value);
    if (m_ > 1'000'000) throw input_error("too many infinite cycles");
    segment_ = detail::Segment(1, detail::finite_count_blocks(spec));
  }

  const CycleTypeSpec& spec() const { return spec_; }
  const detail::Segment& segment() const { return segment_; }
  std::int64_t infinite_cycle_count() const { return m_; }

  Point forward(Point p) const { return step(p, true); }
  Point backward(Point p) const { return step(p, false); }

 private:
  bool in_segment(Point p) const { return p.y == 0 && segment_.contains(p.x); }

  Point step(Point p, bool fwd) const {
    if (in_segment(p)) return {segment_.step(p.x, fwd), 0};
    const std::int64_t d = fwd ? 1 : -1;
    if (m_ == 1) {
      std::int64_t i = sweep::plane_index(p);
      Point q;
      do {
        i += d;
        q = sweep::plane_point(i);
      } while (in_segment(q));
      return q;
    }
    if (p.y >= 0) {
      std::int64_t i = sweep::half_index(p);
      Point q;
      do {
        i += d;
        q = sweep::half_point(i);
      } while (in_segment(q));
      return q;
    }
    if (p.y > 1 - m_) return {p.x + d, p.y};
    const std::int64_t axis = 1 - m_;
    const Point r = sweep::half_point(sweep::half_index({p.x, axis - p.y}) - d);
    return {r.x, axis - r.y};
  }

  CycleTypeSpec spec_;
  std::int64_t m_ = 1;
  detail::Segment segment_;
};

}  // namespace covext::inf
