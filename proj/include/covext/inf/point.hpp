#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace covext::inf {

/// A point of the lattice Z^2 on which all infinite permutations act.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    const auto a = static_cast<std::uint64_t>(p.x);
    const auto b = static_cast<std::uint64_t>(p.y);
    return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x7F4A7C159E3779B9ULL + (a << 6)));
  }
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

/// Calls f on every point of [-n, n]^2, row by row from the bottom left.
template <typename F>
void for_each_in_window(std::int64_t n, F&& f) {
  for (std::int64_t y = -n; y <= n; ++y)
    for (std::int64_t x = -n; x <= n; ++x) f(Point{x, y});
}

}  // namespace covext::inf
