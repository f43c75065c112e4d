#pragma once

// Finite permutations of {1..n}.
//
// Conventions used throughout covext:
//  * Points are 0-based internally and 1-based in every text format.
//  * The product a * b is function composition: (a * b)(x) = a(b(x)), so b
//    acts first. compose(a, b) is the explicit "a first, then b" operation and
//    equals b * a.
//  * commutator(a, b) = a * b * a^-1 * b^-1, i.e. x -> a(b(a^-1(b^-1(x)))).
//  * Fixed points are cycles of length 1.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "covext/error.hpp"
#include "covext/partition.hpp"

namespace covext {

class Perm {
 public:
  using point = std::uint32_t;

  Perm() : Perm(1) {}

  /// Identity of degree n.
  explicit Perm(std::size_t n) : images_(n) {
    if (n == 0) throw input_error("permutation degree must be >= 1");
    std::iota(images_.begin(), images_.end(), point{0});
  }

  /// From 0-based images; validates bijectivity.
  static Perm from_images(std::vector<point> images) {
    if (images.empty()) throw input_error("permutation degree must be >= 1");
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size()) throw input_error("image out of range");
      if (seen[v]) throw input_error("image appears twice; not a bijection");
      seen[v] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// From 1-based cycles; unlisted points are fixed.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<point>>& cycles) {
    Perm p(n);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        point a = c[i];
        if (a < 1 || a > n) {
          throw input_error("cycle entry " + std::to_string(a) + " outside 1.." +
                            std::to_string(n));
        }
        if (used[a - 1]) throw input_error("entry " + std::to_string(a) + " repeated");
        used[a - 1] = true;
        p.images_[a - 1] = c[(i + 1) % c.size()] - 1;
      }
    }
    return p;
  }

  /// Parses cycle notation such as "(1 2 3)(4 5)". "()" and "" denote the
  /// identity; commas are accepted as separators.
  static Perm parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                 text[i] == ','))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw input_error("expected '(' at column " + std::to_string(i + 1) + " in \"" +
                          std::string(text) + "\"");
      }
      ++i;
      std::vector<point> cyc;
      for (;;) {
        skip_ws();
        if (i >= text.size()) throw input_error("unterminated cycle in \"" + std::string(text) + "\"");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw input_error("unexpected character '" + std::string(1, text[i]) +
                            "' at column " + std::to_string(i + 1));
        }
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 1'000'000'000) throw input_error("cycle entry too large");
          ++i;
        }
        cyc.push_back(static_cast<point>(v));
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(n, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  point operator()(point x) const { return images_[x]; }
  std::span<const point> images() const { return images_; }

  bool is_identity() const {
    for (point i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r(degree());
    for (point i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
    return r;
  }

  /// All cycles including fixed points, each starting at its smallest point,
  /// ordered by starting point.
  std::vector<std::vector<point>> cycles() const {
    std::vector<std::vector<point>> out;
    std::vector<bool> seen(degree(), false);
    for (point s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      std::vector<point> c;
      for (point x = s; !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t cycle_count() const { return cycles().size(); }

  /// 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  Perm pow(std::int64_t k) const {
    Perm base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Perm r(degree());
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) {
      throw input_error("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                        std::to_string(b.degree()));
    }
    Perm r(a.degree());
    for (point i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<point> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

/// a first, then b.
inline Perm compose(const Perm& a, const Perm& b) { return b * a; }

/// b a b^-1.
inline Perm conjugate(const Perm& a, const Perm& b) { return b * a * b.inverse(); }

inline Perm commutator(const Perm& a, const Perm& b) {
  return a * b * a.inverse() * b.inverse();
}

enum class PermAlgebraMode { compose, inverse, conjugate, commutator };

inline Perm perm_algebra(PermAlgebraMode mode, const Perm& a, const Perm* b = nullptr) {
  if (mode == PermAlgebraMode::inverse) return a.inverse();
  if (b == nullptr) throw input_error("second operand required");
  switch (mode) {
    case PermAlgebraMode::compose: return compose(a, *b);
    case PermAlgebraMode::conjugate: return conjugate(a, *b);
    case PermAlgebraMode::commutator: return commutator(a, *b);
    default: break;
  }
  return a.inverse();
}

inline CycleType cycle_type(const Perm& p) {
  std::vector<std::uint32_t> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<std::uint32_t>(c.size()));
  return CycleType(std::move(parts));
}

enum class Parity { even, odd };

inline Parity parity(const Perm& p) {
  return (p.degree() - p.cycle_count()) % 2 == 0 ? Parity::even : Parity::odd;
}

/// Orbits of the group generated by gens on {0..n-1}, each sorted, ordered by
/// smallest element. With no generators every point is its own orbit.
inline std::vector<std::vector<Perm::point>> orbits(std::span<const Perm> gens, std::size_t n) {
  for (const auto& g : gens) {
    if (g.degree() != n) throw input_error("orbits: generator degree mismatch");
  }
  std::vector<std::int64_t> comp(n, -1);
  std::vector<std::vector<Perm::point>> out;
  for (Perm::point s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Perm::point> orbit{s};
    comp[s] = static_cast<std::int64_t>(out.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens) {
        Perm::point y = g(orbit[head]);
        if (comp[y] < 0) {
          comp[y] = comp[s];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline bool is_transitive(std::span<const Perm> gens, std::size_t n) {
  return orbits(gens, n).size() == 1;
}

struct ThreeSquares {
  Perm s1, s2, s3;
};

/// [x,y] = (xy)^2 (y^-1 x^-1 y)^2 (y^-1)^2; returns the three bases.
inline ThreeSquares three_squares(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw input_error("three_squares: degree mismatch");
  Perm yi = y.inverse();
  return {x * y, yi * x.inverse() * y, yi};
}

/// Representative laying the cycles on consecutive blocks, longest first:
/// {3,2} -> (1 2 3)(4 5).
inline Perm canonical_representative(const CycleType& t) {
  std::vector<std::vector<Perm::point>> cycles;
  Perm::point next = 1;
  for (auto len : t.parts()) {
    std::vector<Perm::point> c;
    for (std::uint32_t i = 0; i < len; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(t.size(), cycles);
}

}  // namespace covext
