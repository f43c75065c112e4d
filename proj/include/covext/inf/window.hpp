#pragma once

// Pointwise verification of identities between lazy permutations on the box
// [-N, N]^2.

#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "covext/inf/lazy_perm.hpp"
#include "covext/inf/point.hpp"

namespace covext::inf {

inline bool in_window(Point p, std::int64_t n) {
  return p.x >= -n && p.x <= n && p.y >= -n && p.y <= n;
}

/// g h g^-1 h^-1 (q) = sigma(q) for every q in the window.
inline bool window_commutator_check(const LazyPerm& g, const LazyPerm& h, const LazyPerm& sigma, std::int64_t n) {
  bool ok = true;
  for_each_in_window(n, [&](Point q) {
    if (!ok) return;
    step_budget b;
    const Point lhs = g.forward(h.forward(g.backward(h.backward(q, b), b), b), b);
    ok = lhs == sigma.forward(q, b);
  });
  return ok;
}

/// p(q) = r(q) for every q in the window.
inline bool window_equal(const LazyPerm& p, const LazyPerm& r, std::int64_t n) {
  bool ok = true;
  for_each_in_window(n, [&](Point q) {
    if (ok) ok = p.forward(q) == r.forward(q);
  });
  return ok;
}

/// backward(forward(q)) = q and forward(backward(q)) = q on the window.
inline bool window_inverse_law(const LazyPerm& p, std::int64_t n) {
  bool ok = true;
  for_each_in_window(n, [&](Point q) {
    if (ok) ok = p.backward(p.forward(q)) == q && p.forward(p.backward(q)) == q;
  });
  return ok;
}

/// Breadth-first search from (0,0) along the generators and their inverses,
/// words of length <= word_budget. False when the target box is not covered
/// (including when the search is cut off by node_cap).
inline bool window_transitivity(std::span<const LazyPerm> gens, std::int64_t target_n, std::int64_t word_budget,
                                std::size_t node_cap = 4'000'000) {
  const std::int64_t side = 2 * target_n + 1;
  std::int64_t remaining = side * side;
  std::unordered_set<Point, PointHash> seen{Point{0, 0}};
  std::vector<Point> frontier{Point{0, 0}};
  if (in_window({0, 0}, target_n)) --remaining;
  for (std::int64_t depth = 0; depth < word_budget && remaining > 0 && !frontier.empty(); ++depth) {
    std::vector<Point> next;
    for (const Point& p : frontier) {
      for (const auto& g : gens) {
        for (const Point q : {g.forward(p), g.backward(p)}) {
          if (!seen.insert(q).second) continue;
          if (in_window(q, target_n)) --remaining;
          next.push_back(q);
          if (seen.size() > node_cap) return false;
        }
      }
    }
    frontier = std::move(next);
  }
  return remaining == 0;
}

struct CycleCensus {
  std::map<std::uint64_t, std::uint64_t> finite_cycles;  // length -> count
  std::uint64_t truncated = 0;  // maximal orbit segments leaving the window

  std::uint64_t finite_cycle_total() const {
    std::uint64_t t = 0;
    for (const auto& [len, c] : finite_cycles) t += c;
    return t;
  }
};

/// Finite cycles lying wholly inside the window, and the number of maximal
/// orbit segments that run out of it.
inline CycleCensus window_cycle_census(const LazyPerm& p, std::int64_t n) {
  CycleCensus out;
  std::unordered_set<Point, PointHash> done;
  for_each_in_window(n, [&](Point start) {
    if (done.count(start)) return;
    Point head = start;
    bool closed = false;
    for (;;) {
      const Point prev = p.backward(head);
      if (prev == start) {
        closed = true;
        break;
      }
      if (!in_window(prev, n)) break;
      head = prev;
    }
    if (closed) {
      std::uint64_t len = 0;
      Point q = start;
      do {
        done.insert(q);
        ++len;
        q = p.forward(q);
      } while (q != start);
      ++out.finite_cycles[len];
      return;
    }
    Point q = head;
    while (in_window(q, n)) {
      done.insert(q);
      q = p.forward(q);
    }
    ++out.truncated;
  });
  return out;
}

/// Largest |y(p(q)) - y(q)| over the window.
inline std::int64_t window_max_vertical_step(const LazyPerm& p, std::int64_t n) {
  std::int64_t m = 0;
  for_each_in_window(n, [&](Point q) {
    const std::int64_t d = p.forward(q).y - q.y;
    m = std::max(m, d < 0 ? -d : d);
  });
  return m;
}

}  // namespace covext::inf
