#pragma once

// Representations pi_1(S) -> Sym(Z^2) with lazily evaluated generator images,
// under the same presentation as SurfaceRep.

#include <cstdint>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/lazy_perm.hpp"
#include "covext/inf/window.hpp"
#include "covext/surface.hpp"

namespace covext::inf {

struct LazySurfaceRep {
  SurfaceSpec spec;
  std::vector<std::pair<LazyPerm, LazyPerm>> handles;
  std::vector<LazyPerm> squares;
  std::vector<LazyPerm> boundary;

  static LazySurfaceRep trivial(const SurfaceSpec& spec) {
    spec.validate();
    LazySurfaceRep r;
    r.spec = spec;
    if (spec.orientable) r.handles.assign(spec.genus, {LazyPerm(), LazyPerm()});
    else r.squares.assign(spec.genus, LazyPerm());
    r.boundary.assign(spec.boundary_count, LazyPerm());
    return r;
  }

  std::vector<LazyPerm> generators() const {
    std::vector<LazyPerm> g;
    for (const auto& [a, b] : handles) {
      g.push_back(a);
      g.push_back(b);
    }
    for (const auto& v : squares) g.push_back(v);
    for (const auto& s : boundary) g.push_back(s);
    return g;
  }

  void validate_shape() const {
    spec.validate();
    const std::size_t want_h = spec.orientable ? spec.genus : 0;
    const std::size_t want_v = spec.orientable ? 0 : spec.genus;
    if (handles.size() != want_h || squares.size() != want_v || boundary.size() != spec.boundary_count) {
      throw input_error("representation shape does not match surface " + spec.to_string());
    }
  }

  /// The relator word applied to q.
  Point relator(Point q, step_budget& b) const {
    for (auto it = boundary.rbegin(); it != boundary.rend(); ++it) q = it->forward(q, b);
    for (auto it = squares.rbegin(); it != squares.rend(); ++it) q = it->forward(it->forward(q, b), b);
    for (auto it = handles.rbegin(); it != handles.rend(); ++it) {
      const auto& [a, c] = *it;
      q = a.forward(c.forward(a.backward(c.backward(q, b), b), b), b);
    }
    return q;
  }
};

/// The relator fixes every point of [-n, n]^2.
inline bool window_relator_check(const LazySurfaceRep& rep, std::int64_t n) {
  rep.validate_shape();
  bool ok = true;
  for_each_in_window(n, [&](Point q) {
    if (!ok) return;
    step_budget b;
    ok = rep.relator(q, b) == q;
  });
  return ok;
}

}  // namespace covext::inf
