#pragma once

// Surfaces with boundary, permutation representations of their fundamental
// groups, and covering-space bookkeeping.
//
// Presentation used for a surface of genus g with k boundary circles:
//   orientable:      [a_1,b_1] ... [a_g,b_g] s_1 ... s_k = e
//   non-orientable:  v_1^2 ... v_g^2 s_1 ... s_k = e
// where s_i is the positively oriented i-th boundary circle. Products are
// function composition (rightmost factor acts first).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/perm.hpp"
#include "covext/union_find.hpp"

namespace covext {

struct SurfaceSpec {
  bool orientable = true;
  std::uint32_t genus = 0;
  std::uint32_t boundary_count = 0;

  void validate() const {
    if (!orientable && genus == 0) {
      throw input_error("a non-orientable surface needs genus >= 1");
    }
  }

  std::string to_string() const {
    return std::string(orientable ? "orientable" : "nonorientable") + " g=" +
           std::to_string(genus) + " k=" + std::to_string(boundary_count);
  }

  bool operator==(const SurfaceSpec&) const = default;
};

inline std::int64_t euler_characteristic(const SurfaceSpec& s) {
  s.validate();
  const auto g = static_cast<std::int64_t>(s.genus);
  const auto k = static_cast<std::int64_t>(s.boundary_count);
  return s.orientable ? 2 - 2 * g - k : 2 - g - k;
}

/// A homomorphism pi_1(S) -> S_n given by generator images.
struct SurfaceRep {
  SurfaceSpec spec;
  std::size_t degree = 1;
  std::vector<std::pair<Perm, Perm>> handles;  // orientable: (a_j, b_j)
  std::vector<Perm> squares;                   // non-orientable: v_j
  std::vector<Perm> boundary;                  // s_1..s_k

  /// Identity images everywhere.
  static SurfaceRep trivial(const SurfaceSpec& spec, std::size_t n) {
    spec.validate();
    SurfaceRep r;
    r.spec = spec;
    r.degree = n;
    if (spec.orientable) {
      r.handles.assign(spec.genus, {Perm(n), Perm(n)});
    } else {
      r.squares.assign(spec.genus, Perm(n));
    }
    r.boundary.assign(spec.boundary_count, Perm(n));
    return r;
  }

  std::vector<Perm> generators() const {
    std::vector<Perm> g;
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
    if (handles.size() != want_h || squares.size() != want_v ||
        boundary.size() != spec.boundary_count) {
      throw input_error("representation shape does not match surface " + spec.to_string());
    }
    for (const auto& g : generators()) {
      if (g.degree() != degree) {
        throw input_error("generator of degree " + std::to_string(g.degree()) +
                          " in a degree-" + std::to_string(degree) + " representation");
      }
    }
  }

  /// Value of the surface relator word.
  Perm relator() const {
    validate_shape();
    Perm w(degree);
    for (const auto& [a, b] : handles) w = w * commutator(a, b);
    for (const auto& v : squares) w = w * v * v;
    for (const auto& s : boundary) w = w * s;
    return w;
  }
};

inline bool check_representation(const SurfaceRep& rep) { return rep.relator().is_identity(); }

struct CoverComponent {
  std::size_t degree = 0;
  std::int64_t euler_characteristic = 0;
  // boundary_circles[i] = lengths of the circles lying over base boundary i
  std::vector<std::vector<std::uint32_t>> boundary_circles;
  std::optional<std::int64_t> genus;  // orientable base only
  std::vector<Perm::point> sheets;    // 0-based fibre points of this component

  std::size_t boundary_circle_count() const {
    std::size_t c = 0;
    for (const auto& b : boundary_circles) c += b.size();
    return c;
  }
};

struct CoverDescription {
  std::vector<CoverComponent> components;

  std::size_t component_count() const { return components.size(); }
  std::size_t boundary_circle_count() const {
    std::size_t c = 0;
    for (const auto& comp : components) c += comp.boundary_circle_count();
    return c;
  }
};

/// Components are orbits of the image group. Over boundary circle i, the
/// circles of a component are the cycles of s_i on that orbit.
inline CoverDescription describe_cover(const SurfaceRep& rep) {
  rep.validate_shape();
  const auto chi = euler_characteristic(rep.spec);
  const auto gens = rep.generators();
  CoverDescription out;
  std::vector<std::int64_t> comp_of(rep.degree, -1);
  for (const auto& orbit : orbits(gens, rep.degree)) {
    for (auto p : orbit) comp_of[p] = static_cast<std::int64_t>(out.components.size());
    CoverComponent c;
    c.degree = orbit.size();
    c.euler_characteristic = static_cast<std::int64_t>(orbit.size()) * chi;
    c.boundary_circles.resize(rep.boundary.size());
    c.sheets = orbit;
    out.components.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < rep.boundary.size(); ++i) {
    for (const auto& cyc : rep.boundary[i].cycles()) {
      auto& comp = out.components[static_cast<std::size_t>(comp_of[cyc.front()])];
      comp.boundary_circles[i].push_back(static_cast<std::uint32_t>(cyc.size()));
    }
  }
  if (rep.spec.orientable) {
    for (auto& c : out.components) {
      const auto k = static_cast<std::int64_t>(c.boundary_circle_count());
      const std::int64_t twice_g = 2 - c.euler_characteristic - k;
      if (twice_g < 0 || twice_g % 2 != 0) {
        throw std::logic_error("describe_cover: inconsistent Euler characteristic");
      }
      c.genus = twice_g / 2;
    }
  }
  return out;
}

/// n copies D_1..D_n of the square fundamental domain of the punctured torus.
/// The right edge of D_i is glued to the left edge of D_sigma(i); the top edge
/// of D_i to the bottom edge of D_tau(i). The puncture sits at the corners.
class GluingComplex {
 public:
  enum Corner : std::size_t { BL = 0, BR = 1, TR = 2, TL = 3 };
  enum Side : std::size_t { Left = 0, Right = 1, Bottom = 2, Top = 3 };

  GluingComplex(Perm sigma, Perm tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {
    if (sigma_.degree() != tau_.degree()) throw input_error("build_strip_cover: degree mismatch");
    const std::size_t n = sigma_.degree();
    for (Perm::point i = 0; i < n; ++i) {
      horizontal_.emplace_back(i, sigma_(i));
      vertical_.emplace_back(i, tau_(i));
    }
    union_find corners(4 * n);
    union_find sides(4 * n);
    for (const auto& [i, j] : horizontal_) {
      corners.unite(4 * i + BR, 4 * j + BL);
      corners.unite(4 * i + TR, 4 * j + TL);
      sides.unite(4 * i + Right, 4 * j + Left);
    }
    for (const auto& [i, j] : vertical_) {
      corners.unite(4 * i + TL, 4 * j + BL);
      corners.unite(4 * i + TR, 4 * j + BR);
      sides.unite(4 * i + Top, 4 * j + Bottom);
    }
    std::vector<std::int64_t> label(4 * n, -1);
    for (std::size_t c = 0; c < 4 * n; ++c) {
      const std::size_t root = corners.find(c);
      if (label[root] < 0) {
        label[root] = static_cast<std::int64_t>(vertices_.size());
        vertices_.emplace_back();
      }
      vertices_[static_cast<std::size_t>(label[root])].push_back(c);
    }
    edge_count_ = sides.class_count();
  }

  std::size_t square_count() const { return sigma_.degree(); }
  const Perm& sigma() const { return sigma_; }
  const Perm& tau() const { return tau_; }
  const std::vector<std::pair<Perm::point, Perm::point>>& horizontal_pairs() const { return horizontal_; }
  const std::vector<std::pair<Perm::point, Perm::point>>& vertical_pairs() const { return vertical_; }
  /// Corner ids 4*square + Corner, grouped by the vertex they are identified to.
  const std::vector<std::vector<std::size_t>>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Euler characteristic of the closed-up surface (punctures filled in).
  std::int64_t closed_euler_characteristic() const {
    return static_cast<std::int64_t>(vertices_.size()) - static_cast<std::int64_t>(edge_count_) +
           static_cast<std::int64_t>(square_count());
  }

  /// Euler characteristic of the bounded cover: puncture vertices excluded.
  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(square_count()) - static_cast<std::int64_t>(edge_count_);
  }

 private:
  Perm sigma_;
  Perm tau_;
  std::vector<std::pair<Perm::point, Perm::point>> horizontal_;
  std::vector<std::pair<Perm::point, Perm::point>> vertical_;
  std::vector<std::vector<std::size_t>> vertices_;
  std::size_t edge_count_ = 0;
};

inline GluingComplex build_strip_cover(const Perm& sigma, const Perm& tau) {
  return GluingComplex(sigma, tau);
}

/// Each puncture vertex of the cover is one boundary circle; it meets 4d
/// corners when it wraps d times around the base puncture.
inline CycleType boundary_monodromy(const GluingComplex& c) {
  std::vector<std::uint32_t> parts;
  for (const auto& v : c.vertices()) {
    if (v.size() % 4 != 0) throw std::logic_error("corner link not a multiple of 4");
    parts.push_back(static_cast<std::uint32_t>(v.size() / 4));
  }
  return CycleType(std::move(parts));
}

}  // namespace covext
