#pragma once

// Verdicts for extension problems of infinite degree. Boundary monodromy is
// given by cycle-type specs; sheets are identified with Z^2.
//
// Reason codes:
//   ore-transitive   orientable, genus >= 1: a transitive commutator pair
//   ore-product      the same for the product of several boundary images
//   genus-existence  positive genus, no witness built (always extends)
//   powers           non-orientable genus 2: boundary = (alpha^2 beta^2)^-1
//   three-squares    non-orientable genus >= 3: [x,y] as three squares
//   disk             k = 1 planar: only the trivial monodromy extends
//   cylinder         k = 2 planar: the two boundary images are inverse
//   bertram          k = 3 planar: two single infinite cycles cannot
//                    multiply to an odd finitely supported permutation
//   droste-k3        k = 3 planar: all moving infinitely many points, two
//                    with an infinite cycle (existence)
//   droste-k4        k >= 4 planar: all moving infinitely many points
//                    (existence)
//   undecided        none of the rules apply

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/inf/lazy_surface.hpp"
#include "covext/inf/ore.hpp"
#include "covext/inf/window.hpp"
#include "covext/surface.hpp"
#include "covext/verdict.hpp"
#include "covext/witness.hpp"

namespace covext {

struct InfiniteOptions {
  std::int64_t seed = 0;
  bool connected = false;
  bool witnesses = true;             // build witnesses where a construction is known
  bool multi_boundary_witness = true;  // also for several boundary circles
  std::int64_t window = 16;
  std::int64_t transitivity_radius = 4;
  std::int64_t transitivity_budget = 200;
};

namespace detail {

/// Checks a constructed representation and attaches it. A failed
/// transitivity check for a connected request, or an exhausted budget,
/// leaves the verdict without witness.
inline void attach_lazy_witness(Verdict& v, const SurfaceSpec& spec, std::span<const inf::CycleTypeSpec> specs,
                                inf::LazySurfaceRep rep, const InfiniteOptions& opt) {
  try {
    if (!inf::window_relator_check(rep, opt.window)) {
      throw std::logic_error("constructed representation fails the relator on the window");
    }
    const auto gens = rep.generators();
    const bool transitive = inf::window_transitivity(gens, opt.transitivity_radius, opt.transitivity_budget);
    if (opt.connected && !transitive) {
      v.notes.push_back("construction not verified transitive on the window; witness withheld");
      return;
    }
    Witness w;
    w.surface = spec;
    w.infinite = true;
    w.connected = opt.connected;
    w.specs.assign(specs.begin(), specs.end());
    w.lazy = std::move(rep);
    w.window = opt.window;
    if (transitive) w.transitivity = std::make_pair(opt.transitivity_radius, opt.transitivity_budget);
    v.witness = std::move(w);
    v.constructive = true;
  } catch (const budget_exceeded& e) {
    v.notes.push_back(std::string("witness dropped: ") + e.what());
  }
}

/// Boundary images s_i and delta with delta * s_1 ... s_k = e. One boundary
/// circle gets s_1 = sigma^-1 and delta = sigma.
struct BoundaryProduct {
  std::vector<inf::LazyPerm> boundary;
  inf::LazyPerm delta;
};

inline BoundaryProduct boundary_product(std::span<const inf::CycleTypeSpec> specs) {
  BoundaryProduct out;
  if (specs.size() == 1) {
    out.delta = inf::build_sigma(specs[0]);
    out.boundary.push_back(out.delta.inverse());
    return out;
  }
  inf::LazyPerm prod;
  for (const auto& s : specs) {
    out.boundary.push_back(inf::build_sigma(s));
    prod = out.boundary.size() == 1 ? out.boundary.back() : prod * out.boundary.back();
  }
  out.delta = prod.inverse();
  return out;
}

}  // namespace detail

/// Orientable, genus >= 1: always extends.
inline Verdict decide_orientable_positive_genus(const SurfaceSpec& spec, std::span<const inf::CycleTypeSpec> specs,
                                                const InfiniteOptions& opt = {}) {
  if (!spec.orientable || spec.genus == 0) throw precondition_error("orientable surface of genus >= 1 expected");
  const bool build = opt.witnesses && (specs.size() == 1 || opt.multi_boundary_witness);
  Verdict v = Verdict::make(VerdictStatus::extends, build ? (specs.size() == 1 ? "ore-transitive" : "ore-product")
                                                          : "genus-existence");
  if (!build) return v;
  inf::LazySurfaceRep rep = inf::LazySurfaceRep::trivial(spec);
  if (specs.size() == 1) {
    const auto t = inf::transitive_ore(specs[0], opt.seed);
    rep.handles[0] = {t.g, t.h};
    rep.boundary[0] = t.sigma.inverse();
  } else {
    const auto bp = detail::boundary_product(specs);
    rep.handles[0] = inf::ore_pair(bp.delta, opt.seed);
    rep.boundary = bp.boundary;
  }
  detail::attach_lazy_witness(v, spec, specs, std::move(rep), opt);
  if (!v.witness) v.reason = "genus-existence";
  return v;
}

/// Non-orientable, genus >= 1: always extends (to a connected cover).
inline Verdict decide_nonorientable_positive_genus(const SurfaceSpec& spec,
                                                   std::span<const inf::CycleTypeSpec> specs,
                                                   const InfiniteOptions& opt = {}) {
  if (spec.orientable || spec.genus == 0) throw precondition_error("non-orientable surface expected");
  const bool build = opt.witnesses && spec.genus >= 2 && (specs.size() == 1 || opt.multi_boundary_witness);
  Verdict v = Verdict::make(VerdictStatus::extends, "genus-existence");
  if (spec.genus == 1) v.notes.push_back("one cross-cap: no construction, existence only");
  if (!build) return v;
  const auto bp = detail::boundary_product(specs);
  inf::LazySurfaceRep rep = inf::LazySurfaceRep::trivial(spec);
  rep.boundary = bp.boundary;
  if (spec.genus == 2) {
    const auto p = inf::powers_for(bp.delta, {2}, {2}, opt.seed);
    rep.squares[0] = p.alphas[0];
    rep.squares[1] = p.betas[0];
    v.reason = "powers";
  } else {
    inf::LazyPerm x, y;
    if (specs.size() == 1) {
      const auto t = inf::transitive_ore(specs[0], opt.seed);
      x = t.g;
      y = t.h;
    } else {
      std::tie(x, y) = inf::ore_pair(bp.delta, opt.seed);
    }
    const auto sq = inf::three_squares(x, y);
    rep.squares[0] = sq.s1;
    rep.squares[1] = sq.s2;
    rep.squares[2] = sq.s3;
    v.reason = "three-squares";
  }
  detail::attach_lazy_witness(v, spec, specs, std::move(rep), opt);
  if (!v.witness) v.reason = "genus-existence";
  return v;
}

/// Punctured spheres.
inline Verdict decide_planar_infinite(std::span<const inf::CycleTypeSpec> specs, const InfiniteOptions& opt = {}) {
  const std::size_t k = specs.size();
  if (k == 0) throw input_error("planar surface needs at least one boundary circle");
  const SurfaceSpec spec{true, 0, static_cast<std::uint32_t>(k)};
  auto with_boundary = [&](Verdict v, std::vector<inf::LazyPerm> b) {
    if (!opt.witnesses) return v;
    inf::LazySurfaceRep rep = inf::LazySurfaceRep::trivial(spec);
    rep.boundary = std::move(b);
    detail::attach_lazy_witness(v, spec, specs, std::move(rep), opt);
    return v;
  };

  if (k == 1) {
    if (!specs[0].is_identity()) {
      Verdict v = Verdict::make(VerdictStatus::not_extends, "disk");
      v.notes.push_back("the boundary of a disk bounds; its monodromy must be trivial");
      return v;
    }
    if (opt.connected) {
      Verdict v = Verdict::make(VerdictStatus::not_extends, "disk");
      v.notes.push_back("a disk has no connected cover of infinite degree");
      return v;
    }
    return with_boundary(Verdict::make(VerdictStatus::extends, "disk"), {inf::LazyPerm()});
  }

  if (k == 2) {
    const inf::CycleTypeSpec single({{inf::Cardinal::aleph0(), inf::Cardinal::finite(1)}});
    const bool equal = specs[0] == specs[1];
    if (!equal || (opt.connected && !(specs[0] == single))) {
      Verdict v = Verdict::make(VerdictStatus::not_extends, "cylinder");
      v.notes.push_back(!equal ? "the two boundary images must be mutually inverse, hence of one cycle type"
                               : "the only connected infinite cover of a cylinder is the infinite cyclic one");
      return v;
    }
    const inf::LazyPerm s = inf::build_sigma(specs[0]);
    return with_boundary(Verdict::make(VerdictStatus::extends, "cylinder"), {s, s.inverse()});
  }

  if (k == 3) {
    for (std::size_t odd = 0; odd < 3; ++odd) {
      bool rule = specs[odd].finite_support_is_odd().value_or(false);
      for (std::size_t i = 0; i < 3; ++i)
        if (i != odd) rule = rule && specs[i].is_single_infinite_cycle_plus_fixed();
      if (rule) {
        Verdict v = Verdict::make(VerdictStatus::not_extends, "bertram");
        v.notes.push_back("a product of two infinite cycles is never a finitely supported odd permutation");
        return v;
      }
    }
  }

  bool all_infinite = true;
  std::size_t with_cycle = 0;
  for (const auto& s : specs) {
    all_infinite = all_infinite && s.moves_infinitely_many();
    with_cycle += s.has_infinite_cycle() ? 1 : 0;
  }
  const bool rule = k == 3 ? (all_infinite && with_cycle >= 2) : all_infinite;
  if (!rule) return Verdict::make(VerdictStatus::unknown, "undecided");
  if (opt.connected) {
    Verdict v = Verdict::make(VerdictStatus::unknown, "undecided");
    v.notes.push_back("an extension exists; connectedness is not known");
    return v;
  }
  Verdict v = Verdict::make(VerdictStatus::extends, k == 3 ? "droste-k3" : "droste-k4");
  v.notes.push_back("existence only");
  return v;
}

inline Verdict decide_infinite(const SurfaceSpec& spec, std::span<const inf::CycleTypeSpec> specs,
                               const InfiniteOptions& opt = {}) {
  spec.validate();
  if (spec.boundary_count == 0) throw input_error("surface has no boundary; there is nothing to extend");
  if (specs.size() != spec.boundary_count) {
    throw input_error("expected " + std::to_string(spec.boundary_count) + " boundary specs, got " +
                      std::to_string(specs.size()));
  }
  if (spec.genus == 0) return decide_planar_infinite(specs, opt);
  if (spec.orientable) return decide_orientable_positive_genus(spec, specs, opt);
  return decide_nonorientable_positive_genus(spec, specs, opt);
}

}  // namespace covext
