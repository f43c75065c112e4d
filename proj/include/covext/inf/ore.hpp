#pragma once

// Realizing a cycle-type spec on Z^2 and writing it as a commutator or as a
// product of powers.
//
// With tau = SHIFT(1) (row-preserving sigma) or SHIFT(2) (sweep sigma) and
// psi = sigma*tau, both tau and psi consist of countably many infinite cycles,
// so a = CONJ(..) with psi = a tau a^-1 exists and sigma = a tau a^-1 tau^-1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/inf/lazy_perm.hpp"

namespace covext::inf {

enum class BuilderCase { rows, sweep };

/// Specs with infinitely many cycles (fixed points included) keep rows
/// invariant; the rest sweep the plane.
inline BuilderCase builder_case(const CycleTypeSpec& spec) {
  return spec.has_infinitely_many_cycles() ? BuilderCase::rows : BuilderCase::sweep;
}

inline LazyPerm build_sigma_infinite(const CycleTypeSpec& spec) { return LazyPerm::sigma_infinite(spec); }
inline LazyPerm build_sigma_finite(const CycleTypeSpec& spec) { return LazyPerm::sigma_finite(spec); }

inline LazyPerm build_sigma(const CycleTypeSpec& spec) {
  return builder_case(spec) == BuilderCase::rows ? build_sigma_infinite(spec) : build_sigma_finite(spec);
}

/// The vertical translation paired with sigma.
inline LazyPerm tau_for(const CycleTypeSpec& spec) {
  return LazyPerm::shift(builder_case(spec) == BuilderCase::rows ? 1 : 2);
}

/// a with sigma*tau = a*tau*a^-1, tau = SHIFT(1) for caseA, SHIFT(2) for caseB.
inline LazyPerm conjugator(const LazyPerm& sigma, ConjMode mode, std::int64_t seed = 0) {
  if (mode == ConjMode::caseB) {
    const auto b = sigma.y_bounds();
    if (!b || b->lo < -1 || b->hi > 1) {
      throw input_error("caseB conjugator needs a sigma moving points at most one row");
    }
  }
  return LazyPerm::conjugator(sigma, mode, seed);
}

struct OreTriple {
  LazyPerm g;
  LazyPerm h;
  LazyPerm sigma;
};

enum class IdentityOre {
  transitive,  // identity spec goes through the row pipeline: a is a horizontal translation
  trivial      // (e, e, e)
};

/// g, h with g h g^-1 h^-1 = sigma of the given spec and <g, h> transitive.
inline OreTriple transitive_ore(const CycleTypeSpec& spec, std::int64_t seed = 0,
                                IdentityOre identity = IdentityOre::transitive) {
  if (spec.is_identity() && identity == IdentityOre::trivial) {
    return {LazyPerm::identity(), LazyPerm::identity(), LazyPerm::identity()};
  }
  const LazyPerm sigma = build_sigma(spec);
  const ConjMode mode = builder_case(spec) == BuilderCase::rows ? ConjMode::caseA : ConjMode::caseB;
  return {LazyPerm::conjugator(sigma, mode, seed), tau_for(spec), sigma};
}

/// One infinite cycle r on the union of n consecutive cycles of the family
/// (per block of n), with r^n equal to the family on that support.
inline LazyPerm root_of_cycles(const LazyPerm& family, std::uint32_t n) {
  if (n < 1) throw input_error("root_of_cycles: n must be >= 1");
  if (n == 1) return family;
  return LazyPerm::root(family, {n});
}

struct PowersDecomposition {
  LazyPerm psi;          // sigma*tau
  LazyPerm tau_inverse;  // SHIFT(-1) or SHIFT(-2)
  std::vector<LazyPerm> alphas;
  std::vector<LazyPerm> betas;
};

/// Vertical step h with delta*SHIFT(h) moving every point upward: 1 for a
/// row-preserving delta, max(1, 1 - lo) otherwise.
inline std::int64_t upward_step(const LazyPerm& delta) {
  const auto b = delta.y_bounds();
  if (!b) throw input_error("permutation has unbounded vertical displacement");
  return std::max<std::int64_t>(1, 1 - b->lo);
}

/// (g, h) with g h g^-1 h^-1 = delta for any delta of bounded vertical
/// displacement: h = SHIFT(upward_step(delta)), g = CONJ(A|B, delta, seed).
inline std::pair<LazyPerm, LazyPerm> ore_pair(const LazyPerm& delta, std::int64_t seed = 0) {
  const auto b = delta.y_bounds();
  if (!b) throw input_error("ore_pair: permutation has unbounded vertical displacement");
  const bool rows = b->lo == 0 && b->hi == 0;
  return {LazyPerm::conjugator(delta, rows ? ConjMode::caseA : ConjMode::caseB, seed),
          LazyPerm::shift(upward_step(delta))};
}

/// delta = alpha_1^n_1 ... alpha_k^n_k beta_1^l_1 ... beta_m^l_m with
/// psi = delta*SHIFT(h) split among the alphas and SHIFT(-h) among the betas.
/// Within each side the supports are pairwise disjoint. Alpha blocks start at
/// cycle index seed, beta blocks at seed + 1, so consecutive cycles get linked
/// by one side or the other.
inline PowersDecomposition powers_for(const LazyPerm& delta, const std::vector<std::uint32_t>& ns,
                                      const std::vector<std::uint32_t>& ls, std::int64_t seed = 0) {
  if (ns.empty() || ls.empty()) throw input_error("powers_decomposition: need at least one exponent on each side");
  for (auto n : ns)
    if (n < 1) throw input_error("powers_decomposition: exponents must be >= 1");
  for (auto l : ls)
    if (l < 1) throw input_error("powers_decomposition: exponents must be >= 1");
  const std::int64_t h = upward_step(delta);
  const LazyPerm tau_inv = LazyPerm::shift(-h);
  PowersDecomposition out{delta * LazyPerm::shift(h), tau_inv, {}, {}};
  auto split = [](const LazyPerm& f, const std::vector<std::uint32_t>& ex, std::int64_t phase,
                  std::vector<LazyPerm>& dst) {
    if (ex.size() == 1 && ex[0] == 1) {
      dst.push_back(f);
      return;
    }
    for (std::size_t i = 0; i < ex.size(); ++i) dst.push_back(LazyPerm::root(f, ex, i, phase));
  };
  split(out.psi, ns, seed, out.alphas);
  split(tau_inv, ls, seed + 1, out.betas);
  return out;
}

/// powers_for applied to the canonical realization of spec.
inline PowersDecomposition powers_decomposition(const CycleTypeSpec& spec, const std::vector<std::uint32_t>& ns,
                                                const std::vector<std::uint32_t>& ls, std::int64_t seed = 0) {
  return powers_for(build_sigma(spec), ns, ls, seed);
}

/// Product alpha_1^n_1 ... beta_m^l_m as one expression.
inline LazyPerm powers_product(const PowersDecomposition& d, const std::vector<std::uint32_t>& ns,
                               const std::vector<std::uint32_t>& ls) {
  LazyPerm out;
  for (std::size_t i = 0; i < d.alphas.size(); ++i) out = out * d.alphas[i].pow(ns[i]);
  for (std::size_t j = 0; j < d.betas.size(); ++j) out = out * d.betas[j].pow(ls[j]);
  return out;
}

struct LazyThreeSquares {
  LazyPerm s1, s2, s3;
};

/// s1^2 s2^2 s3^2 = x y x^-1 y^-1 with s1 = xy, s2 = y^-1 x^-1 y, s3 = y^-1.
inline LazyThreeSquares three_squares(const LazyPerm& x, const LazyPerm& y) {
  return {x * y, y.inverse() * x.inverse() * y, y.inverse()};
}

}  // namespace covext::inf
