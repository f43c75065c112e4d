#pragma once

// Finite-degree extension: decision rules and witness search.
//
// Planar surfaces extend iff some s_i in the prescribed classes multiply to e
// (decided by the Frobenius count, witnessed by search). Surfaces of positive
// genus extend iff the class parities sum to even; the witness puts a
// commutator pair for (s_1...s_k)^-1 on the first handle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/perm.hpp"
#include "covext/surface.hpp"
#include "covext/sym_char.hpp"

namespace covext {

struct PlanarDecision {
  bool extends = false;
  big_int count = 0;
};

inline void check_classes(std::span<const CycleType> classes, std::size_t n) {
  if (classes.empty()) throw input_error("at least one boundary class is required");
  for (const auto& c : classes) {
    if (c.size() != n) {
      throw input_error("class {" + c.to_string() + "} has degree " + std::to_string(c.size()) +
                        " but n = " + std::to_string(n));
    }
  }
}

inline PlanarDecision decide_planar(std::span<const CycleType> classes, std::size_t n) {
  check_classes(classes, n);
  PlanarDecision d;
  d.count = frobenius_count(classes, static_cast<std::uint32_t>(n));
  d.extends = d.count > 0;
  return d;
}

inline bool decide_nonplanar(std::span<const CycleType> classes) {
  if (classes.empty()) throw input_error("at least one boundary class is required");
  std::size_t odd = 0;
  for (const auto& c : classes) odd += c.is_even() ? 0 : 1;
  return odd % 2 == 0;
}

/// Every permutation of the given cycle type, in lexicographic order of the
/// image sequence.
inline std::vector<Perm> class_elements(const CycleType& t, step_budget& budget) {
  const std::size_t n = t.size();
  std::vector<Perm::point> img(n);
  std::iota(img.begin(), img.end(), Perm::point{0});
  std::vector<Perm> out;
  do {
    budget.spend();
    Perm p = Perm::from_images(img);
    if (cycle_type(p) == t) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// All n-cycles, ordered lexicographically by their cycle notation (1 p_2 ... p_n).
inline std::vector<Perm> full_cycles(std::size_t n, step_budget& budget) {
  std::vector<Perm::point> rest(n - 1);
  std::iota(rest.begin(), rest.end(), Perm::point{2});
  std::vector<Perm> out;
  do {
    budget.spend();
    std::vector<Perm::point> cyc{1};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    out.push_back(Perm::from_cycles(n, {cyc}));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

struct SearchOptions {
  std::uint64_t node_budget = step_budget::kDefaultSteps * 10;
};

/// s_1..s_k with s_i of type classes[i] and s_1 s_2 ... s_k = e; with
/// require_transitive the s_i must also generate a transitive group.
inline std::optional<std::vector<Perm>> witness_planar(std::span<const CycleType> classes,
                                                       std::size_t n, bool require_transitive,
                                                       const SearchOptions& opts = {}) {
  check_classes(classes, n);
  step_budget budget(opts.node_budget);
  const std::size_t k = classes.size();
  std::vector<std::vector<Perm>> pools;
  for (std::size_t i = 0; i + 1 < k; ++i) pools.push_back(class_elements(classes[i], budget));

  std::vector<Perm> chosen;
  std::optional<std::vector<Perm>> found;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t depth, const Perm& prefix) {
    if (found) return;
    if (depth + 1 == k) {
      budget.spend();
      Perm last = prefix.inverse();
      if (cycle_type(last) != classes[k - 1]) return;
      chosen.push_back(last);
      if (!require_transitive || is_transitive(chosen, n)) found = chosen;
      chosen.pop_back();
      return;
    }
    for (const auto& p : pools[depth]) {
      budget.spend();
      chosen.push_back(p);
      rec(depth + 1, prefix * p);
      chosen.pop_back();
      if (found) return;
    }
  };
  rec(0, Perm(n));
  return found;
}

namespace detail {

// beta with beta x beta^-1 = y, pairing equal-length cycles in order of their
// smallest point. Requires equal cycle types.
inline Perm canonical_conjugator(const Perm& x, const Perm& y) {
  auto sorted_cycles = [](const Perm& p) {
    auto c = p.cycles();
    std::stable_sort(c.begin(), c.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return c;
  };
  auto cx = sorted_cycles(x);
  auto cy = sorted_cycles(y);
  std::vector<Perm::point> img(x.degree());
  for (std::size_t i = 0; i < cx.size(); ++i) {
    for (std::size_t t = 0; t < cx[i].size(); ++t) img[cx[i][t]] = cy[i][t];
  }
  return Perm::from_images(std::move(img));
}

}  // namespace detail

/// (alpha, beta) with [alpha, beta] = sigma. alpha ranges over n-cycles first,
/// then over all of S_n; beta is found by conjugating alpha^-1 onto
/// alpha^-1 sigma. Absent iff sigma is odd, or the transitive search fails.
inline std::optional<std::pair<Perm, Perm>> commutator_witness(const Perm& sigma,
                                                               bool require_transitive,
                                                               const SearchOptions& opts = {}) {
  const std::size_t n = sigma.degree();
  if (parity(sigma) == Parity::odd) return std::nullopt;
  if (sigma.is_identity() && !require_transitive) return std::make_pair(Perm(n), Perm(n));
  if (n == 1) return std::make_pair(Perm(1), Perm(1));
  step_budget budget(opts.node_budget);

  auto try_alpha = [&](const Perm& alpha) -> std::optional<std::pair<Perm, Perm>> {
    const Perm ai = alpha.inverse();
    const Perm target = ai * sigma;
    if (cycle_type(target) != cycle_type(ai)) return std::nullopt;
    Perm beta = detail::canonical_conjugator(ai, target);
    if (!require_transitive) return std::make_pair(alpha, beta);
    const Perm pair[] = {alpha, beta};
    if (is_transitive(pair, n)) return std::make_pair(alpha, beta);
    // other solutions are beta * c with c centralizing alpha^-1
    std::vector<Perm::point> img(n);
    std::iota(img.begin(), img.end(), Perm::point{0});
    do {
      budget.spend();
      Perm c = Perm::from_images(img);
      if (c * ai != ai * c) continue;
      Perm b = beta * c;
      const Perm pr[] = {alpha, b};
      if (is_transitive(pr, n)) return std::make_pair(alpha, b);
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
  };

  for (const auto& alpha : full_cycles(n, budget)) {
    budget.spend();
    if (auto w = try_alpha(alpha)) return w;
  }
  std::vector<Perm::point> img(n);
  std::iota(img.begin(), img.end(), Perm::point{0});
  do {
    budget.spend();
    Perm alpha = Perm::from_images(img);
    if (cycle_type(alpha).length() == 1) continue;  // n-cycles already tried
    if (auto w = try_alpha(alpha)) return w;
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

struct FiniteExtension {
  enum class Status { found, obstructed, search_failed };
  Status status = Status::obstructed;
  std::optional<SurfaceRep> rep;
};

/// Orientable surfaces only. For genus 0 the boundary images come from
/// witness_planar; otherwise they start at canonical representatives and the
/// first handle carries a commutator witness for their inverted product.
inline FiniteExtension extend_representation(const SurfaceSpec& spec,
                                             std::span<const CycleType> classes, std::size_t n,
                                             bool connected, const SearchOptions& opts = {}) {
  spec.validate();
  if (!spec.orientable) throw precondition_error("extend_representation: orientable surfaces only");
  if (spec.boundary_count == 0) {
    throw input_error("surface has no boundary; there is nothing to extend");
  }
  if (classes.size() != spec.boundary_count) {
    throw input_error("expected " + std::to_string(spec.boundary_count) + " classes, got " +
                      std::to_string(classes.size()));
  }
  check_classes(classes, n);
  FiniteExtension out;

  if (spec.genus == 0) {
    if (!decide_planar(classes, n).extends) return out;
    auto w = witness_planar(classes, n, connected, opts);
    if (!w) {
      out.status = FiniteExtension::Status::search_failed;
      return out;
    }
    SurfaceRep rep = SurfaceRep::trivial(spec, n);
    rep.boundary = *w;
    out.status = FiniteExtension::Status::found;
    out.rep = std::move(rep);
    return out;
  }

  if (!decide_nonplanar(classes)) return out;

  auto attempt = [&](const std::vector<Perm>& boundary) -> bool {
    Perm prod(n);
    for (const auto& s : boundary) prod = prod * s;
    auto w = commutator_witness(prod.inverse(), connected, opts);
    if (!w) return false;
    SurfaceRep rep = SurfaceRep::trivial(spec, n);
    rep.boundary = boundary;
    rep.handles[0] = *w;
    if (connected && !is_transitive(rep.generators(), n)) return false;
    out.status = FiniteExtension::Status::found;
    out.rep = std::move(rep);
    return true;
  };

  std::vector<Perm> first;
  for (const auto& c : classes) first.push_back(canonical_representative(c));
  if (attempt(first)) return out;

  // retry over representative tuples in lexicographic order
  step_budget budget(opts.node_budget);
  std::vector<std::vector<Perm>> pools;
  for (const auto& c : classes) pools.push_back(class_elements(c, budget));
  std::vector<Perm> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
    if (d == pools.size()) return attempt(cur);
    for (const auto& p : pools[d]) {
      budget.spend();
      cur.push_back(p);
      if (rec(d + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!rec(0)) out.status = FiniteExtension::Status::search_failed;
  return out;
}

/// Brute-force search for a non-orientable representation. There is no
/// finite criterion here, so a miss means "unknown", never "does not extend".
inline std::optional<SurfaceRep> nonorientable_search(const SurfaceSpec& spec,
                                                      std::span<const CycleType> classes,
                                                      std::size_t n, bool connected,
                                                      const SearchOptions& opts = {}) {
  spec.validate();
  if (spec.orientable) throw precondition_error("nonorientable_search: non-orientable surfaces only");
  if (spec.boundary_count == 0) throw input_error("surface has no boundary; there is nothing to extend");
  if (classes.size() != spec.boundary_count) throw input_error("class count does not match k");
  check_classes(classes, n);
  step_budget budget(opts.node_budget);

  std::vector<Perm> boundary;
  for (const auto& c : classes) boundary.push_back(canonical_representative(c));
  Perm prod(n);
  for (const auto& s : boundary) prod = prod * s;
  const Perm target = prod.inverse();  // v_1^2 ... v_g^2 must equal this

  std::vector<Perm> all;
  {
    std::vector<Perm::point> img(n);
    std::iota(img.begin(), img.end(), Perm::point{0});
    do {
      budget.spend();
      all.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<Perm> squares;
  std::optional<SurfaceRep> found;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t d, const Perm& acc) {
    if (found) return;
    if (d + 1 == spec.genus) {
      for (const auto& v : all) {
        budget.spend();
        if (acc * v * v != target) continue;
        squares.push_back(v);
        SurfaceRep rep = SurfaceRep::trivial(spec, n);
        rep.squares = squares;
        rep.boundary = boundary;
        squares.pop_back();
        if (connected && !is_transitive(rep.generators(), n)) continue;
        found = std::move(rep);
        return;
      }
      return;
    }
    for (const auto& v : all) {
      budget.spend();
      squares.push_back(v);
      rec(d + 1, acc * v * v);
      squares.pop_back();
      if (found) return;
    }
  };
  try {
    rec(0, Perm(n));
  } catch (const budget_exceeded&) {
    return std::nullopt;
  }
  return found;
}

}  // namespace covext
