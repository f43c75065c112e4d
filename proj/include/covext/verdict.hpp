#pragma once

// Verdicts for extension problems of finite degree.
//
// Reason codes:
//   frobenius-count    planar, decided by the character-sum count
//   exhaustive-search  decided by a complete search
//   parity             positive genus: the class parities must sum to even
//   ore-commutator     positive genus: first handle carries a commutator pair
//   three-squares      non-orientable genus >= 3: [x,y] as three squares
//   search-failed      a bounded search gave up; no decision

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covext/error.hpp"
#include "covext/extend_finite.hpp"
#include "covext/surface.hpp"
#include "covext/witness.hpp"

namespace covext {

enum class VerdictStatus { extends, not_extends, unknown };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::extends: return "Extends";
    case VerdictStatus::not_extends: return "NotExtends";
    case VerdictStatus::unknown: return "Unknown";
  }
  return "?";
}

struct Verdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::string reason;
  bool constructive = false;  // a witness was built and checked
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  static Verdict make(VerdictStatus s, std::string reason) {
    Verdict v;
    v.status = s;
    v.reason = std::move(reason);
    return v;
  }
};

namespace detail {

inline Verdict finite_found(const SurfaceSpec& spec, std::span<const CycleType> classes, std::size_t n,
                            bool connected, SurfaceRep rep, std::string reason) {
  if (!check_representation(rep)) throw std::logic_error("finite witness fails the relator");
  if (connected && !is_transitive(rep.generators(), n)) throw std::logic_error("finite witness is not transitive");
  Verdict v = Verdict::make(VerdictStatus::extends, std::move(reason));
  v.constructive = true;
  Witness w;
  w.surface = spec;
  w.degree = n;
  w.connected = connected;
  w.classes.assign(classes.begin(), classes.end());
  w.rep = std::move(rep);
  v.witness = std::move(w);
  return v;
}

}  // namespace detail

/// Decides whether boundary monodromy in the given classes extends over the
/// surface, with a witness whenever one is found. Bounded searches that run
/// out of budget throw budget_exceeded unless a decision is already known.
inline Verdict decide_finite(const SurfaceSpec& spec, std::span<const CycleType> classes, std::size_t n,
                             bool connected, const SearchOptions& opts = {}) {
  spec.validate();
  if (spec.boundary_count == 0) throw input_error("surface has no boundary; there is nothing to extend");
  if (classes.size() != spec.boundary_count) {
    throw input_error("expected " + std::to_string(spec.boundary_count) + " boundary classes, got " +
                      std::to_string(classes.size()));
  }
  check_classes(classes, n);

  if (spec.orientable && spec.genus == 0) {
    const PlanarDecision d = decide_planar(classes, n);
    if (!d.extends) {
      Verdict v = Verdict::make(VerdictStatus::not_extends, "frobenius-count");
      v.notes.push_back("solutions to s_1...s_k = e in the classes: 0");
      return v;
    }
    std::optional<std::vector<Perm>> w;
    try {
      w = witness_planar(classes, n, connected, opts);
    } catch (const budget_exceeded&) {
      if (connected) throw;
      Verdict v = Verdict::make(VerdictStatus::extends, "frobenius-count");
      v.notes.push_back("solutions: " + d.count.str() + "; witness search ran out of budget");
      return v;
    }
    if (!w) {
      if (connected) {
        Verdict v = Verdict::make(VerdictStatus::not_extends, "exhaustive-search");
        v.notes.push_back("solutions: " + d.count.str() + ", none generating a transitive group");
        return v;
      }
      throw std::logic_error("positive count but the exhaustive search found no solution");
    }
    SurfaceRep rep = SurfaceRep::trivial(spec, n);
    rep.boundary = *w;
    Verdict v = detail::finite_found(spec, classes, n, connected, std::move(rep), "frobenius-count");
    v.notes.push_back("solutions: " + d.count.str());
    return v;
  }

  if (!decide_nonplanar(classes)) {
    Verdict v = Verdict::make(VerdictStatus::not_extends, "parity");
    v.notes.push_back(spec.orientable ? "product of commutators is even; the boundary product is odd"
                                      : "product of squares is even; the boundary product is odd");
    return v;
  }

  if (spec.orientable) {
    auto r = extend_representation(spec, classes, n, connected, opts);
    if (r.status == FiniteExtension::Status::found) {
      return detail::finite_found(spec, classes, n, connected, std::move(*r.rep), "ore-commutator");
    }
    if (!connected) throw std::logic_error("even boundary product without a commutator witness");
    Verdict v = Verdict::make(VerdictStatus::unknown, "search-failed");
    v.notes.push_back("no transitive commutator witness within the search budget");
    return v;
  }

  if (spec.genus >= 3) {
    std::vector<Perm> boundary;
    Perm prod(n);
    for (const auto& c : classes) {
      boundary.push_back(canonical_representative(c));
      prod = prod * boundary.back();
    }
    if (auto xy = commutator_witness(prod.inverse(), connected, opts)) {
      const ThreeSquares t = three_squares(xy->first, xy->second);
      SurfaceRep rep = SurfaceRep::trivial(spec, n);
      rep.squares[0] = t.s1;
      rep.squares[1] = t.s2;
      rep.squares[2] = t.s3;
      rep.boundary = boundary;
      return detail::finite_found(spec, classes, n, connected, std::move(rep), "three-squares");
    }
  }
  if (auto rep = nonorientable_search(spec, classes, n, connected, opts)) {
    return detail::finite_found(spec, classes, n, connected, std::move(*rep), "exhaustive-search");
  }
  Verdict v = Verdict::make(VerdictStatus::unknown, "search-failed");
  v.notes.push_back("no representation found by the bounded search");
  return v;
}

}  // namespace covext
