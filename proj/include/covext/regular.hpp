#pragma once

// Regular (Galois) extensions of boundary covers.
//
// A connected regular cover of degree n has an image group acting regularly,
// i.e. transitively with order n. Every regular action of an abstract group is
// conjugate in S_n to its left-regular representation, and conjugation changes
// neither cycle types nor the relator, so searches over regular images only
// need one regular representation per isomorphism type. small_groups() lists
// all of them for n <= 8.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "covext/error.hpp"
#include "covext/extend_finite.hpp"
#include "covext/perm.hpp"
#include "covext/surface.hpp"

namespace covext {

inline constexpr std::size_t kRegularSearchMaxDegree = 8;

struct SmallGroup {
  std::string name;
  std::vector<Perm> elements;  // left-regular representation, elements[0] = e
  bool abelian = false;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

inline SmallGroup from_cayley(std::string name, const std::vector<std::vector<std::size_t>>& mul) {
  SmallGroup g;
  g.name = std::move(name);
  const std::size_t n = mul.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Perm::point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Perm::point>(mul[a][x]);
    g.elements.push_back(Perm::from_images(std::move(img)));
  }
  g.abelian = true;
  for (std::size_t a = 0; a < n && g.abelian; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] != mul[b][a]) {
        g.abelian = false;
        break;
      }
  return g;
}

inline SmallGroup abelian_product(const std::vector<std::size_t>& moduli) {
  std::size_t n = 1;
  for (auto m : moduli) n *= m;
  auto decode = [&](std::size_t v) {
    std::vector<std::size_t> d;
    for (auto m : moduli) {
      d.push_back(v % m);
      v /= m;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t v = 0;
    for (std::size_t i = moduli.size(); i-- > 0;) v = v * moduli[i] + d[i];
    return v;
  };
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto da = decode(a), db = decode(b);
      for (std::size_t i = 0; i < moduli.size(); ++i) da[i] = (da[i] + db[i]) % moduli[i];
      mul[a][b] = encode(da);
    }
  std::string name;
  for (std::size_t i = 0; i < moduli.size(); ++i) name += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
  return from_cayley(name, mul);
}

// D_m of order 2m; element (i, e) = r^i s^e stored as 2i + e.
inline SmallGroup dihedral(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = a / 2, e = a % 2, j = b / 2, f = b % 2;
      const std::size_t rot = e ? (i + m - j) % m : (i + j) % m;
      mul[a][b] = 2 * rot + ((e + f) % 2);
    }
  return from_cayley("D" + std::to_string(m), mul);
}

// Q8: index 4s + u for sign s in {0,1} and unit u in {1,i,j,k}.
inline SmallGroup quaternion() {
  // unit_mul[u][v] = (sign, unit) of u*v
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      const std::size_t s = (sa + sb + static_cast<std::size_t>(sign[ua][ub])) % 2;
      mul[a][b] = 4 * s + unit[ua][ub];
    }
  return from_cayley("Q8", mul);
}

}  // namespace detail

/// One regular representation of each group of order n, n <= 8.
inline std::vector<SmallGroup> small_groups(std::size_t n) {
  using detail::abelian_product;
  switch (n) {
    case 1: return {abelian_product({1})};
    case 2: return {abelian_product({2})};
    case 3: return {abelian_product({3})};
    case 4: return {abelian_product({4}), abelian_product({2, 2})};
    case 5: return {abelian_product({5})};
    case 6: return {abelian_product({6}), detail::dihedral(3)};
    case 7: return {abelian_product({7})};
    case 8:
      return {abelian_product({8}), abelian_product({4, 2}), abelian_product({2, 2, 2}),
              detail::dihedral(4), detail::quaternion()};
    default: break;
  }
  throw precondition_error("small_groups: only orders 1..8 are catalogued");
}

/// Order of <gens>, or limit + 1 as soon as it exceeds limit.
inline std::size_t group_order_bounded(std::span<const Perm> gens, std::size_t n, std::size_t limit) {
  std::set<Perm> seen{Perm(n)};
  std::vector<Perm> frontier{Perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > limit) return limit + 1;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline bool is_regular_action(std::span<const Perm> gens, std::size_t n) {
  return is_transitive(gens, n) && group_order_bounded(gens, n, n) == n;
}

struct RegularSearchResult {
  enum class Status { found, none, unknown };
  Status status = Status::none;
  std::optional<SurfaceRep> rep;
  bool transitive = false;  // strict-mode witnesses may act intransitively
};

/// Strict: s_i in class_i with s_1...s_k = e generating a group of order n
/// (handles map to e). Relaxed: the image group must act regularly, and for
/// genus >= 1 (s_1...s_k)^-1 may be any product of genus commutators (or
/// squares) of elements of that group.
inline RegularSearchResult regular_witness_search(const SurfaceSpec& spec,
                                                  std::span<const CycleType> classes,
                                                  std::size_t n, bool strict,
                                                  const SearchOptions& opts = {}) {
  spec.validate();
  if (classes.size() != spec.boundary_count) throw input_error("class count does not match k");
  check_classes(classes, n);
  RegularSearchResult out;
  if (n > kRegularSearchMaxDegree) {
    out.status = RegularSearchResult::Status::unknown;
    return out;
  }
  step_budget budget(opts.node_budget);
  const std::size_t k = classes.size();

  if (strict) {
    // s_1 may be fixed to one representative: simultaneous conjugation keeps
    // the product, the group order and transitivity.
    std::vector<std::vector<Perm>> pools;
    for (std::size_t i = 1; i + 1 < k; ++i) pools.push_back(class_elements(classes[i], budget));
    std::vector<Perm> chosen{canonical_representative(classes[0])};
    std::function<bool(std::size_t, const Perm&)> rec = [&](std::size_t d, const Perm& prefix) {
      if (d + 1 >= k) {
        budget.spend();
        if (k == 1) {
          if (!prefix.is_identity()) return false;
        } else {
          Perm last = prefix.inverse();
          if (cycle_type(last) != classes[k - 1]) return false;
          chosen.push_back(last);
        }
        const bool ok = group_order_bounded(chosen, n, n) == n;
        if (ok) {
          SurfaceRep rep = SurfaceRep::trivial(spec, n);
          rep.boundary = chosen;
          out.transitive = is_transitive(chosen, n);
          out.rep = std::move(rep);
        }
        if (k > 1) chosen.pop_back();
        return ok;
      }
      for (const auto& p : pools[d - 1]) {
        budget.spend();
        chosen.push_back(p);
        const bool hit = rec(d + 1, prefix * p);
        chosen.pop_back();
        if (hit) return true;
      }
      return false;
    };
    const Perm first = chosen.front();
    if (rec(1, first)) out.status = RegularSearchResult::Status::found;
    return out;
  }

  const std::size_t handle_letters = spec.orientable ? 2 * spec.genus : spec.genus;
  for (const auto& group : small_groups(n)) {
    std::vector<std::vector<Perm>> pools;
    for (const auto& c : classes) {
      std::vector<Perm> pool;
      for (const auto& e : group.elements)
        if (cycle_type(e) == c) pool.push_back(e);
      pools.push_back(std::move(pool));
    }
    std::vector<Perm> chosen;
    std::vector<Perm> letters;
    std::function<bool(std::size_t)> handles_rec;
    auto finish = [&]() -> bool {
      Perm w(n);
      if (spec.orientable) {
        for (std::size_t j = 0; j < spec.genus; ++j) w = w * commutator(letters[2 * j], letters[2 * j + 1]);
      } else {
        for (const auto& v : letters) w = w * v * v;
      }
      for (const auto& s : chosen) w = w * s;
      if (!w.is_identity()) return false;
      std::vector<Perm> gens = letters;
      gens.insert(gens.end(), chosen.begin(), chosen.end());
      if (!is_regular_action(gens, n)) return false;
      SurfaceRep rep = SurfaceRep::trivial(spec, n);
      for (std::size_t j = 0; j < spec.genus; ++j) {
        if (spec.orientable) {
          rep.handles[j] = {letters[2 * j], letters[2 * j + 1]};
        } else {
          rep.squares[j] = letters[j];
        }
      }
      rep.boundary = chosen;
      out.transitive = true;
      out.rep = std::move(rep);
      return true;
    };
    handles_rec = [&](std::size_t d) -> bool {
      if (d == handle_letters) return finish();
      for (const auto& e : group.elements) {
        budget.spend();
        letters.push_back(e);
        const bool hit = handles_rec(d + 1);
        letters.pop_back();
        if (hit) return true;
      }
      return false;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
      if (d == k) return handles_rec(0);
      for (const auto& p : pools[d]) {
        budget.spend();
        chosen.push_back(p);
        const bool hit = rec(d + 1);
        chosen.pop_back();
        if (hit) return true;
      }
      return false;
    };
    if (rec(0)) {
      out.status = RegularSearchResult::Status::found;
      return out;
    }
  }
  return out;
}

/// True iff no regular cover of degree 2..n_max of the one-boundary orientable
/// genus-g surface has connected boundary (boundary image an n-cycle).
inline bool regq_check(std::uint32_t genus, std::size_t n_max) {
  if (genus == 0) throw precondition_error("regq_check: genus must be >= 1");
  if (n_max > kRegularSearchMaxDegree) {
    throw precondition_error("regq_check: n_max above " + std::to_string(kRegularSearchMaxDegree));
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const auto& group : small_groups(n)) {
      std::vector<Perm> letters;
      std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
        if (d == 2 * genus) {
          Perm w(n);
          for (std::uint32_t j = 0; j < genus; ++j) w = w * commutator(letters[2 * j], letters[2 * j + 1]);
          const Perm boundary = w.inverse();
          if (cycle_type(boundary).length() != 1) return false;
          return is_transitive(letters, n);  // order n is automatic inside a regular group
        }
        for (const auto& e : group.elements) {
          letters.push_back(e);
          const bool hit = rec(d + 1);
          letters.pop_back();
          if (hit) return true;
        }
        return false;
      };
      if (rec(0)) return false;
    }
  }
  return true;
}

/// Number of boundary circles of an abelian regular cover of a one-boundary
/// surface.
inline std::size_t abelian_boundary_components(const SurfaceRep& rep) {
  rep.validate_shape();
  if (rep.spec.boundary_count != 1) throw precondition_error("abelian_boundary_components: k must be 1");
  const auto gens = rep.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) {
        throw precondition_error("abelian_boundary_components: image group is not abelian");
      }
  if (!is_regular_action(gens, rep.degree)) {
    throw precondition_error("abelian_boundary_components: representation is not regular");
  }
  if (!check_representation(rep)) throw precondition_error("abelian_boundary_components: relator fails");
  return describe_cover(rep).boundary_circle_count();
}

/// In an abelian image the boundary word of a one-boundary orientable surface
/// (a product of commutators) maps to e, so every boundary lift has degree 1.
/// Spot-checks the claim on every abelian regular image of degree <= 6 with at
/// most `tuple_limit` handle tuples per group.
inline bool abelian_infinite_boundary_check(const SurfaceSpec& spec,
                                            std::size_t tuple_limit = 200'000) {
  spec.validate();
  if (spec.boundary_count != 1) throw precondition_error("abelian_infinite_boundary_check: k must be 1");
  if (!spec.orientable) {
    throw precondition_error("abelian_infinite_boundary_check: orientable surfaces only");
  }
  if (spec.genus == 0) return true;  // disk: boundary word is already trivial
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& group : small_groups(n)) {
      if (!group.abelian) continue;
      const std::size_t letters_n = 2 * spec.genus;
      std::uint64_t total = 1;
      bool capped = false;
      for (std::size_t i = 0; i < letters_n; ++i) {
        total *= group.order();
        if (total > tuple_limit) {
          capped = true;
          break;
        }
      }
      const std::uint64_t count = capped ? tuple_limit : total;
      // walk tuples by mixed-radix index; when capped, stride through them
      const std::uint64_t stride = capped ? 7919 : 1;
      std::uint64_t idx = 0;
      for (std::uint64_t t = 0; t < count; ++t, idx += stride) {
        std::uint64_t v = idx;
        Perm w(n);
        for (std::uint32_t j = 0; j < spec.genus; ++j) {
          const Perm& a = group.elements[v % group.order()];
          v /= group.order();
          const Perm& b = group.elements[v % group.order()];
          v /= group.order();
          w = w * commutator(a, b);
        }
        if (!w.is_identity()) return false;
      }
    }
  }
  return true;
}

}  // namespace covext
