#pragma once

// Witness files: a surface representation in plain text that can be checked
// without any other state.
//
//   witness 1
//   surface orientable g=1 k=1
//   degree inf                      (or a positive integer)
//   connected                       (optional)
//   spec 1 inf:inf                  (class 1 3 1 1 for finite degree)
//   handle 1 a CONJ(A, inf:inf, 0)
//   handle 1 b SHIFT(1)
//   boundary 1 INV(SIGMA_INF(inf:inf))
//   check window 16                 (infinite degree)
//   check transitivity 4 200        (infinite degree, connected)
//   digest 5d0c6c1f3e2b8a47
//
// Non-orientable surfaces use "square j <perm>". Finite permutations are in
// 1-based cycle notation. The digest is FNV-1a-64 over every byte before the
// digest line.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/inf/lazy_surface.hpp"
#include "covext/inf/window.hpp"
#include "covext/perm.hpp"
#include "covext/surface.hpp"
#include "covext/text.hpp"

namespace covext {

struct Witness {
  SurfaceSpec surface;
  bool infinite = false;
  bool connected = false;
  std::size_t degree = 0;
  std::vector<CycleType> classes;
  std::optional<SurfaceRep> rep;
  std::vector<inf::CycleTypeSpec> specs;
  std::optional<inf::LazySurfaceRep> lazy;
  std::int64_t window = 16;
  std::optional<std::pair<std::int64_t, std::int64_t>> transitivity;  // (radius, word budget)
};

namespace detail {

template <typename P>
void emit_generators(std::ostream& os, const std::vector<std::pair<P, P>>& handles, const std::vector<P>& squares,
                     const std::vector<P>& boundary) {
  for (std::size_t j = 0; j < handles.size(); ++j) {
    os << "handle " << j + 1 << " a " << handles[j].first.to_string() << '\n';
    os << "handle " << j + 1 << " b " << handles[j].second.to_string() << '\n';
  }
  for (std::size_t j = 0; j < squares.size(); ++j) os << "square " << j + 1 << ' ' << squares[j].to_string() << '\n';
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    os << "boundary " << j + 1 << ' ' << boundary[j].to_string() << '\n';
  }
}

}  // namespace detail

inline std::string serialize_witness(const Witness& w) {
  std::ostringstream os;
  os << "witness 1\n";
  os << "surface " << w.surface.to_string() << '\n';
  if (w.infinite) os << "degree inf\n";
  else os << "degree " << w.degree << '\n';
  if (w.connected) os << "connected\n";
  if (w.infinite) {
    if (!w.lazy) throw precondition_error("serialize_witness: missing representation");
    for (std::size_t i = 0; i < w.specs.size(); ++i) os << "spec " << i + 1 << ' ' << w.specs[i].to_string() << '\n';
    detail::emit_generators(os, w.lazy->handles, w.lazy->squares, w.lazy->boundary);
    os << "check window " << w.window << '\n';
    if (w.transitivity) os << "check transitivity " << w.transitivity->first << ' ' << w.transitivity->second << '\n';
  } else {
    if (!w.rep) throw precondition_error("serialize_witness: missing representation");
    for (std::size_t i = 0; i < w.classes.size(); ++i) {
      os << "class " << i + 1 << ' ' << w.classes[i].to_string() << '\n';
    }
    detail::emit_generators(os, w.rep->handles, w.rep->squares, w.rep->boundary);
  }
  const std::string body = os.str();
  return body + "digest " + text::hex64(text::fnv1a64(body)) + '\n';
}

struct ParsedWitness {
  Witness witness;
  bool digest_ok = false;
  std::string stored_digest;
  std::string computed_digest;
};

/// Throws input_error with a line number on malformed input.
inline ParsedWitness parse_witness(std::string_view file) {
  ParsedWitness out;
  Witness& w = out.witness;
  const auto ls = text::lines(file);
  if (ls.empty() || text::trim(ls[0]) != "witness 1") throw input_error("line 1: expected \"witness 1\"");
  bool have_surface = false, have_degree = false, have_digest = false;
  std::map<std::string, std::string> gen_text;  // "a1", "b1", "v2", "s3"
  std::map<std::size_t, std::string> class_text;
  for (std::size_t li = 0; li < ls.size(); ++li) {
    const std::string_view line = ls[li];
    const std::string where = text::at_line(li + 1);
    if (have_digest) {
      if (!text::trim(line).empty()) throw input_error(where + "content after digest");
      continue;
    }
    auto [key, rest] = text::head_rest(line);
    try {
      if (li == 0) {
      } else if (key == "surface") {
        w.surface = text::parse_surface(rest);
        have_surface = true;
      } else if (key == "degree") {
        if (rest == "inf") w.infinite = true;
        else w.degree = static_cast<std::size_t>(text::parse_u64(rest, "degree", 1'000'000));
        have_degree = true;
      } else if (key == "connected") {
        w.connected = true;
      } else if (key == "class" || key == "spec") {
        auto [idx, body] = text::head_rest(rest);
        const auto i = static_cast<std::size_t>(text::parse_u64(idx, "index", 1000));
        if (!class_text.emplace(i, std::string(body)).second) throw input_error("duplicate entry");
      } else if (key == "handle") {
        auto [idx, r2] = text::head_rest(rest);
        auto [letter, body] = text::head_rest(r2);
        if (letter != "a" && letter != "b") throw input_error("handle letter must be a or b");
        const auto i = text::parse_u64(idx, "index", 1000);
        if (!gen_text.emplace(std::string(letter) + std::to_string(i), std::string(body)).second) {
          throw input_error("duplicate generator");
        }
      } else if (key == "square" || key == "boundary") {
        auto [idx, body] = text::head_rest(rest);
        const auto i = text::parse_u64(idx, "index", 1000);
        const std::string tag = key == "square" ? "v" : "s";
        if (!gen_text.emplace(tag + std::to_string(i), std::string(body)).second) {
          throw input_error("duplicate generator");
        }
      } else if (key == "check") {
        const auto f = text::split_ws(rest);
        if (f.size() == 2 && f[0] == "window") {
          w.window = static_cast<std::int64_t>(text::parse_u64(f[1], "window", 10'000));
        } else if (f.size() == 3 && f[0] == "transitivity") {
          w.transitivity = {static_cast<std::int64_t>(text::parse_u64(f[1], "radius", 10'000)),
                            static_cast<std::int64_t>(text::parse_u64(f[2], "word budget", 1'000'000))};
        } else {
          throw input_error("unknown check");
        }
      } else if (key == "digest") {
        out.stored_digest = std::string(rest);
        out.computed_digest = text::hex64(text::fnv1a64(file.substr(0, static_cast<std::size_t>(line.data() - file.data()))));
        out.digest_ok = out.stored_digest == out.computed_digest;
        have_digest = true;
      } else if (!key.empty() && key.front() != '#') {
        throw input_error("unknown keyword \"" + std::string(key) + "\"");
      }
    } catch (const input_error& e) {
      if (std::string_view(e.what()).substr(0, 5) == "line ") throw;
      throw input_error(where + e.what());
    }
  }
  if (!have_surface || !have_degree) throw input_error("witness: missing surface or degree line");
  if (!have_digest) throw input_error("witness: missing digest line");
  if (!w.infinite && w.degree == 0) throw input_error("witness: degree must be >= 1");

  const SurfaceSpec& s = w.surface;
  if (class_text.size() != s.boundary_count) throw input_error("witness: expected one class/spec per boundary circle");
  for (std::size_t i = 1; i <= s.boundary_count; ++i) {
    auto it = class_text.find(i);
    if (it == class_text.end()) throw input_error("witness: missing class/spec " + std::to_string(i));
    if (w.infinite) {
      w.specs.push_back(inf::CycleTypeSpec::parse(it->second));
    } else {
      std::vector<std::uint32_t> parts;
      for (auto t : text::split_ws(it->second)) {
        parts.push_back(static_cast<std::uint32_t>(text::parse_u64(t, "class part", 1'000'000)));
      }
      w.classes.emplace_back(std::move(parts));
    }
  }
  auto take = [&](const std::string& tag) -> std::string {
    auto it = gen_text.find(tag);
    if (it == gen_text.end()) throw input_error("witness: missing generator " + tag);
    std::string v = it->second;
    gen_text.erase(it);
    return v;
  };
  if (w.infinite) {
    inf::LazySurfaceRep r = inf::LazySurfaceRep::trivial(s);
    for (std::size_t j = 0; j < r.handles.size(); ++j) {
      r.handles[j] = {inf::LazyPerm::parse(take("a" + std::to_string(j + 1))),
                      inf::LazyPerm::parse(take("b" + std::to_string(j + 1)))};
    }
    for (std::size_t j = 0; j < r.squares.size(); ++j) r.squares[j] = inf::LazyPerm::parse(take("v" + std::to_string(j + 1)));
    for (std::size_t j = 0; j < r.boundary.size(); ++j) r.boundary[j] = inf::LazyPerm::parse(take("s" + std::to_string(j + 1)));
    w.lazy = std::move(r);
  } else {
    SurfaceRep r = SurfaceRep::trivial(s, w.degree);
    for (std::size_t j = 0; j < r.handles.size(); ++j) {
      r.handles[j] = {Perm::parse(take("a" + std::to_string(j + 1)), w.degree),
                      Perm::parse(take("b" + std::to_string(j + 1)), w.degree)};
    }
    for (std::size_t j = 0; j < r.squares.size(); ++j) r.squares[j] = Perm::parse(take("v" + std::to_string(j + 1)), w.degree);
    for (std::size_t j = 0; j < r.boundary.size(); ++j) r.boundary[j] = Perm::parse(take("s" + std::to_string(j + 1)), w.degree);
    w.rep = std::move(r);
  }
  if (!gen_text.empty()) throw input_error("witness: generator " + gen_text.begin()->first + " does not fit the surface");
  return out;
}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;

  void record(bool pass, const std::string& what) {
    ok = ok && pass;
    lines.push_back((pass ? "ok   " : "FAIL ") + what);
  }
};

namespace detail {

/// Finite cycles seen in the window must be allowed by the spec.
inline bool census_fits(const inf::CycleCensus& c, const inf::CycleTypeSpec& spec) {
  std::map<std::uint64_t, inf::Cardinal> allowed;
  for (const auto& e : spec.finite_entries()) allowed[e.size.value] = e.count;
  for (const auto& [len, count] : c.finite_cycles) {
    auto it = allowed.find(len);
    if (it == allowed.end()) return false;
    if (!it->second.infinite && count > it->second.value) return false;
  }
  return !(spec.is_identity() && c.truncated > 0);
}

}  // namespace detail

inline VerifyReport verify_witness(const ParsedWitness& pw) {
  VerifyReport r;
  const Witness& w = pw.witness;
  r.record(pw.digest_ok, "digest " + pw.stored_digest + (pw.digest_ok ? "" : " (computed " + pw.computed_digest + ")"));
  if (!w.infinite) {
    const SurfaceRep& rep = *w.rep;
    r.record(check_representation(rep), "relator is the identity");
    for (std::size_t i = 0; i < rep.boundary.size(); ++i) {
      const CycleType t = cycle_type(rep.boundary[i]);
      r.record(t == w.classes[i], "boundary " + std::to_string(i + 1) + " has cycle type " + t.to_string() +
                                      " (declared " + w.classes[i].to_string() + ")");
    }
    if (w.connected) r.record(is_transitive(rep.generators(), rep.degree), "image group is transitive");
    return r;
  }
  const inf::LazySurfaceRep& rep = *w.lazy;
  try {
    const std::int64_t small = std::min<std::int64_t>(w.window, 6);
    bool inv = true;
    for (const auto& g : rep.generators()) inv = inv && inf::window_inverse_law(g, small);
    r.record(inv, "generators are bijections on window " + std::to_string(small));
    r.record(inf::window_relator_check(rep, w.window), "relator fixes window " + std::to_string(w.window));
    for (std::size_t i = 0; i < rep.boundary.size(); ++i) {
      const auto& b = rep.boundary[i];
      const std::string tag = "boundary " + std::to_string(i + 1);
      if (auto s = b.spec()) {
        r.record(*s == w.specs[i], tag + " is built for {" + s->to_string() + "} (declared {" +
                                       w.specs[i].to_string() + "})");
      }
      const auto census = inf::window_cycle_census(b, w.window);
      r.record(detail::census_fits(census, w.specs[i]),
               tag + " window census fits {" + w.specs[i].to_string() + "}");
    }
    if (w.transitivity) {
      const auto gens = rep.generators();
      r.record(inf::window_transitivity(gens, w.transitivity->first, w.transitivity->second),
               "orbit of (0,0) covers window " + std::to_string(w.transitivity->first) + " within " +
                   std::to_string(w.transitivity->second) + " steps");
    } else if (w.connected) {
      r.record(false, "connected witness without a transitivity check");
    }
  } catch (const budget_exceeded& e) {
    r.record(false, std::string("evaluation budget: ") + e.what());
  }
  return r;
}

inline VerifyReport verify_witness(std::string_view file) {
  ParsedWitness pw;
  try {
    pw = parse_witness(file);
  } catch (const input_error& e) {
    VerifyReport r;
    r.record(false, std::string("parse: ") + e.what());
    return r;
  }
  return verify_witness(pw);
}

}  // namespace covext
