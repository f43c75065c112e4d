#pragma once

// Problem files, one directive per line; '#' starts a comment.
//
//   surface orientable g=1 k=1     (or nonorientable)
//   n 5                            (or: n inf)
//   class 3 1 1                    (finite degree: one per boundary circle)
//   spec inf:1, 1:inf              (infinite degree: one per boundary circle)
//   connected                      (ask for a connected cover)
//   regular [strict|relaxed]       (for the regular command; default strict)
//   seed 0
//   budget 10000000
//   window 16

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/partition.hpp"
#include "covext/surface.hpp"
#include "covext/text.hpp"

namespace covext {

class problem_error : public input_error {
 public:
  enum class Kind { syntax, arity, degree };

  problem_error(Kind kind, std::size_t line, std::size_t column, const std::string& msg)
      : input_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + name(kind) +
                    " error: " + msg),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  static const char* name(Kind k) {
    switch (k) {
      case Kind::syntax: return "syntax";
      case Kind::arity: return "arity";
      case Kind::degree: return "degree";
    }
    return "?";
  }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct ProblemFile {
  SurfaceSpec surface;
  bool infinite = false;
  std::size_t n = 0;
  std::vector<CycleType> classes;
  std::vector<inf::CycleTypeSpec> specs;
  bool connected = false;
  bool regular = false;
  bool regular_strict = true;
  std::int64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::int64_t window = 16;
};

inline ProblemFile parse_problem(std::string_view file) {
  using K = problem_error::Kind;
  ProblemFile p;
  bool have_surface = false, have_n = false;
  std::size_t surface_line = 0;
  std::size_t last_line = 0;
  const auto ls = text::lines(file);
  for (std::size_t li = 0; li < ls.size(); ++li) {
    const std::size_t lineno = li + 1;
    last_line = lineno;
    std::string_view line = ls[li];
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const std::string_view t = text::trim(line);
    if (t.empty()) continue;
    const std::size_t col0 = static_cast<std::size_t>(t.data() - ls[li].data()) + 1;
    auto [key, rest] = text::head_rest(t);
    const std::size_t rest_col = rest.empty() ? col0 + key.size() : static_cast<std::size_t>(rest.data() - ls[li].data()) + 1;
    auto fail = [&](K kind, std::size_t col, const std::string& msg) -> problem_error {
      return problem_error(kind, lineno, col, msg);
    };
    try {
      if (key == "surface") {
        if (have_surface) throw fail(K::arity, col0, "second surface line");
        p.surface = text::parse_surface(rest);
        have_surface = true;
        surface_line = lineno;
      } else if (key == "n") {
        if (have_n) throw fail(K::arity, col0, "second degree line");
        if (rest == "inf") p.infinite = true;
        else p.n = static_cast<std::size_t>(text::parse_u64(rest, "degree", 1'000'000));
        if (!p.infinite && p.n == 0) throw fail(K::degree, rest_col, "degree must be >= 1");
        have_n = true;
      } else if (key == "class") {
        if (!have_n) throw fail(K::syntax, col0, "class line before the degree line");
        if (p.infinite) throw fail(K::degree, col0, "class line in an infinite-degree problem; use spec");
        std::vector<std::uint32_t> parts;
        for (auto w : text::split_ws(rest)) {
          try {
            parts.push_back(static_cast<std::uint32_t>(text::parse_u64(w, "class part", 1'000'000)));
          } catch (const input_error& e) {
            throw fail(K::syntax, static_cast<std::size_t>(w.data() - ls[li].data()) + 1, e.what());
          }
        }
        if (parts.empty()) throw fail(K::syntax, rest_col, "empty class");
        CycleType c(std::move(parts));
        if (c.size() != p.n) {
          throw fail(K::degree, rest_col,
                     "class {" + c.to_string() + "} sums to " + std::to_string(c.size()) + " but n = " +
                         std::to_string(p.n));
        }
        p.classes.push_back(std::move(c));
      } else if (key == "spec") {
        if (!have_n) throw fail(K::syntax, col0, "spec line before the degree line");
        if (!p.infinite) throw fail(K::degree, col0, "spec line in a finite-degree problem; use class");
        p.specs.push_back(inf::CycleTypeSpec::parse(rest));
      } else if (key == "connected") {
        if (!rest.empty()) throw fail(K::syntax, rest_col, "connected takes no argument");
        p.connected = true;
      } else if (key == "regular") {
        p.regular = true;
        if (rest == "relaxed") p.regular_strict = false;
        else if (rest.empty() || rest == "strict") p.regular_strict = true;
        else throw fail(K::syntax, rest_col, "regular takes strict or relaxed");
      } else if (key == "seed") {
        p.seed = static_cast<std::int64_t>(text::parse_u64(rest, "seed", 1'000'000'000'000ULL));
      } else if (key == "budget") {
        p.budget = text::parse_u64(rest, "budget", 1'000'000'000'000ULL);
        if (*p.budget == 0) throw fail(K::syntax, rest_col, "budget must be positive");
      } else if (key == "window") {
        p.window = static_cast<std::int64_t>(text::parse_u64(rest, "window", 1000));
      } else {
        throw fail(K::syntax, col0, "unknown directive \"" + std::string(key) + "\"");
      }
    } catch (const problem_error&) {
      throw;
    } catch (const input_error& e) {
      throw problem_error(K::syntax, lineno, rest_col, e.what());
    }
  }
  if (!have_surface) throw problem_error(K::syntax, last_line + 1, 1, "missing surface line");
  if (!have_n) throw problem_error(K::syntax, last_line + 1, 1, "missing degree line (n <int> or n inf)");
  const std::size_t got = p.infinite ? p.specs.size() : p.classes.size();
  if (got != p.surface.boundary_count) {
    throw problem_error(K::arity, surface_line, 1,
                        "surface has k=" + std::to_string(p.surface.boundary_count) + " boundary circles but " +
                            std::to_string(got) + (p.infinite ? " spec" : " class") + " lines were given");
  }
  return p;
}

}  // namespace covext
