#pragma once

// Command dispatch behind the covext executable.
//
// Exit codes: 0 extends / success, 1 does not extend / check failed,
// 2 unknown, 3 input error, 4 budget exhausted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covext/error.hpp"
#include "covext/extend_finite.hpp"
#include "covext/extend_infinite.hpp"
#include "covext/inf/ore.hpp"
#include "covext/inf/window.hpp"
#include "covext/problem.hpp"
#include "covext/regular.hpp"
#include "covext/surface.hpp"
#include "covext/sym_char.hpp"
#include "covext/verdict.hpp"
#include "covext/witness.hpp"

namespace covext::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kUnknown = 2, kInputError = 3, kBudget = 4 };

struct CommandOptions {
  std::string command;
  std::string input_path;                  // problem file, or witness file for verify
  std::optional<std::string> output_path;  // witness destination
  std::optional<std::uint64_t> budget;
  std::optional<std::int64_t> seed;
  bool no_witness = false;
  // build-strip
  std::size_t degree = 0;
  std::string sigma;
  std::string tau;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << body;
}

/// Search budget: command line, then problem file, then COVEXT_BUDGET.
inline SearchOptions search_options(const CommandOptions& o, const ProblemFile& p) {
  SearchOptions s;
  if (const char* env = std::getenv("COVEXT_BUDGET")) {
    s.node_budget = text::parse_u64(env, "COVEXT_BUDGET", 1'000'000'000'000ULL);
  }
  if (p.budget) s.node_budget = *p.budget;
  if (o.budget) s.node_budget = *o.budget;
  return s;
}

inline int exit_for(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::extends: return kOk;
    case VerdictStatus::not_extends: return kNo;
    case VerdictStatus::unknown: return kUnknown;
  }
  return kUnknown;
}

inline void print_problem(std::ostream& out, const ProblemFile& p) {
  out << "surface " << p.surface.to_string() << '\n';
  out << "degree " << (p.infinite ? std::string("inf") : std::to_string(p.n)) << '\n';
  if (p.infinite) {
    for (std::size_t i = 0; i < p.specs.size(); ++i) out << "spec " << i + 1 << ' ' << p.specs[i].to_string() << '\n';
  } else {
    for (std::size_t i = 0; i < p.classes.size(); ++i) out << "class " << i + 1 << ' ' << p.classes[i].to_string() << '\n';
  }
  if (p.connected) out << "connected\n";
}

inline void emit_witness(std::ostream& out, const CommandOptions& o, const Witness& w) {
  const std::string body = serialize_witness(w);
  if (o.output_path) {
    write_file(*o.output_path, body);
    out << "witness written to " << *o.output_path << '\n';
  } else {
    out << "--- witness\n" << body;
  }
}

inline Verdict decide(const CommandOptions& o, const ProblemFile& p) {
  if (p.infinite) {
    InfiniteOptions io;
    io.seed = o.seed.value_or(p.seed);
    io.connected = p.connected;
    io.window = p.window;
    io.witnesses = !o.no_witness;
    return decide_infinite(p.surface, p.specs, io);
  }
  return decide_finite(p.surface, p.classes, p.n, p.connected, search_options(o, p));
}

inline int cmd_decide(const CommandOptions& o, const ProblemFile& p, std::ostream& out, bool require_witness) {
  const Verdict v = decide(o, p);
  print_problem(out, p);
  out << "verdict " << to_string(v.status) << '\n';
  out << "reason " << v.reason << '\n';
  out << "constructive " << (v.constructive ? "yes" : "no") << '\n';
  for (const auto& n : v.notes) out << "note " << n << '\n';
  if (v.witness && !o.no_witness) emit_witness(out, o, *v.witness);
  if (require_witness && !v.witness) {
    out << "no witness available\n";
    return v.status == VerdictStatus::not_extends ? kNo : kUnknown;
  }
  return exit_for(v.status);
}

inline int cmd_count(const CommandOptions&, const ProblemFile& p, std::ostream& out) {
  if (p.infinite) throw input_error("count needs a finite degree");
  const auto c = frobenius_count(p.classes, static_cast<std::uint32_t>(p.n));
  print_problem(out, p);
  out << "solutions " << c.str() << '\n';
  out << "reason frobenius-count\n";
  return kOk;
}

inline int cmd_ore(const CommandOptions& o, const ProblemFile& p, std::ostream& out) {
  const std::size_t k = p.infinite ? p.specs.size() : p.classes.size();
  if (k != 1) throw input_error("ore needs exactly one class or spec line");
  print_problem(out, p);
  if (p.infinite) {
    const auto t = inf::transitive_ore(p.specs[0], o.seed.value_or(p.seed));
    out << "g " << t.g << '\n' << "h " << t.h << '\n' << "sigma " << t.sigma << '\n';
    const bool comm = inf::window_commutator_check(t.g, t.h, t.sigma, p.window);
    const std::vector<inf::LazyPerm> gens{t.g, t.h};
    const bool trans = inf::window_transitivity(gens, 4, 200);
    out << "check commutator window " << p.window << ' ' << (comm ? "ok" : "FAIL") << '\n';
    out << "check transitivity 4 200 " << (trans ? "ok" : "FAIL") << '\n';
    out << "reason ore-transitive\n";
    return comm && trans ? kOk : kNo;
  }
  const Perm sigma = canonical_representative(p.classes[0]);
  out << "sigma " << sigma << '\n';
  const auto w = commutator_witness(sigma, p.connected, search_options(o, p));
  if (!w) {
    if (parity(sigma) == Parity::odd) {
      out << "verdict NotExtends\nreason parity\nnote an odd permutation is not a commutator\n";
      return kNo;
    }
    out << "verdict Unknown\nreason search-failed\n";
    return kUnknown;
  }
  out << "a " << w->first << '\n' << "b " << w->second << '\n';
  const bool ok = commutator(w->first, w->second) == sigma;
  out << "check commutator " << (ok ? "ok" : "FAIL") << '\n';
  out << "reason ore-commutator\n";
  return ok ? kOk : kNo;
}

inline int cmd_regular(const CommandOptions& o, const ProblemFile& p, std::ostream& out) {
  if (p.infinite) throw input_error("regular needs a finite degree");
  const auto r = regular_witness_search(p.surface, p.classes, p.n, p.regular_strict, search_options(o, p));
  print_problem(out, p);
  out << "mode " << (p.regular_strict ? "strict" : "relaxed") << '\n';
  switch (r.status) {
    case RegularSearchResult::Status::found: {
      out << "verdict Extends\nreason regular-order-n\n";
      if (!r.transitive) out << "note image group has order n but acts intransitively\n";
      Witness w;
      w.surface = p.surface;
      w.degree = p.n;
      w.connected = r.transitive;
      w.classes = p.classes;
      w.rep = *r.rep;
      if (!o.no_witness) emit_witness(out, o, w);
      return kOk;
    }
    case RegularSearchResult::Status::none:
      out << "verdict NotExtends\nreason regular-order-n\nnote exhaustive search over degree " << p.n << '\n';
      return kNo;
    case RegularSearchResult::Status::unknown:
      out << "verdict Unknown\nreason regular-order-n\nnote degree above " << kRegularSearchMaxDegree << '\n';
      return kUnknown;
  }
  return kUnknown;
}

inline int cmd_verify(const CommandOptions& o, std::ostream& out) {
  const std::string body = read_file(o.input_path);
  const VerifyReport r = verify_witness(body);
  for (const auto& l : r.lines) out << l << '\n';
  out << (r.ok ? "witness verified\n" : "witness REJECTED\n");
  return r.ok ? kOk : kNo;
}

inline int cmd_build_strip(const CommandOptions& o, std::ostream& out) {
  if (o.degree == 0) throw input_error("build-strip needs --degree");
  const Perm sigma = Perm::parse(o.sigma, o.degree);
  const Perm tau = Perm::parse(o.tau, o.degree);
  const GluingComplex c = build_strip_cover(sigma, tau);
  const CycleType mono = boundary_monodromy(c);
  const CycleType comm = cycle_type(commutator(sigma, tau));
  out << "squares " << c.square_count() << '\n';
  out << "edges " << c.edge_count() << '\n';
  out << "vertices " << c.vertices().size() << '\n';
  out << "euler_characteristic " << c.euler_characteristic() << '\n';
  out << "closed_euler_characteristic " << c.closed_euler_characteristic() << '\n';
  out << "boundary_monodromy " << mono.to_string() << '\n';
  out << "commutator_cycle_type " << comm.to_string() << '\n';
  out << "match " << (mono == comm ? "yes" : "no") << '\n';
  return mono == comm ? kOk : kNo;
}

/// Runs one command; never throws.
inline int run_command(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  try {
    if (o.command == "verify") return cmd_verify(o, out);
    if (o.command == "build-strip") return cmd_build_strip(o, out);
    const ProblemFile p = parse_problem(read_file(o.input_path));
    if (o.command == "decide") return cmd_decide(o, p, out, false);
    if (o.command == "witness") return cmd_decide(o, p, out, true);
    if (o.command == "count") return cmd_count(o, p, out);
    if (o.command == "ore") return cmd_ore(o, p, out);
    if (o.command == "regular") return cmd_regular(o, p, out);
    throw input_error("unknown command \"" + o.command + "\"");
  } catch (const budget_exceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const precondition_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace covext::cli
