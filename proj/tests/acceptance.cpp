// Runs the acceptance battery and prints one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covext/extend_finite.hpp"
#include "covext/extend_infinite.hpp"
#include "covext/inf/ore.hpp"
#include "covext/inf/window.hpp"
#include "covext/regular.hpp"
#include "covext/surface.hpp"
#include "covext/sym_char.hpp"
#include "covext/witness.hpp"
#include "oracles.hpp"

using namespace covext;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<std::vector<CycleType>> tuples(std::uint32_t n, std::size_t k) {
  const auto ps = partitions(n);
  std::vector<std::vector<CycleType>> out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<CycleType> t;
    for (auto i : idx) t.push_back(ps[i]);
    out.push_back(std::move(t));
    std::size_t d = 0;
    while (d < k && ++idx[d] == ps.size()) idx[d++] = 0;
    if (d == k) break;
  }
  return out;
}

std::string show(const std::vector<CycleType>& t) {
  std::string s;
  for (const auto& c : t) s += "{" + c.to_string() + "}";
  return s;
}

const char* const kBattery[] = {"inf:inf", "inf:3, 1:inf", "2:inf",         "2:inf, 1:inf",
                                "inf:1",   "inf:2, 4:5",   "3:1, 1:inf"};

Outcome frobenius_oracle() {
  Outcome o;
  std::size_t checked = 0;
  auto check = [&](const std::vector<CycleType>& t, std::uint32_t n) {
    ++checked;
    if (frobenius_count(t, n) != big_int(oracle::count_products(t, n))) o.fail("mismatch at " + show(t));
  };
  for (std::uint32_t n = 3; n <= 4; ++n)
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& t : tuples(n, k)) check(t, n);
  std::mt19937_64 rng(20240101);
  const auto ps = partitions(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<CycleType> t;
    for (std::size_t j = 0; j < k; ++j) t.push_back(ps[rng() % ps.size()]);
    check(t, 5);
  }
  if (o.pass) o.detail = std::to_string(checked) + " tuples agree with enumeration";
  return o;
}

Outcome character_table() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const auto& ps = t.partitions();
    const std::size_t m = ps.size();
    const Partition e(std::vector<std::uint32_t>(n, 1));
    for (std::size_t a = 0; a < m; ++a) {
      if (t(ps[a], e) != static_cast<std::int64_t>(oracle::hook_dimension(ps[a].parts())))
        o.fail("dimension of " + ps[a].to_string());
      for (std::size_t b = 0; b < m; ++b) {
        big_int row = 0, col = 0;
        for (std::size_t c = 0; c < m; ++c) {
          row += class_size(ps[c]) * t.value(a, c) * t.value(b, c);
          col += big_int(t.value(c, a)) * t.value(c, b);
        }
        if (row != (a == b ? factorial(n) : big_int(0))) o.fail("row orthogonality, n=" + std::to_string(n));
        if (col != (a == b ? centralizer_order(ps[a]) : big_int(0)))
          o.fail("column orthogonality, n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = "orthogonality and hook lengths hold for n = 1..8";
  return o;
}

Outcome planar_coherence() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& t : tuples(n, k)) {
        ++checked;
        const bool extends = decide_planar(t, n).extends;
        const auto w = witness_planar(t, n, false);
        if (extends != w.has_value()) o.fail("disagreement at " + show(t));
        if (w) {
          Perm prod(n);
          for (std::size_t i = 0; i < k; ++i) {
            if (oracle::type_of((*w)[i]) != t[i]) o.fail("witness class wrong at " + show(t));
            prod = prod * (*w)[i];
          }
          if (!prod.is_identity()) o.fail("witness product not e at " + show(t));
        }
      }
  if (o.pass) o.detail = std::to_string(checked) + " tuples coherent";
  return o;
}

Outcome finite_ore() {
  Outcome o;
  std::size_t even = 0, odd = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : oracle::all_perms(n)) {
      const auto w = commutator_witness(s, false);
      if (!oracle::type_of(s).is_even()) {
        ++odd;
        if (w) o.fail("witness for odd " + s.to_string());
        continue;
      }
      ++even;
      if (!w) o.fail("no witness for " + s.to_string());
      else if (commutator(w->first, w->second) != s) o.fail("witness fails for " + s.to_string());
    }
  const auto all = oracle::all_perms(5);
  std::size_t a5 = 0, hits = 0;
  for (const auto& s : all) {
    if (!oracle::type_of(s).is_even()) continue;
    ++a5;
    bool exists = false;
    for (std::size_t i = 0; i < all.size() && !exists; ++i)
      for (const auto& b : all)
        if (commutator(all[i], b) == s && oracle::orbit_count({all[i], b}, 5) == 1) {
          exists = true;
          break;
        }
    const auto w = commutator_witness(s, true);
    const bool ok = w && commutator(w->first, w->second) == s && oracle::orbit_count({w->first, w->second}, 5) == 1;
    hits += ok ? 1 : 0;
    if (exists != ok) o.fail("transitive witness disagrees with pair search at " + s.to_string());
  }
  if (hits != a5) o.fail("transitive success " + std::to_string(hits) + "/" + std::to_string(a5));
  if (o.pass)
    o.detail = std::to_string(even) + " even verified, " + std::to_string(odd) + " odd absent, A_5 transitive " +
               std::to_string(hits) + "/" + std::to_string(a5);
  return o;
}

Outcome ore_windows() {
  Outcome o;
  for (const char* s : kBattery) {
    const auto t = inf::transitive_ore(inf::CycleTypeSpec::parse(s));
    bool comm = true;
    inf::for_each_in_window(16, [&](inf::Point q) {
      comm = comm && t.g.forward(t.h.forward(t.g.backward(t.h.backward(q)))) == t.sigma.forward(q);
    });
    if (!comm || !inf::window_commutator_check(t.g, t.h, t.sigma, 16)) o.fail(std::string("commutator {") + s + "}");
    const std::vector<inf::LazyPerm> gens{t.g, t.h};
    if (!inf::window_transitivity(gens, 4, 200)) o.fail(std::string("transitivity {") + s + "}");
  }
  if (o.pass) o.detail = "7 specs: commutator on [-16,16]^2, orbit covers [-4,4]^2 within 200 steps";
  return o;
}

Outcome builder_fidelity() {
  Outcome o;
  for (const char* s : kBattery) {
    const auto spec = inf::CycleTypeSpec::parse(s);
    const auto sigma = inf::build_sigma(spec);
    const auto c = inf::window_cycle_census(sigma, 32);
    std::uint64_t infinite_cycles = 0;
    bool moving_aleph0 = false;
    for (const auto& e : spec.entries()) {
      if (e.size.infinite) {
        infinite_cycles = e.count.infinite ? 1 : e.count.value;
        continue;
      }
      const auto it = c.finite_cycles.find(e.size.value);
      const std::uint64_t got = it == c.finite_cycles.end() ? 0 : it->second;
      if (e.count.infinite) {
        moving_aleph0 |= e.size.value > 1;
        if (got == 0) o.fail(std::string("no ") + std::to_string(e.size.value) + "-cycles for {" + s + "}");
      } else if (got != e.count.value) {
        o.fail(std::string("count of ") + std::to_string(e.size.value) + "-cycles for {" + s + "}");
      }
    }
    for (const auto& [len, cnt] : c.finite_cycles) {
      bool listed = false;
      for (const auto& e : spec.entries()) listed |= !e.size.infinite && e.size.value == len;
      if (!listed) o.fail(std::string("unexpected ") + std::to_string(len) + "-cycles for {" + s + "}");
    }
    if (c.truncated < infinite_cycles) o.fail(std::string("too few open orbits for {") + s + "}");
    if (infinite_cycles == 0 && !moving_aleph0 && c.truncated != 0) o.fail(std::string("open orbit for {") + s + "}");
    const bool rows = inf::builder_case(spec) == inf::BuilderCase::rows;
    inf::for_each_in_window(32, [&](inf::Point q) {
      const std::int64_t dy = sigma.forward(q).y - q.y;
      if (rows ? dy != 0 : (dy < -1 || dy > 1)) o.fail(std::string("vertical step for {") + s + "}");
    });
  }
  if (o.pass) o.detail = "7 specs: censuses consistent, row case keeps rows, sweep case |dy| <= 1";
  return o;
}

Outcome powers_and_squares() {
  Outcome o;
  for (const char* s : kBattery) {
    const auto spec = inf::CycleTypeSpec::parse(s);
    const auto d = inf::powers_decomposition(spec, {2}, {2});
    const auto sigma = inf::build_sigma(spec);
    const auto& a = d.alphas.at(0);
    const auto& b = d.betas.at(0);
    const auto tau_inv = d.tau_inverse;
    inf::for_each_in_window(16, [&](inf::Point q) {
      if (a.forward(a.forward(b.forward(b.forward(q)))) != sigma.forward(q))
        o.fail(std::string("sigma != a^2 b^2 for {") + s + "}");
      if (a.forward(d.psi.forward(q)) != d.psi.forward(a.forward(q))) o.fail(std::string("alpha family {") + s + "}");
      if (b.forward(tau_inv.forward(q)) != tau_inv.forward(b.forward(q))) o.fail(std::string("beta family {") + s + "}");
    });
  }
  {
    const auto spec = inf::CycleTypeSpec::parse("inf:2, 4:5");
    const std::vector<std::uint32_t> ns{2, 3}, ls{2, 2};
    const auto d = inf::powers_decomposition(spec, ns, ls);
    for (const auto* fam : {&d.alphas, &d.betas})
      for (std::size_t i = 0; i < fam->size(); ++i)
        for (std::size_t j = i + 1; j < fam->size(); ++j)
          inf::for_each_in_window(16, [&](inf::Point q) {
            if ((*fam)[i].forward((*fam)[j].forward(q)) != (*fam)[j].forward((*fam)[i].forward(q)))
              o.fail("family members do not commute");
          });
    if (!inf::window_equal(inf::powers_product(d, ns, ls), inf::build_sigma(spec), 16)) o.fail("product (2,3;2,2)");
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Perm x = oracle::random_perm(8, rng), y = oracle::random_perm(8, rng);
    const auto t = three_squares(x, y);
    if (t.s1 * t.s1 * t.s2 * t.s2 * t.s3 * t.s3 != commutator(x, y)) o.fail("finite three squares");
  }
  const auto t1 = inf::transitive_ore(inf::CycleTypeSpec::parse("inf:2, 4:5"));
  const auto t2 = inf::transitive_ore(inf::CycleTypeSpec::parse("2:inf, 1:inf"));
  const std::pair<inf::LazyPerm, inf::LazyPerm> pairs[] = {{t1.g, t1.h}, {t2.g, t2.h}, {t1.sigma, t2.g}};
  for (const auto& [x, y] : pairs) {
    const auto t = inf::three_squares(x, y);
    inf::for_each_in_window(12, [&](inf::Point q) {
      inf::Point r = q;
      for (const auto* s : {&t.s3, &t.s3, &t.s2, &t.s2, &t.s1, &t.s1}) r = s->forward(r);
      if (r != x.forward(y.forward(x.backward(y.backward(q))))) o.fail("lazy three squares");
    });
  }
  if (o.pass) o.detail = "sigma = a^2 b^2 on 7 specs, families commute, 100 finite and 3 lazy square triples";
  return o;
}

Outcome strip_cover() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Perm::point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Perm::point>(i + 1);
    const Perm sigma = Perm::from_cycles(n, {cyc});
    for (int t = 0; t < 20; ++t, ++checked) {
      const Perm tau = oracle::random_perm(n, rng);
      const GluingComplex c = build_strip_cover(sigma, tau);
      if (c.square_count() != n) o.fail("square count");
      if (c.euler_characteristic() != -static_cast<std::int64_t>(n)) o.fail("Euler characteristic, n=" + std::to_string(n));
      if (boundary_monodromy(c) != oracle::type_of(commutator(sigma, tau)))
        o.fail("monodromy for tau " + tau.to_string());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " strip covers match [sigma, tau]";
  return o;
}

Outcome regular_covers() {
  Outcome o;
  for (std::uint32_t g = 1; g <= 2; ++g)
    for (std::size_t n = 4; n <= 6; ++n)
      if (!regq_check(g, n)) o.fail("regq_check(" + std::to_string(g) + ", " + std::to_string(n) + ")");
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Perm::point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Perm::point>(i + 1);
    const Perm c = Perm::from_cycles(n, {cyc});
    for (std::size_t j = 0; j < n; ++j) {
      SurfaceRep r = SurfaceRep::trivial({true, 1, 1}, n);
      r.handles[0] = {c, c.pow(static_cast<std::int64_t>(j))};
      if (abelian_boundary_components(r) != n) o.fail("abelian boundary count, n=" + std::to_string(n));
    }
  }
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto cls = oracle::by_class(n);
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& t : tuples(n, k)) {
        ++checked;
        bool exists = false;
        std::vector<Perm> chosen;
        std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t d, const Perm& prefix) {
          if (exists) return;
          if (d == k) {
            exists = prefix.is_identity() && oracle::group_order(chosen, n) == n;
            return;
          }
          for (const auto& p : cls.at(t[d])) {
            chosen.push_back(p);
            rec(d + 1, prefix * p);
            chosen.pop_back();
          }
        };
        rec(0, Perm(n));
        const auto r = regular_witness_search({true, 0, static_cast<std::uint32_t>(k)}, t, n, true);
        if ((r.status == RegularSearchResult::Status::found) != exists) o.fail("strict search at " + show(t));
      }
  }
  if (o.pass) o.detail = "regq_check true, cyclic covers have n boundary circles, " + std::to_string(checked) +
                         " strict searches agree";
  return o;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("covext_accept_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  const fs::path o = scratch() / "stdout.txt";
  const int raw = std::system((std::string(COVEXT_BIN) + " " + args + " > " + o.string() + " 2>&1").c_str());
  if (out) *out = slurp(o);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome planar_infinite_cli() {
  Outcome o;
  struct Case {
    const char* name;
    const char* body;
    int code;
    const char* reason;
  };
  const Case cases[] = {
      {"bertram", "surface orientable g=0 k=3\nn inf\nspec inf:1, 1:inf\nspec inf:1, 1:inf\nspec 2:1, 1:inf\n", 1,
       "bertram"},
      {"cylinder-equal", "surface orientable g=0 k=2\nn inf\nspec 2:inf, inf:1\nspec 2:inf, inf:1\n", 0, "cylinder"},
      {"cylinder-unequal", "surface orientable g=0 k=2\nn inf\nspec inf:1\nspec inf:2\n", 1, "cylinder"},
      {"k4", "surface orientable g=0 k=4\nn inf\nspec 2:inf\nspec 2:inf\nspec inf:1\nspec 3:inf, 1:inf\n", 0,
       "droste-k4"},
      {"k3", "surface orientable g=0 k=3\nn inf\nspec inf:1, 1:inf\nspec inf:2\nspec 2:inf\n", 0, "droste-k3"},
  };
  for (const auto& c : cases) {
    std::string out;
    const int code = run_cli("decide " + write(std::string(c.name) + ".txt", c.body).string(), &out);
    if (code != c.code) o.fail(std::string(c.name) + " exit " + std::to_string(code));
    if (out.find(std::string("reason ") + c.reason) == std::string::npos) o.fail(std::string(c.name) + " reason");
  }
  if (o.pass) o.detail = "Bertram 1, cylinder 0/1, k=4 and k=3 existence 0";
  return o;
}

bool is_generator_line(std::string_view line) {
  return line.starts_with("handle ") || line.starts_with("square ") || line.starts_with("boundary ");
}

Outcome witness_round_trip() {
  Outcome o;
  const char* problems[] = {
      "surface orientable g=1 k=1\nn 5\nclass 3 1 1\nconnected\n",
      "surface orientable g=2 k=2\nn 6\nclass 3 2 1\nclass 2 1 1 1 1\nconnected\n",
      "surface orientable g=0 k=3\nn 4\nclass 2 1 1\nclass 3 1\nclass 4\nconnected\n",
      "surface nonorientable g=3 k=1\nn 5\nclass 3 1 1\n",
      "surface nonorientable g=1 k=1\nn 4\nclass 2 2\n",
      "surface orientable g=1 k=1\nn inf\nspec inf:2, 4:5\n",
      "surface orientable g=1 k=1\nn inf\nspec 2:inf, 1:inf\n",
      "surface orientable g=2 k=2\nn inf\nspec inf:1, 1:inf\nspec 3:1, 1:inf\n",
      "surface nonorientable g=2 k=1\nn inf\nspec inf:inf\n",
      "surface nonorientable g=3 k=1\nn inf\nspec inf:3, 1:inf\n",
      "surface orientable g=0 k=2\nn inf\nspec inf:1\nspec inf:1\nconnected\n",
  };
  std::size_t emitted = 0, verified = 0, tampered = 0, caught = 0;
  for (std::size_t i = 0; i < std::size(problems); ++i) {
    const auto p = write("p" + std::to_string(i) + ".txt", problems[i]);
    const auto w = scratch() / ("w" + std::to_string(i) + ".txt");
    if (run_cli("witness " + p.string() + " -o " + w.string()) != 0) {
      o.fail("no witness for problem " + std::to_string(i));
      continue;
    }
    ++emitted;
    if (run_cli("verify " + w.string()) == 0) ++verified;
    else o.fail("witness " + std::to_string(i) + " does not verify");

    const std::string body = slurp(w);
    std::size_t start = 0, sampled_cli = 0;
    while (start < body.size()) {
      const std::size_t end = body.find('\n', start);
      const std::string_view line(body.data() + start, (end == std::string::npos ? body.size() : end) - start);
      if (is_generator_line(line)) {
        // the permutation entry follows the generator label
        std::size_t pos = line.find(' ', line.find(' ') + 1) + 1;
        if (line.starts_with("handle ")) pos = line.find(' ', pos) + 1;
        for (std::size_t j = start + pos; j < start + line.size(); ++j) {
          std::string bad = body;
          const char c = bad[j];
          bad[j] = (c >= '0' && c <= '8') ? static_cast<char>(c + 1) : (c == '9' ? '0' : (c == 'A' ? 'B' : 'A'));
          ++tampered;
          bool detected = !verify_witness(bad).ok;
          if (detected && sampled_cli < 3) {
            ++sampled_cli;
            const auto t = write("t.txt", bad);
            detected = run_cli("verify " + t.string()) == 1;
          }
          if (detected) ++caught;
          else o.fail("undetected tamper in witness " + std::to_string(i) + " at byte " + std::to_string(j));
        }
      }
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  if (o.pass)
    o.detail = std::to_string(verified) + "/" + std::to_string(emitted) + " witnesses verify from file, " +
               std::to_string(caught) + "/" + std::to_string(tampered) + " single-byte tampers rejected";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_s;
  };
  const Criterion criteria[] = {
      {1, "Frobenius oracle equivalence", frobenius_oracle, 60},
      {2, "character table sanity", character_table, 0},
      {3, "planar decision/witness coherence", planar_coherence, 0},
      {4, "finite Ore", finite_ore, 0},
      {5, "transitive Ore windows", ore_windows, 300},
      {6, "builder fidelity", builder_fidelity, 0},
      {7, "powers and squares", powers_and_squares, 0},
      {8, "strip cover", strip_cover, 0},
      {9, "regular covers", regular_covers, 0},
      {10, "infinite planar rules via CLI", planar_infinite_cli, 0},
      {11, "witness round-trip and tamper detection", witness_round_trip, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing
              << ") - " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
