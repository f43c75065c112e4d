#include <gtest/gtest.h>

#include "covext/regular.hpp"
#include "oracles.hpp"

using namespace covext;

TEST(Regular, SmallGroupsAreRegular) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : small_groups(n)) {
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(oracle::group_order(g.elements, n), n);
      EXPECT_TRUE(is_regular_action(g.elements, n));
    }
  EXPECT_EQ(small_groups(8).size(), 5u);
}

TEST(Regular, NoConnectedBoundaryRegularCovers) {
  for (std::uint32_t g = 1; g <= 2; ++g)
    for (std::size_t n = 4; n <= 6; ++n) EXPECT_TRUE(regq_check(g, n)) << g << ' ' << n;
}

TEST(Regular, AbelianBoundaryComponents) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Perm::point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Perm::point>(i + 1);
    const Perm c = Perm::from_cycles(n, {cyc});
    SurfaceRep r = SurfaceRep::trivial({true, 1, 1}, n);
    r.handles[0] = {c, c.pow(2)};
    EXPECT_EQ(abelian_boundary_components(r), n);
    r.handles[0] = {Perm(n), c};
    EXPECT_EQ(abelian_boundary_components(r), n);
  }
  EXPECT_TRUE(abelian_infinite_boundary_check({true, 1, 1}));
  EXPECT_TRUE(abelian_infinite_boundary_check({true, 2, 1}));
}

TEST(Regular, StrictSearchAgreesWithBruteForce) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto cls = oracle::by_class(n);
    const auto ps = partitions(n);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        std::vector<CycleType> t;
        for (auto i : idx) t.push_back(ps[i]);
        bool exists = false;
        std::vector<Perm> chosen;
        auto rec = [&](auto&& self, std::size_t d, const Perm& prefix) -> void {
          if (exists) return;
          if (d == k) {
            if (prefix.is_identity() && oracle::group_order(chosen, n) == n) exists = true;
            return;
          }
          for (const auto& p : cls.at(t[d])) {
            chosen.push_back(p);
            self(self, d + 1, prefix * p);
            chosen.pop_back();
          }
        };
        rec(rec, 0, Perm(n));
        const SurfaceSpec spec{true, 0, static_cast<std::uint32_t>(k)};
        const auto r = regular_witness_search(spec, t, n, true);
        EXPECT_EQ(r.status == RegularSearchResult::Status::found, exists);
        if (r.rep) {
          EXPECT_TRUE(check_representation(*r.rep));
          EXPECT_EQ(oracle::group_order(r.rep->generators(), n), n);
        }
        std::size_t d = 0;
        while (d < k && ++idx[d] == ps.size()) idx[d++] = 0;
        if (d == k) break;
      }
    }
  }
}

TEST(Regular, RelaxedModeAndDegreeCap) {
  const std::vector<CycleType> t{CycleType({3})};
  const auto r = regular_witness_search({true, 1, 1}, t, 3, false);
  EXPECT_EQ(r.status, RegularSearchResult::Status::none);
  const std::vector<CycleType> e{CycleType({1, 1, 1, 1})};
  const auto r2 = regular_witness_search({true, 1, 1}, e, 4, false);
  ASSERT_EQ(r2.status, RegularSearchResult::Status::found);
  EXPECT_TRUE(check_representation(*r2.rep));
  EXPECT_TRUE(is_regular_action(r2.rep->generators(), 4));
  const std::vector<CycleType> big{CycleType({9})};
  EXPECT_EQ(regular_witness_search({true, 1, 1}, big, 9, true).status, RegularSearchResult::Status::unknown);
}
