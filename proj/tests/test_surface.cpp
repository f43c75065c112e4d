#include <gtest/gtest.h>

#include <random>

#include "covext/surface.hpp"
#include "oracles.hpp"

using namespace covext;

TEST(Surface, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic({true, 0, 1}), 1);
  EXPECT_EQ(euler_characteristic({true, 1, 1}), -1);
  EXPECT_EQ(euler_characteristic({true, 2, 3}), -5);
  EXPECT_EQ(euler_characteristic({false, 1, 1}), 0);
  EXPECT_EQ(euler_characteristic({false, 3, 2}), -3);
  EXPECT_THROW(euler_characteristic({false, 0, 1}), input_error);
}

TEST(Surface, RelatorWord) {
  SurfaceRep r = SurfaceRep::trivial({true, 1, 1}, 3);
  r.handles[0] = {Perm::parse("(1 2 3)", 3), Perm::parse("(1 2)", 3)};
  r.boundary[0] = commutator(r.handles[0].first, r.handles[0].second).inverse();
  EXPECT_TRUE(check_representation(r));
  r.boundary[0] = r.boundary[0].inverse();
  EXPECT_FALSE(check_representation(r));
  r.boundary.push_back(Perm(3));
  EXPECT_THROW(r.relator(), input_error);

  SurfaceRep m = SurfaceRep::trivial({false, 1, 1}, 4);
  m.squares[0] = Perm::parse("(1 2 3 4)", 4);
  m.boundary[0] = Perm::parse("(1 3)(2 4)", 4);
  EXPECT_TRUE(check_representation(m));
}

TEST(Surface, DescribeCoverComponentsAndGenus) {
  SurfaceRep r = SurfaceRep::trivial({true, 1, 1}, 5);
  r.handles[0] = {Perm::parse("(1 2 3 4 5)", 5), Perm::parse("(2 3 4 5)", 5)};
  r.boundary[0] = commutator(r.handles[0].first, r.handles[0].second).inverse();
  ASSERT_TRUE(check_representation(r));
  const auto d = describe_cover(r);
  ASSERT_EQ(d.component_count(), 1u);
  const auto& c = d.components[0];
  EXPECT_EQ(c.euler_characteristic, -5);
  EXPECT_EQ(c.boundary_circle_count(), r.boundary[0].cycle_count());
  EXPECT_EQ(*c.genus, (2 - c.euler_characteristic - static_cast<std::int64_t>(c.boundary_circle_count())) / 2);

  SurfaceRep split = SurfaceRep::trivial({true, 0, 2}, 4);
  split.boundary = {Perm::parse("(1 2)", 4), Perm::parse("(1 2)", 4)};
  const auto ds = describe_cover(split);
  EXPECT_EQ(ds.component_count(), 3u);
  EXPECT_EQ(ds.boundary_circle_count(), 6u);
}

TEST(Surface, StripCoverMatchesCommutator) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Perm::point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Perm::point>(i + 1);
    const Perm sigma = Perm::from_cycles(n, {cyc});
    for (int t = 0; t < 10; ++t) {
      const Perm tau = oracle::random_perm(n, rng);
      const GluingComplex c = build_strip_cover(sigma, tau);
      EXPECT_EQ(c.square_count(), n);
      EXPECT_EQ(c.edge_count(), 2 * n);
      EXPECT_EQ(c.euler_characteristic(), -static_cast<std::int64_t>(n));
      EXPECT_EQ(boundary_monodromy(c), oracle::type_of(commutator(sigma, tau)));
    }
  }
}

TEST(Surface, StripCoverDegreeMismatch) {
  EXPECT_THROW(build_strip_cover(Perm(2), Perm(3)), input_error);
}
