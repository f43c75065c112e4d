#include <gtest/gtest.h>

#include <random>

#include "covext/sym_char.hpp"
#include "oracles.hpp"

using namespace covext;

TEST(SymChar, SmallTableValues) {
  const CharacterTable t(3);
  ASSERT_EQ(t.partitions().size(), 3u);
  const Partition triv({3}), sgn({1, 1, 1}), std2({2, 1});
  const Partition e({1, 1, 1}), tr({2, 1}), c3({3});
  EXPECT_EQ(t(triv, tr), 1);
  EXPECT_EQ(t(sgn, tr), -1);
  EXPECT_EQ(t(std2, e), 2);
  EXPECT_EQ(t(std2, tr), 0);
  EXPECT_EQ(t(std2, c3), -1);
  EXPECT_EQ(character(Partition({3, 2}), Partition({2, 2, 1})), 1);
  EXPECT_EQ(character(Partition({2, 2, 1}), Partition({5})), 0);
}

TEST(SymChar, DimensionsMatchHookLengths) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const Partition e(std::vector<std::uint32_t>(n, 1));
    for (const auto& l : t.partitions()) EXPECT_EQ(t(l, e), static_cast<std::int64_t>(oracle::hook_dimension(l.parts())));
  }
}

TEST(SymChar, Orthogonality) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const auto& ps = t.partitions();
    const std::size_t m = ps.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        big_int row = 0, col = 0;
        for (std::size_t c = 0; c < m; ++c) {
          row += class_size(ps[c]) * t.value(a, c) * t.value(b, c);
          col += big_int(t.value(c, a)) * t.value(c, b);
        }
        EXPECT_EQ(row, a == b ? factorial(n) : big_int(0)) << "n=" << n;
        EXPECT_EQ(col, a == b ? centralizer_order(ps[a]) : big_int(0)) << "n=" << n;
      }
  }
}

TEST(SymChar, DegreeCap) {
  EXPECT_THROW(CharacterTable(15), precondition_error);
  EXPECT_NO_THROW(CharacterTable(10));
}

TEST(SymChar, FrobeniusMatchesEnumerationExhaustivelyUpTo4) {
  for (std::uint32_t n = 3; n <= 4; ++n) {
    const auto ps = partitions(n);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        std::vector<CycleType> cls;
        for (auto i : idx) cls.push_back(ps[i]);
        EXPECT_EQ(frobenius_count(cls, n), big_int(oracle::count_products(cls, n)));
        std::size_t d = 0;
        while (d < k && ++idx[d] == ps.size()) idx[d++] = 0;
        if (d == k) break;
      }
    }
  }
}

TEST(SymChar, FrobeniusMatchesEnumerationRandomS5) {
  std::mt19937_64 rng(5);
  const auto ps = partitions(5);
  for (int i = 0; i < 20; ++i) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<CycleType> cls;
    for (std::size_t j = 0; j < k; ++j) cls.push_back(ps[rng() % ps.size()]);
    EXPECT_EQ(frobenius_count(cls, 5), big_int(oracle::count_products(cls, 5)));
  }
}

TEST(SymChar, FrobeniusKnownValues) {
  const std::vector<CycleType> c{CycleType({2, 1}), CycleType({2, 1}), CycleType({3})};
  EXPECT_EQ(frobenius_count(c, 3), big_int(6));
  const std::vector<CycleType> big(4, CycleType({12}));
  EXPECT_GT(frobenius_count(big, 12), big_int(0));
  EXPECT_THROW(frobenius_count(c, 4), input_error);
}
