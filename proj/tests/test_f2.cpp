#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ver4/f2.hpp"

using namespace ver4;

namespace {

BitMatrix randomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1U) m.set(r, c);
  return m;
}

// Rank by counting the distinct vectors in the row span: 2^rank of them.
std::size_t bruteRank(const BitMatrix& m) {
  std::set<std::vector<bool>> span;
  const std::size_t k = m.rows();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> v(m.cols(), false);
    for (std::size_t r = 0; r < k; ++r)
      if (mask >> r & 1U)
        for (std::size_t c = 0; c < m.cols(); ++c) v[c] = v[c] != m.get(r, c);
    span.insert(v);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

BitVector fromMask(std::size_t n, std::size_t mask) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) v.set(i);
  return v;
}

}  // namespace

TEST(F2, FieldArithmetic) {
  const F2 zero(false), one(true);
  EXPECT_EQ(one + one, zero);
  EXPECT_EQ(one * one, one);
  EXPECT_EQ(one * zero, zero);
  EXPECT_EQ(one.inverse(), one);
  EXPECT_THROW((void)zero.inverse(), std::domain_error);
}

TEST(BitVector, BasicOperations) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.count(), 3U);
  EXPECT_EQ(v.setBits(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(v.findNext(1), 64U);
  BitVector w = BitVector::unit(130, 64);
  v ^= w;
  EXPECT_FALSE(v.get(64));
  EXPECT_TRUE(v.dot(BitVector::unit(130, 129)));
  EXPECT_EQ(BitVector::fromBits({1, 0, 1}).toString(), "101");
  EXPECT_THROW(v ^= BitVector(3), std::invalid_argument);
}

TEST(BitMatrix, RankMatchesSpanEnumeration) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = randomMatrix(rng, 1 + rng() % 7, 1 + rng() % 9);
    EXPECT_EQ(m.rank(), bruteRank(m));
  }
}

TEST(BitMatrix, KernelMatchesExhaustiveNullSpace) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t cols = 1 + rng() % 8;
    const auto m = randomMatrix(rng, 1 + rng() % 6, cols);
    std::size_t nullCount = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cols); ++mask)
      if (m.apply(fromMask(cols, mask)).isZero()) ++nullCount;
    const auto ker = kernelBasis(m);
    for (const auto& v : ker) EXPECT_TRUE(m.apply(v).isZero());
    EXPECT_EQ(rankOf(ker, cols), ker.size());
    EXPECT_EQ(std::size_t{1} << ker.size(), nullCount);
    EXPECT_EQ(ker.size() + m.rank(), cols);
  }
}

TEST(BitMatrix, SolveAgreesWithExhaustiveSearch) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto m = randomMatrix(rng, rows, cols);
    const auto b = fromMask(rows, rng() % (std::size_t{1} << rows));
    bool solvable = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cols); ++mask)
      solvable = solvable || m.apply(fromMask(cols, mask)) == b;
    const auto x = solve(m, b);
    ASSERT_EQ(x.has_value(), solvable);
    if (x) EXPECT_EQ(m.apply(*x), b);
  }
}

TEST(BitMatrix, ProductTransposeKron) {
  const auto a = BitMatrix::fromBits({{1, 1}, {0, 1}});
  const auto b = BitMatrix::fromBits({{1, 0}, {1, 1}});
  EXPECT_EQ(a * b, BitMatrix::fromBits({{0, 1}, {1, 1}}));
  EXPECT_EQ(a.transpose(), b);
  EXPECT_EQ((a * a), BitMatrix::identity(2));
  const auto k = a.kron(BitMatrix::identity(2));
  EXPECT_EQ(k.rows(), 4U);
  EXPECT_TRUE(k.get(0, 2));
  EXPECT_FALSE(k.get(0, 3));
}

TEST(Subspace, TaggedReductionTracksCombinations) {
  Subspace s(4, 3);
  EXPECT_TRUE(s.insertTagged(BitVector::fromBits({1, 1, 0, 0}), BitVector::unit(3, 0)));
  EXPECT_TRUE(s.insertTagged(BitVector::fromBits({0, 1, 1, 0}), BitVector::unit(3, 1)));
  EXPECT_FALSE(s.insertTagged(BitVector::fromBits({1, 0, 1, 0}), BitVector::unit(3, 2)));
  auto [residual, tag] = s.reduceTagged(BitVector::fromBits({1, 0, 1, 0}));
  EXPECT_TRUE(residual.isZero());
  EXPECT_EQ(tag, BitVector::fromBits({1, 1, 0}));
  EXPECT_FALSE(s.contains(BitVector::fromBits({0, 0, 0, 1})));
}

TEST(Subspace, QuotientBasisProjection) {
  const std::vector<BitVector> space{BitVector::fromBits({1, 0, 0}), BitVector::fromBits({0, 1, 0}),
                                     BitVector::fromBits({0, 0, 1})};
  const std::vector<BitVector> sub{BitVector::fromBits({1, 1, 0})};
  const auto q = quotientBasis(space, sub);
  ASSERT_EQ(q.representatives.size(), 2U);
  EXPECT_TRUE(q.projection.apply(sub[0]).isZero());
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(q.projection.apply(q.representatives[i]), BitVector::unit(2, i));
  EXPECT_THROW(quotientBasis(std::vector<BitVector>{space[0]}, sub), std::invalid_argument);
}
