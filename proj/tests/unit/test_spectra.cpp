#include <gtest/gtest.h>

#include "generators.hpp"
#include "pzbench/spectra.hpp"

using namespace pzbench;
using namespace pzbench::spectra;

namespace {
std::vector<std::int64_t> values(const FrequencySet& s) { return s.values_1d(); }
}  // namespace

TEST(Lacunary, ConstructorNamesOffendingIndex) {
  EXPECT_NO_THROW(LacunarySeq({1, 3, 9}));
  try {
    LacunarySeq({1, 4, 4, 9});
    FAIL();
  } catch (const NotLacunary& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(LacunarySeq({0, 1}), NotLacunary);
  EXPECT_DOUBLE_EQ(LacunarySeq({2, 6, 12}).ratio(), 2.0);
  EXPECT_EQ(LacunarySeq({5}).ratio(), torus::kInfinity);
}

TEST(Lacunary, Geometric) {
  const auto p = geometric_lacunary(2, 4, 1);
  EXPECT_EQ(std::vector<std::int64_t>(p.terms().begin(), p.terms().end()),
            (std::vector<std::int64_t>{1, 2, 4, 8}));
  const auto g = geometric_lacunary(3, 3, 2);
  EXPECT_EQ(std::vector<std::int64_t>(g.terms().begin(), g.terms().end()),
            (std::vector<std::int64_t>{2, 6, 18}));
  EXPECT_THROW(geometric_lacunary(1, 3), PreconditionError);
  EXPECT_THROW(geometric_lacunary(2, 64), PreconditionError);
}

TEST(Blocks, SchemesPartitionTheirAmbientSets) {
  for (std::int64_t n = 0; n <= (1 << 20); ++n) {
    const int k = block_index(BlockScheme::shifted, n);
    const auto [lo, hi] = block_bounds(BlockScheme::shifted, k);
    ASSERT_TRUE(lo <= n && n <= hi) << n;
    if (n == 0) continue;
    const int j = block_index(BlockScheme::signed_dyadic, -n);
    const auto [a, b] = block_bounds(BlockScheme::signed_dyadic, j);
    ASSERT_TRUE(a <= n && n <= b) << n;
  }
  // Consecutive shifted blocks abut.
  for (int k = 0; k < 40; ++k) {
    EXPECT_EQ(block_bounds(BlockScheme::shifted, k).second + 1,
              block_bounds(BlockScheme::shifted, k + 1).first);
  }
  EXPECT_THROW(block_index(BlockScheme::signed_dyadic, 0), PreconditionError);
  EXPECT_THROW(block_index(BlockScheme::shifted, -1), PreconditionError);
}

TEST(Blocks, Counts) {
  FrequencySet pow2;
  for (int k = 0; k < 10; ++k) pow2.insert(std::int64_t{1} << k);
  const auto c = block_counts(pow2, 9);
  for (std::size_t n : c.counts) EXPECT_EQ(n, 1u);
  EXPECT_EQ(c.sup, 1u);

  FrequencySet range;
  for (int n = 1; n <= 100; ++n) range.insert(n);
  EXPECT_EQ(block_counts(range, 6).counts[5], 32u);

  const auto e = block_counts(FrequencySet(1), 5);
  for (std::size_t n : e.counts) EXPECT_EQ(n, 0u);
}

TEST(BlocksProperty, GeometricRatioAtLeastTwoHasUnitCounts) {
  for (std::int64_t r = 2; r <= 7; ++r) {
    const auto g = geometric_lacunary(r, 12 / static_cast<std::size_t>(r) + 4);
    FrequencySet s = FrequencySet::from_1d(g.terms());
    EXPECT_LE(block_counts(s, 60).sup, 1u) << "ratio " << r;
  }
}

TEST(Bonami, Examples) {
  EXPECT_EQ(values(sumset_bonami(LacunarySeq({1, 2}), 2, 100).elements),
            (std::vector<std::int64_t>{-3, -1, 1, 3}));
  EXPECT_EQ(values(sumset_bonami(LacunarySeq({1, 2, 4}), 2, 100).elements),
            (std::vector<std::int64_t>{-6, -5, -3, -2, -1, 1, 2, 3, 5, 6}));
  const auto one = sumset_bonami(LacunarySeq({3, 7, 20}), 1, 100);
  EXPECT_EQ(values(one.elements), (std::vector<std::int64_t>{-20, -7, -3, 3, 7, 20}));
  EXPECT_EQ(one.terms_used, 3u);
}

TEST(Bonami, CapTruncatesToLongestPrefix) {
  const auto base = geometric_lacunary(2, 12);
  const auto s = sumset_bonami(base, 2, 100);
  EXPECT_LE(s.elements.size(), 100u);
  EXPECT_LT(s.terms_used, 12u);
  const auto next = sumset_bonami(LacunarySeq(std::vector<std::int64_t>(
                                      base.terms().begin(),
                                      base.terms().begin() + static_cast<long>(s.terms_used) + 1)),
                                  2, 1 << 20);
  EXPECT_GT(next.elements.size(), 100u);
  EXPECT_THROW(sumset_bonami(base, 2, 3), CapExceeded);
  EXPECT_THROW(sumset_bonami(LacunarySeq({1}), 2, 10), PreconditionError);
}

TEST(BonamiProperty, SymmetricUnderNegation) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> t{gen::integer(rng, 1, 5)};
    for (int i = 1; i < 7; ++i) t.push_back(t.back() * gen::integer(rng, 2, 4) + gen::integer(rng, 0, 3));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto s = sumset_bonami(LacunarySeq(t), k, 4096);
      for (const auto& f : s.elements) EXPECT_TRUE(s.elements.contains(-f[0]));
    }
  }
}

TEST(Product, ExampleAndCardinality) {
  const FrequencySet a = FrequencySet::from_1d(std::vector<std::int64_t>{1, 2});
  const FrequencySet b = FrequencySet::from_1d(std::vector<std::int64_t>{4});
  const FrequencySet ab[] = {a, b};
  const auto p = product_set(ab);
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.contains(torus::Frequency{1, 4}));
  EXPECT_TRUE(p.contains(torus::Frequency{2, 4}));

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FrequencySet> f;
    std::size_t expect = 1;
    const auto dims = static_cast<std::size_t>(gen::integer(rng, 1, 3));
    for (std::size_t d = 0; d < dims; ++d) {
      FrequencySet s;
      const auto n = gen::integer(rng, 0, 9);
      for (std::int64_t i = 0; i < n; ++i) s.insert(gen::integer(rng, -20, 20));
      expect *= s.size();
      f.push_back(s);
    }
    EXPECT_EQ(product_set(f).size(), expect);
  }
  EXPECT_THROW(product_set(ab, 1), CapExceeded);
}

TEST(LacunarityVerdict, Examples) {
  const std::int64_t a[] = {1, 2, 4, 8};
  EXPECT_TRUE(is_lacunary_with_ratio_in(a, 2, 16).holds);
  const std::int64_t b[] = {1, 2, 3};
  const auto vb = is_lacunary_with_ratio_in(b, 2, 16);
  EXPECT_FALSE(vb.holds);
  ASSERT_TRUE(vb.witness);
  EXPECT_EQ(*vb.witness, (std::pair<std::int64_t, std::int64_t>{2, 3}));
  const std::int64_t c[] = {1, 16, 256};
  EXPECT_TRUE(is_lacunary_with_ratio_in(c, 2, 16).holds);
  const std::int64_t d[] = {1, 100};
  EXPECT_FALSE(is_lacunary_with_ratio_in(d, 2, 16).holds);
  const std::int64_t e[] = {3, 2};
  EXPECT_THROW(is_lacunary_with_ratio_in(e, 2, 16), PreconditionError);
}
