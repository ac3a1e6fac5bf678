#include "schubert/lattice.hpp"

#include <gtest/gtest.h>

#include <random>
#include <tuple>

using namespace schubert;

namespace {

std::vector<std::pair<LieType, int>> small_types() {
  std::vector<std::pair<LieType, int>> out;
  for (int n = 1; n <= 6; ++n) out.emplace_back(LieType::A, n);
  for (int n = 2; n <= 5; ++n) out.emplace_back(LieType::B, n);
  for (int n = 2; n <= 5; ++n) out.emplace_back(LieType::C, n);
  for (int n = 3; n <= 6; ++n) out.emplace_back(LieType::D, n);
  out.emplace_back(LieType::E6, 6);
  out.emplace_back(LieType::E7, 7);
  return out;
}

WeylWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> letter(1, rank);
  WeylWord w;
  for (int k = 0; k < len; ++k) w.letters.push_back(letter(rng));
  return w;
}

} // namespace

TEST(BuildCartan, RankOne) {
  auto d = build_cartan(LieType::A, 1);
  EXPECT_EQ(d.cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(d.positive_roots().size(), 1u);
}

TEST(BuildCartan, ExceptionalRootCounts) {
  EXPECT_EQ(build_cartan(LieType::E6, 6).positive_roots().size(), 36u);
  EXPECT_EQ(build_cartan(LieType::E7, 7).positive_roots().size(), 63u);
}

TEST(BuildCartan, ClassicalRootCounts) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(build_cartan(LieType::A, n).positive_roots().size(), size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(build_cartan(LieType::B, n).positive_roots().size(), size_t(n * n));
    EXPECT_EQ(build_cartan(LieType::C, n).positive_roots().size(), size_t(n * n));
  }
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(build_cartan(LieType::D, n).positive_roots().size(), size_t(n * (n - 1)));
}

TEST(BuildCartan, MatrixShape) {
  for (auto [t, n] : small_types()) {
    auto d = build_cartan(t, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) EXPECT_EQ(d.cartan(i, j), 2);
        else {
          EXPECT_LE(d.cartan(i, j), 0);
          EXPECT_EQ(d.cartan(i, j) == 0, d.cartan(j, i) == 0);
        }
      }
  }
}

TEST(BuildCartan, BourbakiBonds) {
  auto e6 = build_cartan(LieType::E6, 6);
  EXPECT_EQ(e6.cartan(2, 4), -1);
  EXPECT_EQ(e6.cartan(1, 3), -1);
  EXPECT_EQ(e6.cartan(1, 2), 0);
  auto b3 = build_cartan(LieType::B, 3);
  EXPECT_EQ(b3.cartan(2, 3), -2);
  EXPECT_EQ(b3.cartan(3, 2), -1);
  auto c3 = build_cartan(LieType::C, 3);
  EXPECT_EQ(c3.cartan(2, 3), -1);
  EXPECT_EQ(c3.cartan(3, 2), -2);
}

TEST(BuildCartan, RejectsInvalidPairs) {
  EXPECT_THROW(build_cartan(LieType::A, 0), InvalidArgument);
  EXPECT_THROW(build_cartan(LieType::B, 1), InvalidArgument);
  EXPECT_THROW(build_cartan(LieType::C, 1), InvalidArgument);
  EXPECT_THROW(build_cartan(LieType::D, 2), InvalidArgument);
  EXPECT_THROW(build_cartan(LieType::E6, 7), InvalidArgument);
  EXPECT_THROW(build_cartan(LieType::E7, 6), InvalidArgument);
}

TEST(Reflect, Examples) {
  auto a1 = build_cartan(LieType::A, 1);
  EXPECT_EQ(reflect(a1, 1, Weight{{1}}), Weight{{-1}});
  auto a2 = build_cartan(LieType::A, 2);
  EXPECT_EQ(reflect(a2, 1, Weight{{1, 0}}), (Weight{{-1, 1}}));
  EXPECT_THROW(reflect(a2, 3, Weight{{1, 0}}), InvalidArgument);
  EXPECT_THROW(reflect(a2, 0, Weight{{1, 0}}), InvalidArgument);
}

TEST(Reflect, InvolutionOnRandomWeights) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (auto [t, n] : small_types()) {
    auto d = build_cartan(t, n);
    for (int trial = 0; trial < 50; ++trial) {
      Weight v{std::vector<int>(n)};
      for (auto& c : v.coords) c = coord(rng);
      for (int i = 1; i <= n; ++i) EXPECT_EQ(reflect(d, i, reflect(d, i, v)), v);
    }
  }
}

TEST(Act, Examples) {
  auto a2 = build_cartan(LieType::A, 2);
  const Weight v{{1, 0}};
  EXPECT_EQ(act(a2, WeylWord{}, v), v);
  EXPECT_EQ(act(a2, WeylWord{{1, 1}}, v), v);
  // rightmost first: s2 fixes omega_1, then s1 sends it to (-1,1)
  EXPECT_EQ(act(a2, WeylWord{{1, 2}}, v), (Weight{{-1, 1}}));
  EXPECT_EQ(act(a2, WeylWord{{2, 1}}, v), (Weight{{0, -1}}));
  EXPECT_THROW(act(a2, WeylWord{{1, 4}}, v), InvalidArgument);
}

TEST(Length, Examples) {
  auto e6 = build_cartan(LieType::E6, 6);
  EXPECT_EQ(length(e6, WeylWord{}), 0);
  EXPECT_EQ(length(e6, WeylWord{{1, 1}}), 0);
  NodeSubset all{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(length(e6, longest_element(e6, all)), 36);
}

TEST(Length, ChangesByOneUnderRightMultiplication) {
  std::mt19937 rng(11);
  for (auto [t, n] : small_types()) {
    auto d = build_cartan(t, n);
    for (int trial = 0; trial < 40; ++trial) {
      WeylWord w = random_word(rng, n, 1 + trial % 12);
      const int l = length(d, w);
      for (int i = 1; i <= n; ++i) {
        WeylWord wi = w;
        wi.letters.push_back(i);
        EXPECT_EQ(std::abs(length(d, wi) - l), 1);
      }
    }
  }
}

TEST(Length, ReducedIffLengthEqualsWordLength) {
  auto d = build_cartan(LieType::D, 4);
  EXPECT_TRUE(is_reduced(d, WeylWord{{1, 2, 3}}));
  EXPECT_FALSE(is_reduced(d, WeylWord{{1, 2, 2}}));
  EXPECT_FALSE(is_reduced(d, WeylWord{{1, 3, 1, 3}}));
}

TEST(LongestElement, Examples) {
  auto a1 = build_cartan(LieType::A, 1);
  EXPECT_EQ(longest_element(a1, {1}).letters, std::vector<int>{1});
  auto e6 = build_cartan(LieType::E6, 6);
  auto d5 = longest_element(e6, complement(e6, {6}));
  EXPECT_EQ(length(e6, d5), 20);
  EXPECT_EQ(d5.size(), 20u);
  EXPECT_THROW(longest_element(e6, {}), InvalidArgument);
}

TEST(LongestElement, LengthIsSupportedRootCountForEverySubset) {
  for (auto [t, n] : small_types()) {
    if (n > 6) continue;
    auto d = build_cartan(t, n);
    for (int mask = 1; mask < (1 << n); ++mask) {
      NodeSubset s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(i + 1);
      auto w = longest_element(d, s);
      EXPECT_TRUE(is_reduced(d, w));
      EXPECT_EQ(length(d, w), supported_root_count(d, s));
      // every letter in S is a right descent of the longest element
      for (int i : s) {
        WeylWord wi = w;
        wi.letters.push_back(i);
        EXPECT_LT(length(d, wi), length(d, w));
      }
    }
  }
}

TEST(LongestElement, E7FullLength) {
  auto e7 = build_cartan(LieType::E7, 7);
  EXPECT_EQ(length(e7, longest_element(e7, {1, 2, 3, 4, 5, 6, 7})), 63);
}

TEST(HomogeneousDimension, ExceptionalQuotients) {
  auto e6 = build_cartan(LieType::E6, 6);
  auto e7 = build_cartan(LieType::E7, 7);
  EXPECT_EQ(homogeneous_dimension(e6, {6}), 16);
  EXPECT_EQ(homogeneous_dimension(e6, {1}), 16);
  EXPECT_EQ(homogeneous_dimension(e6, {5}), 25);
  EXPECT_EQ(homogeneous_dimension(e6, {5, 6}), 26);
  EXPECT_EQ(homogeneous_dimension(e6, {1, 6}), 24);
  EXPECT_EQ(homogeneous_dimension(e7, {7}), 27);
  EXPECT_EQ(homogeneous_dimension(e7, {1}), 33);
  EXPECT_EQ(homogeneous_dimension(e7, {1, 7}), 43);
  EXPECT_EQ(homogeneous_dimension(e7, {6}), 42);
  EXPECT_EQ(homogeneous_dimension(e7, {6, 7}), 43);
}
