#include "schubert/poset.hpp"

#include "oracles/order.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace schubert;

namespace {

using DegreesByDim = std::map<int, std::multiset<long>>;

DegreesByDim degrees_by_dim(const QuotientPoset& p) {
  DegreesByDim out;
  for (const auto& n : p.nodes()) out[n.dim].insert(n.degree.convert_to<long>());
  return out;
}

// E6/P6 degrees by dimension, read off the Hasse diagram.
const DegreesByDim kE6Degrees = {
    {0, {1}},      {1, {1}},      {2, {1}},       {3, {1}},       {4, {1, 1}},   {5, {1, 2}},
    {6, {2, 3}},   {7, {2, 5}},   {8, {2, 5, 7}}, {9, {9, 12}},   {10, {12, 21}}, {11, {12, 33}},
    {12, {33, 45}}, {13, {78}},   {14, {78}},     {15, {78}},     {16, {78}},
};

// E7/P7 degrees by dimension, read off the Hasse diagram.
const DegreesByDim kE7Degrees = {
    {0, {1}},           {1, {1}},           {2, {1}},           {3, {1}},
    {4, {1}},           {5, {1, 1}},        {6, {1, 2}},        {7, {2, 3}},
    {8, {2, 5}},        {9, {2, 5, 7}},     {10, {2, 9, 12}},   {11, {11, 12, 21}},
    {12, {12, 32, 33}}, {13, {33, 45, 65}}, {14, {78, 98, 110}}, {15, {78, 98, 286}},
    {16, {78, 364, 384}}, {17, {78, 442, 748}}, {18, {520, 748, 1190}}, {19, {1710, 1938}},
    {20, {1938, 3648}}, {21, {1938, 5586}}, {22, {5586, 7524}}, {23, {13110}},
    {24, {13110}},      {25, {13110}},      {26, {13110}},      {27, {13110}},
};

// Closed-form |W|; the Levi factor is still enumerated.
std::size_t weyl_group_order(LieType t, int n) {
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (t) {
  case LieType::A:
    return fact * (n + 1);
  case LieType::B:
  case LieType::C:
    return fact << n;
  case LieType::D:
    return fact << (n - 1);
  case LieType::E6:
    return 51840;
  case LieType::E7:
    return 2903040;
  }
  return 0;
}

std::size_t weyl_quotient_size(LieType t, int n, const CartanDatum& d, const NodeSubset& marked) {
  return weyl_group_order(t, n) / oracle::subgroup_order(d, complement(d, marked));
}

} // namespace

TEST(QuotientPoset, E6P6DegreesByDimension) {
  auto p = build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  EXPECT_EQ(p.size(), 27u);
  EXPECT_EQ(p.top_dim(), 16);
  EXPECT_TRUE(p.is_cominuscule());
  EXPECT_TRUE(p.is_minuscule());
  EXPECT_EQ(degrees_by_dim(p), kE6Degrees);
  EXPECT_EQ(degree(p, p.top()), 78);
  EXPECT_EQ(p.covers().size(), 36u);
}

TEST(QuotientPoset, E7P7DegreesByDimension) {
  auto p = build_quotient_poset(build_cartan(LieType::E7, 7), {7});
  EXPECT_EQ(p.size(), 56u);
  EXPECT_EQ(p.top_dim(), 27);
  EXPECT_EQ(degrees_by_dim(p), kE7Degrees);
  EXPECT_EQ(degree(p, p.top()), 13110);
}

TEST(QuotientPoset, E7P1) {
  auto d = build_cartan(LieType::E7, 7);
  auto p = build_quotient_poset(d, {1});
  EXPECT_EQ(p.size(), 126u);
  EXPECT_EQ(p.top_dim(), 33);
  EXPECT_FALSE(p.is_cominuscule());
  EXPECT_THROW(degree(p, p.top()), InvalidArgument);
  EXPECT_THROW(poincare_dual(p, p.top()), InvalidArgument);
}

TEST(WeylGroup, EnumeratedOrderMatchesClosedForm) {
  for (auto [t, n] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 4}, {LieType::B, 3}, {LieType::C, 4}, {LieType::D, 4}, {LieType::E6, 6}}) {
    const auto d = build_cartan(t, n);
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    EXPECT_EQ(oracle::subgroup_order(d, all), weyl_group_order(t, n)) << d.label();
  }
}

TEST(QuotientPoset, SizeMatchesGroupOrderRatio) {
  struct Case {
    LieType t;
    int n;
    NodeSubset marked;
  };
  std::vector<Case> cases = {
      {LieType::A, 4, {2}},    {LieType::A, 5, {1, 3}}, {LieType::B, 4, {1}}, {LieType::B, 3, {2}},
      {LieType::C, 4, {4}},    {LieType::D, 5, {5}},    {LieType::D, 5, {1}}, {LieType::D, 4, {1, 3}},
      {LieType::E6, 6, {6}},   {LieType::E6, 6, {5}},   {LieType::E6, 6, {1, 6}}, {LieType::E7, 7, {7}},
      {LieType::E7, 7, {6}},
  };
  for (const auto& c : cases) {
    auto d = build_cartan(c.t, c.n);
    auto p = build_quotient_poset(d, c.marked);
    EXPECT_EQ(p.size(), weyl_quotient_size(c.t, c.n, d, c.marked)) << p.label();
    EXPECT_EQ(p.top_dim(), homogeneous_dimension(d, c.marked)) << p.label();
  }
}

TEST(QuotientPoset, NodeInvariants) {
  for (auto [t, n, i] : std::vector<std::tuple<LieType, int, int>>{
           {LieType::E6, 6, 6}, {LieType::E7, 7, 7}, {LieType::D, 5, 5}, {LieType::C, 4, 4}, {LieType::B, 4, 1}}) {
    auto d = build_cartan(t, n);
    auto p = build_quotient_poset(d, {i});
    for (const auto& node : p.nodes()) {
      EXPECT_EQ(static_cast<int>(node.min_word.size()), node.dim);
      EXPECT_TRUE(is_reduced(d, node.min_word));
      EXPECT_EQ(act(d, inverse(node.min_word), p.defining_weight()), node.fingerprint);
      EXPECT_EQ(negative_root_count(d, node.fingerprint), node.dim);
      for (auto u : p.upper_covers(node.id)) EXPECT_EQ(p.node(u).dim, node.dim + 1);
    }
    EXPECT_EQ(p.lower_covers(p.bottom()).size(), 0u);
    EXPECT_EQ(p.upper_covers(p.top()).size(), 0u);
    for (const auto& node : p.nodes()) {
      if (node.id != p.bottom()) {
        EXPECT_FALSE(p.lower_covers(node.id).empty());
      }
    }
  }
}

TEST(QuotientPoset, PoincarePolynomialPalindromic) {
  for (auto [t, n, i] : std::vector<std::tuple<LieType, int, int>>{
           {LieType::E6, 6, 6}, {LieType::E7, 7, 7}, {LieType::D, 6, 6}, {LieType::C, 4, 4}, {LieType::A, 6, 3}}) {
    auto p = build_quotient_poset(build_cartan(t, n), {i});
    std::vector<int> counts(p.top_dim() + 1, 0);
    for (const auto& node : p.nodes()) ++counts[node.dim];
    for (int k = 0; k <= p.top_dim(); ++k) EXPECT_EQ(counts[k], counts[p.top_dim() - k]) << p.label();
  }
}

TEST(QuotientPoset, DegreeIsChainCountForMinuscule) {
  for (auto [t, n, i] : std::vector<std::tuple<LieType, int, int>>{
           {LieType::E6, 6, 6}, {LieType::E7, 7, 7}, {LieType::D, 5, 5}, {LieType::D, 5, 1}, {LieType::A, 6, 3}}) {
    auto p = build_quotient_poset(build_cartan(t, n), {i});
    ASSERT_TRUE(p.is_minuscule());
    for (const auto& node : p.nodes()) {
      EXPECT_EQ(node.degree, node.chains);
      if (node.id == p.bottom()) continue;
      BigInt sum = 0;
      for (auto c : p.lower_covers(node.id)) sum += p.node(c).degree;
      EXPECT_EQ(node.degree, sum);
    }
  }
}

TEST(QuotientPoset, QuadricDegrees) {
  // B_m/P_1 is the odd quadric Q^{2m-1}, C_n/P_n the Lagrangian Grassmannian
  auto q5 = build_quotient_poset(build_cartan(LieType::B, 3), {1});
  EXPECT_TRUE(q5.is_cominuscule());
  EXPECT_FALSE(q5.is_minuscule());
  EXPECT_EQ(q5.size(), 6u);
  EXPECT_EQ(degree(q5, q5.top()), 2);
  EXPECT_EQ(q5.node(q5.top()).chains, 1);
  auto lg24 = build_quotient_poset(build_cartan(LieType::C, 2), {2});
  EXPECT_EQ(degree(lg24, lg24.top()), 2);
  auto lg36 = build_quotient_poset(build_cartan(LieType::C, 3), {3});
  EXPECT_EQ(degree(lg36, lg36.top()), 16);
  auto q6 = build_quotient_poset(build_cartan(LieType::D, 4), {1});
  EXPECT_EQ(q6.size(), 8u);
  EXPECT_EQ(degree(q6, q6.top()), 2);
}

TEST(QuotientPoset, QuadricClassCounts) {
  for (int m = 2; m <= 6; ++m) {
    auto p = build_quotient_poset(build_cartan(LieType::B, m), {1});
    EXPECT_EQ(p.size(), static_cast<std::size_t>(2 * m - 1 + 1));
  }
  for (int m = 3; m <= 6; ++m) {
    auto p = build_quotient_poset(build_cartan(LieType::D, m), {1});
    EXPECT_EQ(p.size(), static_cast<std::size_t>(2 * m - 2 + 2));
  }
}

TEST(QuotientPoset, SizeCapRejected) {
  auto d = build_cartan(LieType::E7, 7);
  EXPECT_THROW(build_quotient_poset(d, {1}, 100), InvalidArgument);
  EXPECT_THROW(build_quotient_poset(d, {}), InvalidArgument);
  EXPECT_THROW(build_quotient_poset(d, {8}), InvalidArgument);
}

TEST(BruhatLeq, AgreesWithCoverClosure) {
  for (auto [t, n, marked] : std::vector<std::tuple<LieType, int, NodeSubset>>{
           {LieType::E6, 6, {6}},
           {LieType::E7, 7, {7}},
           {LieType::E6, 6, {5}},
           {LieType::D, 5, {5}},
           {LieType::B, 4, {2}},
           {LieType::C, 3, {1, 3}},
           {LieType::A, 5, {2, 4}}}) {
    auto p = build_quotient_poset(build_cartan(t, n), marked);
    auto reach = oracle::cover_closure(p);
    for (const auto& a : p.nodes())
      for (const auto& b : p.nodes())
        ASSERT_EQ(bruhat_leq(p, a.id, b.id), static_cast<bool>(reach[a.id.value][b.id.value]))
            << p.label() << " " << a.id.value << " " << b.id.value;
  }
}

TEST(BruhatLeq, Examples) {
  auto p = build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  for (const auto& n : p.nodes()) {
    EXPECT_TRUE(bruhat_leq(p, p.bottom(), n.id));
    EXPECT_TRUE(bruhat_leq(p, n.id, n.id));
  }
  std::vector<NodeId> dim4;
  for (const auto& n : p.nodes())
    if (n.dim == 4) dim4.push_back(n.id);
  ASSERT_EQ(dim4.size(), 2u);
  EXPECT_FALSE(bruhat_leq(p, dim4[0], dim4[1]));
  EXPECT_FALSE(bruhat_leq(p, dim4[1], dim4[0]));
  EXPECT_THROW(bruhat_leq(p, NodeId{27}, p.top()), InvalidArgument);
}

TEST(QuotientPoset, CominusculeIsDistributiveLattice) {
  for (auto [t, n, i] : std::vector<std::tuple<LieType, int, int>>{
           {LieType::E6, 6, 6}, {LieType::E7, 7, 7}, {LieType::D, 5, 5}, {LieType::C, 3, 3}, {LieType::B, 3, 1},
           {LieType::A, 5, 3}}) {
    auto p = build_quotient_poset(build_cartan(t, n), {i});
    EXPECT_TRUE(oracle::is_distributive_lattice(oracle::cover_closure(p))) << p.label();
  }
}

TEST(PoincareDual, InvolutionOrderReversingDimensionComplement) {
  for (auto [t, n, i] : std::vector<std::tuple<LieType, int, int>>{
           {LieType::E6, 6, 6}, {LieType::E7, 7, 7}, {LieType::C, 4, 4}, {LieType::B, 4, 1}, {LieType::D, 5, 1}}) {
    auto p = build_quotient_poset(build_cartan(t, n), {i});
    EXPECT_EQ(poincare_dual(p, p.bottom()), p.top());
    for (const auto& a : p.nodes()) {
      NodeId da = poincare_dual(p, a.id);
      EXPECT_EQ(poincare_dual(p, da), a.id);
      EXPECT_EQ(a.dim + p.node(da).dim, p.top_dim());
      for (const auto& b : p.nodes())
        EXPECT_EQ(bruhat_leq(p, a.id, b.id), bruhat_leq(p, poincare_dual(p, b.id), da));
    }
  }
}

TEST(PoincareDual, E6ConeApexPairsWithP5) {
  auto p = build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  auto apex = nodes_by_dim_deg(p, 11, 12);
  ASSERT_EQ(apex.size(), 1u);
  NodeId dual = poincare_dual(p, apex.front());
  EXPECT_EQ(p.node(dual).dim, 5);
  EXPECT_EQ(p.node(dual).degree, 1);
}

TEST(NodesByDimDeg, AmbiguousLinearSpaces) {
  auto e6 = build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  EXPECT_EQ(nodes_by_dim_deg(e6, 4, 1).size(), 2u);
  EXPECT_EQ(nodes_by_dim_deg(e6, 16, 78).size(), 1u);
  EXPECT_TRUE(nodes_by_dim_deg(e6, 3, 2).empty());
  auto e7 = build_quotient_poset(build_cartan(LieType::E7, 7), {7});
  EXPECT_EQ(nodes_by_dim_deg(e7, 5, 1).size(), 2u);
}

TEST(LowerInterval, Trivial) {
  auto p = build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  auto b = lower_interval(p, p.bottom());
  EXPECT_EQ(b.size(), 1u);
  auto t = lower_interval(p, p.top());
  EXPECT_EQ(t.size(), p.size());
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(t.weight[k], p.node(t.origin[k]).degree);
  EXPECT_THROW(lower_interval(p, NodeId{99}), InvalidArgument);
}

TEST(LowerInterval, MatchesBruhatLeq) {
  auto p = build_quotient_poset(build_cartan(LieType::E7, 7), {7});
  for (const auto& top : p.nodes()) {
    auto s = lower_interval(p, top.id);
    std::size_t expected = 0;
    for (const auto& v : p.nodes())
      if (bruhat_leq(p, v.id, top.id)) {
        ++expected;
        EXPECT_TRUE(s.local(v.id).has_value());
      }
    EXPECT_EQ(s.size(), expected);
  }
}
