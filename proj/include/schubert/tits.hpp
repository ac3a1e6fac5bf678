#pragma once

// Tits correspondence G/P <- G/(P cap Q) -> G/Q on coset posets.
//
// The transform of the Schubert variety of a Q-coset W_Q w is the Schubert
// variety of the P-coset holding its maximal representative w0_Q w.  In
// fingerprint terms that is (w0_Q w)^{-1} lambda_P, looked up in the P-poset.

#include "schubert/errors.hpp"
#include "schubert/lattice.hpp"
#include "schubert/poset.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

struct TitsContext {
  CartanDatum datum;
  NodeSubset p;
  NodeSubset q;
  QuotientPoset poset_p;
  QuotientPoset poset_q;
  WeylWord w0_q;
  int d_tau = 0;
  int d_eta = 0;

  [[nodiscard]] std::string label() const {
    auto set = [](const NodeSubset& s) {
      std::string out;
      for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
      return out;
    };
    return datum.label() + " P={" + set(p) + "} Q={" + set(q) + "}";
  }
};

inline TitsContext build_context(const CartanDatum& datum, NodeSubset i, NodeSubset j,
                                 std::size_t cap = kDefaultPosetCap) {
  if (i.empty() || j.empty()) throw InvalidArgument("Tits context needs nonempty parabolics");
  i = normalize_subset(datum, i);
  j = normalize_subset(datum, j);
  if (i == j) throw InvalidArgument("Tits context needs P != Q");
  NodeSubset both = i;
  both.insert(both.end(), j.begin(), j.end());
  both = normalize_subset(datum, both);

  TitsContext ctx{datum, i, j, build_quotient_poset(datum, i, cap), build_quotient_poset(datum, j, cap), {}, 0, 0};
  const NodeSubset levi = complement(datum, j);
  if (!levi.empty()) ctx.w0_q = longest_element(datum, levi);
  const int dim_r = homogeneous_dimension(datum, both);
  ctx.d_tau = dim_r - homogeneous_dimension(datum, j);
  ctx.d_eta = dim_r - homogeneous_dimension(datum, i);
  return ctx;
}

/// Word for w0_Q w_min.
inline WeylWord max_rep(const TitsContext& ctx, NodeId q_node) {
  return concat(ctx.w0_q, ctx.poset_q.node(q_node).min_word);
}

inline NodeId tits_transform(const TitsContext& ctx, NodeId q_node) {
  const WeylWord w = max_rep(ctx, q_node);
  auto hit = ctx.poset_p.find(act(ctx.datum, inverse(w), ctx.poset_p.defining_weight()));
  if (!hit) throw InternalError("transform left the P-orbit in " + ctx.label());
  return *hit;
}

inline bool injectivity_check(const TitsContext& ctx, NodeId q_node) {
  return ctx.poset_p.node(tits_transform(ctx, q_node)).dim == ctx.poset_q.node(q_node).dim + ctx.d_tau;
}

/// A divisor pair Sigma < Sigma' in some poset, with a reason it is usable as
/// the input of the correspondence: some multiple-class representative of
/// Sigma lives inside Sigma' through its general point.
struct SourcePair {
  NodeId sigma;
  NodeId sigma_cover;
  std::string origin;
};

/// Pairs (sigma, Sigma') from hyperplane sections: Sigma' has sigma as its
/// only co-atom, equal degree, and dimension at least two.
inline std::vector<SourcePair> bertini_pairs(const QuotientPoset& p) {
  require_cominuscule(p, "bertini_pairs");
  std::vector<SourcePair> out;
  for (const auto& node : p.nodes())
    for (NodeId u : p.upper_covers(node.id)) {
      const auto& cover = p.node(u);
      if (p.lower_covers(u).size() == 1 && cover.dim >= 2 && cover.degree == node.degree)
        out.push_back({node.id, u, "hyperplane section in " + p.label()});
    }
  return out;
}

/// Image of pairs of the Q-poset under the transform, kept only where the
/// transform is injective on both members.
inline std::vector<SourcePair> transported_pairs(const TitsContext& ctx, const std::vector<SourcePair>& inner) {
  std::vector<SourcePair> out;
  for (const auto& pr : inner) {
    if (!injectivity_check(ctx, pr.sigma) || !injectivity_check(ctx, pr.sigma_cover)) continue;
    const NodeId a = tits_transform(ctx, pr.sigma);
    const NodeId b = tits_transform(ctx, pr.sigma_cover);
    const auto& ups = ctx.poset_p.upper_covers(a);
    if (std::find(ups.begin(), ups.end(), b) == ups.end()) continue;
    out.push_back({a, b, "transport via " + ctx.label() + " of " + pr.origin});
  }
  return out;
}

struct TitsWitnessData {
  SourcePair pair;
  NodeId image;
  NodeId image_cover;
};

/// Every pair whose members are both injective and whose smaller member
/// transforms onto `p_node`.
inline std::vector<TitsWitnessData> tits_witnesses(const TitsContext& ctx, NodeId p_node,
                                                   const std::vector<SourcePair>& sources) {
  ctx.poset_p.check(p_node);
  std::vector<TitsWitnessData> out;
  for (const auto& pr : sources) {
    ctx.poset_q.check(pr.sigma);
    ctx.poset_q.check(pr.sigma_cover);
    if (tits_transform(ctx, pr.sigma) != p_node) continue;
    if (!injectivity_check(ctx, pr.sigma) || !injectivity_check(ctx, pr.sigma_cover)) continue;
    out.push_back({pr, p_node, tits_transform(ctx, pr.sigma_cover)});
  }
  return out;
}

struct TransformRow {
  NodeId src;
  int src_dim = 0;
  BigInt src_degree;
  NodeId dst;
  int dst_dim = 0;
  BigInt dst_degree;
  bool injective = false;
};

/// Transform of every Q-node, in Q-node order.  Degrees are taken from the
/// posets when cominuscule, else left as chain counts.
inline std::vector<TransformRow> transform_table(const TitsContext& ctx) {
  std::vector<TransformRow> rows;
  for (const auto& node : ctx.poset_q.nodes()) {
    const NodeId dst = tits_transform(ctx, node.id);
    const auto& d = ctx.poset_p.node(dst);
    rows.push_back({node.id, node.dim, ctx.poset_q.is_cominuscule() ? node.degree : node.chains, dst, d.dim,
                    ctx.poset_p.is_cominuscule() ? d.degree : d.chains, d.dim == node.dim + ctx.d_tau});
  }
  return rows;
}

} // namespace schubert
