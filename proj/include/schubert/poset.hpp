#pragma once

// W_P \ W as a graded poset.
//
// A right coset W_P w is identified by its fingerprint w^{-1}(lambda_P), where
// lambda_P is the sum of the fundamental weights of the marked nodes.  The
// stabilizer of lambda_P is exactly W_P, so fingerprints are in bijection with
// cosets.  Appending a letter i to a minimal representative w moves the
// fingerprint f to s_i f; the length goes up by one iff f_i > 0.
//
// Bruhat covers are found by reflecting in arbitrary positive roots: f and
// s_beta f span a cover iff <f, beta^vee> > 0 and the lengths differ by one.
// The pairing <f, beta^vee> is the Chevalley multiplicity of the cover.

#include "schubert/errors.hpp"
#include "schubert/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

struct NodeId {
  std::uint32_t value = 0;

  friend bool operator==(NodeId, NodeId) = default;
  friend auto operator<=>(NodeId, NodeId) = default;
};

struct CosetNode {
  NodeId id;
  WeylWord min_word;
  Weight fingerprint;
  int dim = 0;
  /// Degree in the minimal embedding; zero unless the quotient is cominuscule.
  BigInt degree;
  /// Number of saturated chains from the bottom node.
  BigInt chains;
};

inline constexpr std::size_t kDefaultPosetCap = 1'000'000;

class QuotientPoset;
QuotientPoset build_quotient_poset(const CartanDatum& datum, NodeSubset marked, std::size_t cap);

class QuotientPoset {
public:
  [[nodiscard]] const CartanDatum& datum() const { return datum_; }
  /// Marked nodes I of P = P_I.  W_P is generated by the unmarked ones.
  [[nodiscard]] const NodeSubset& parabolic() const { return marked_; }
  [[nodiscard]] const Weight& defining_weight() const { return lambda_; }

  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const std::vector<CosetNode>& nodes() const { return nodes_; }
  [[nodiscard]] const CosetNode& node(NodeId id) const {
    check(id);
    return nodes_[id.value];
  }
  [[nodiscard]] bool contains(NodeId id) const { return id.value < nodes_.size(); }

  [[nodiscard]] NodeId bottom() const { return NodeId{0}; }
  [[nodiscard]] NodeId top() const { return top_; }
  [[nodiscard]] int top_dim() const { return nodes_[top_.value].dim; }

  [[nodiscard]] const std::vector<NodeId>& lower_covers(NodeId id) const {
    check(id);
    return lower_[id.value];
  }
  [[nodiscard]] const std::vector<NodeId>& upper_covers(NodeId id) const {
    check(id);
    return upper_[id.value];
  }
  /// Chevalley multiplicity of the cover lower < upper, 0 if not a cover.
  [[nodiscard]] int cover_multiplicity(NodeId lower, NodeId upper) const {
    check(lower);
    check(upper);
    const auto& ups = upper_[lower.value];
    for (std::size_t k = 0; k < ups.size(); ++k)
      if (ups[k] == upper) return upper_mult_[lower.value][k];
    return 0;
  }
  /// All covers as (lower, upper), sorted.
  [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> covers() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (NodeId u : upper_[i]) out.emplace_back(NodeId{static_cast<std::uint32_t>(i)}, u);
    return out;
  }

  [[nodiscard]] std::optional<NodeId> find(const Weight& fingerprint) const {
    auto it = by_fingerprint_.find(fingerprint);
    if (it == by_fingerprint_.end()) return std::nullopt;
    return it->second;
  }

  /// Single marked node whose simple root has coefficient 1 in the highest root.
  [[nodiscard]] bool is_cominuscule() const { return cominuscule_; }
  /// Single marked node whose fundamental weight pairs to at most 1 with every coroot.
  [[nodiscard]] bool is_minuscule() const { return minuscule_; }

  [[nodiscard]] std::string label() const {
    std::string s = datum_.label() + "/P";
    for (std::size_t k = 0; k < marked_.size(); ++k) s += (k ? "," : "") + std::to_string(marked_[k]);
    return s;
  }

  void check(NodeId id) const {
    if (!contains(id)) {
      throw InvalidArgument("node id " + std::to_string(id.value) + " does not belong to " + label());
    }
  }

  friend QuotientPoset build_quotient_poset(const CartanDatum& datum, NodeSubset marked, std::size_t cap);

private:
  CartanDatum datum_;
  NodeSubset marked_;
  Weight lambda_;
  std::vector<CosetNode> nodes_;
  std::unordered_map<Weight, NodeId> by_fingerprint_;
  std::vector<std::vector<NodeId>> lower_;
  std::vector<std::vector<NodeId>> upper_;
  std::vector<std::vector<int>> upper_mult_;
  NodeId top_;
  bool cominuscule_ = false;
  bool minuscule_ = false;
};

namespace detail {

inline std::vector<int> root_in_weight_coords(const CartanDatum& d, std::size_t k) {
  const auto& c = d.positive_roots()[k];
  std::vector<int> out(d.rank(), 0);
  for (int j = 0; j < d.rank(); ++j) {
    if (c[j] == 0) continue;
    const auto& row = d.cartan_matrix()[j];
    for (int i = 0; i < d.rank(); ++i) out[i] = checked_add(out[i], checked_mul(c[j], row[i]));
  }
  return out;
}

} // namespace detail

/// Enumerate W_P \ W breadth-first from the identity coset.  Node ids follow
/// discovery order with letters tried in increasing order, so they are stable.
inline QuotientPoset build_quotient_poset(const CartanDatum& datum, NodeSubset marked,
                                          std::size_t cap = kDefaultPosetCap) {
  if (marked.empty()) throw InvalidArgument("parabolic needs at least one marked node");
  marked = normalize_subset(datum, marked);

  QuotientPoset p;
  p.datum_ = datum;
  p.marked_ = marked;
  p.lambda_ = fundamental_weight_sum(datum, marked);

  p.nodes_.push_back(CosetNode{NodeId{0}, WeylWord{}, p.lambda_, 0, BigInt{0}, BigInt{0}});
  p.by_fingerprint_.emplace(p.lambda_, NodeId{0});
  for (std::size_t k = 0; k < p.nodes_.size(); ++k) {
    for (int i = 1; i <= datum.rank(); ++i) {
      if (p.nodes_[k].fingerprint.coords[i - 1] <= 0) continue;
      Weight next = p.nodes_[k].fingerprint;
      detail::reflect_in_place(datum, i, next.coords);
      if (p.by_fingerprint_.contains(next)) continue;
      if (p.nodes_.size() >= cap) {
        throw InvalidArgument("quotient " + datum.label() + " exceeds the size cap of " + std::to_string(cap) +
                              " cosets");
      }
      const NodeId id{static_cast<std::uint32_t>(p.nodes_.size())};
      WeylWord word = p.nodes_[k].min_word;
      word.letters.push_back(i);
      const int dim = p.nodes_[k].dim + 1;
      p.by_fingerprint_.emplace(next, id);
      p.nodes_.push_back(CosetNode{id, std::move(word), std::move(next), dim, BigInt{0}, BigInt{0}});
    }
  }

  const std::size_t n = p.nodes_.size();
  std::vector<std::vector<int>> root_weights;
  for (std::size_t k = 0; k < datum.positive_roots().size(); ++k)
    root_weights.push_back(detail::root_in_weight_coords(datum, k));

  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  p.upper_mult_.assign(n, {});
  std::vector<std::vector<int>> lower_mult(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Weight& f = p.nodes_[a].fingerprint;
    std::vector<std::pair<NodeId, int>> ups;
    for (std::size_t k = 0; k < root_weights.size(); ++k) {
      const int c = coroot_pairing(datum, f, k);
      if (c <= 0) continue;
      Weight g = f;
      for (int i = 0; i < datum.rank(); ++i)
        g.coords[i] = detail::checked_sub(g.coords[i], detail::checked_mul(c, root_weights[k][i]));
      auto it = p.by_fingerprint_.find(g);
      if (it == p.by_fingerprint_.end()) throw InternalError("reflection left the orbit");
      if (p.nodes_[it->second.value].dim == p.nodes_[a].dim + 1) ups.emplace_back(it->second, c);
    }
    std::sort(ups.begin(), ups.end());
    for (auto [b, c] : ups) {
      p.upper_[a].push_back(b);
      p.upper_mult_[a].push_back(c);
      p.lower_[b.value].push_back(NodeId{static_cast<std::uint32_t>(a)});
      lower_mult[b.value].push_back(c);
    }
  }

  const auto& highest = datum.positive_roots().back();
  if (marked.size() == 1) {
    const int i = marked.front() - 1;
    p.cominuscule_ = highest[i] == 1;
    p.minuscule_ = std::all_of(datum.positive_coroots().begin(), datum.positive_coroots().end(),
                               [i](const std::vector<int>& co) { return co[i] <= 1; });
  }

  // nodes are in nondecreasing dimension, so lower covers are final before use
  p.nodes_[0].chains = 1;
  if (p.cominuscule_) p.nodes_[0].degree = 1;
  for (std::size_t b = 1; b < n; ++b) {
    BigInt chains = 0;
    BigInt degree = 0;
    for (std::size_t k = 0; k < p.lower_[b].size(); ++k) {
      const auto& low = p.nodes_[p.lower_[b][k].value];
      chains += low.chains;
      if (p.cominuscule_) degree += low.degree * lower_mult[b][k];
    }
    p.nodes_[b].chains = std::move(chains);
    p.nodes_[b].degree = std::move(degree);
  }

  p.top_ = NodeId{static_cast<std::uint32_t>(n - 1)};
  for (std::size_t b = 0; b < n; ++b)
    if (p.nodes_[b].dim > p.nodes_[p.top_.value].dim) p.top_ = NodeId{static_cast<std::uint32_t>(b)};
  return p;
}

/// v <= w in the Bruhat order, by descent recursion on w: pick s with
/// s w < w; if also s v < v compare (s v, s w), else compare (v, s w).
inline bool bruhat_leq(const QuotientPoset& p, NodeId v, NodeId w) {
  p.check(v);
  p.check(w);
  const CartanDatum& d = p.datum();
  Weight fv = p.node(v).fingerprint;
  Weight fw = p.node(w).fingerprint;
  int dv = p.node(v).dim;
  int dw = p.node(w).dim;
  while (true) {
    if (dv > dw) return false;
    if (dw == 0) return dv == 0;
    if (dv == dw) return fv == fw;
    int s = 0;
    for (int i = 1; i <= d.rank(); ++i)
      if (fw.coords[i - 1] < 0) {
        s = i;
        break;
      }
    if (s == 0) throw InternalError("non-bottom coset without a left descent");
    detail::reflect_in_place(d, s, fw.coords);
    --dw;
    if (fv.coords[s - 1] < 0) {
      detail::reflect_in_place(d, s, fv.coords);
      --dv;
    }
  }
}

inline void require_cominuscule(const QuotientPoset& p, const char* what) {
  if (!p.is_cominuscule()) {
    throw InvalidArgument(std::string(what) + " needs a cominuscule quotient; " + p.label() + " is not");
  }
}

inline const BigInt& degree(const QuotientPoset& p, NodeId id) {
  require_cominuscule(p, "degree");
  return p.node(id).degree;
}

/// Partner of complementary dimension: the coset of w w_0, fingerprint w_0 f.
inline NodeId poincare_dual(const QuotientPoset& p, NodeId id) {
  require_cominuscule(p, "poincare_dual");
  const CartanDatum& d = p.datum();
  NodeSubset all;
  for (int i = 1; i <= d.rank(); ++i) all.push_back(i);
  const WeylWord w0 = longest_element(d, all);
  auto hit = p.find(act(d, w0, p.node(id).fingerprint));
  if (!hit) throw InternalError("w0 image left the orbit");
  return *hit;
}

inline std::vector<NodeId> nodes_by_dim_deg(const QuotientPoset& p, int dim, const BigInt& deg) {
  require_cominuscule(p, "nodes_by_dim_deg");
  std::vector<NodeId> out;
  for (const auto& n : p.nodes())
    if (n.dim == dim && n.degree == deg) out.push_back(n.id);
  return out;
}

/// Induced sub-poset with covers restricted.  `origin` maps local indices back
/// to ids in the parent; `weight` carries chain counts from the local bottom.
struct SubPoset {
  std::vector<NodeId> origin;
  std::vector<int> dim;
  std::vector<BigInt> weight;
  std::vector<std::vector<std::size_t>> lower;
  std::vector<std::vector<std::size_t>> upper;

  [[nodiscard]] std::size_t size() const { return origin.size(); }
  [[nodiscard]] std::optional<std::size_t> local(NodeId id) const {
    auto it = std::lower_bound(origin.begin(), origin.end(), id);
    if (it == origin.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - origin.begin());
  }
};

/// Restrict to an arbitrary node set.  Weights are chain counts from the
/// minimal elements of the set.
inline SubPoset induced_subposet(const QuotientPoset& p, std::vector<NodeId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubPoset s;
  s.origin = std::move(members);
  const std::size_t n = s.origin.size();
  s.dim.resize(n);
  s.weight.assign(n, BigInt{0});
  s.lower.assign(n, {});
  s.upper.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    s.dim[a] = p.node(s.origin[a]).dim;
    for (NodeId u : p.upper_covers(s.origin[a]))
      if (auto b = s.local(u)) {
        s.upper[a].push_back(*b);
        s.lower[*b].push_back(a);
      }
  }
  // origin ids are sorted and ids grow with dimension
  for (std::size_t a = 0; a < n; ++a) {
    if (s.lower[a].empty()) {
      s.weight[a] = 1;
      continue;
    }
    for (std::size_t b : s.lower[a]) s.weight[a] += s.weight[b];
  }
  return s;
}

inline SubPoset full_subposet(const QuotientPoset& p) {
  std::vector<NodeId> all;
  for (const auto& n : p.nodes()) all.push_back(n.id);
  return induced_subposet(p, std::move(all));
}

inline SubPoset lower_interval(const QuotientPoset& p, NodeId top) {
  p.check(top);
  std::vector<char> seen(p.size(), 0);
  std::vector<NodeId> stack{top};
  std::vector<NodeId> members;
  seen[top.value] = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    members.push_back(x);
    for (NodeId y : p.lower_covers(x))
      if (!seen[y.value]) {
        seen[y.value] = 1;
        stack.push_back(y);
      }
  }
  return induced_subposet(p, std::move(members));
}

} // namespace schubert

template <>
struct std::hash<schubert::NodeId> {
  std::size_t operator()(schubert::NodeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
