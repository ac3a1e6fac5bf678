#pragma once

// Flexibility certificates on the Cayley plane E6/P6 and the Freudenthal
// variety E7/P7, and their comparison with the golden decorations.
//
// Certificates per node:
//   Bertini / LinearSpace / Divisor   read off the poset itself
//   Cone   E6: image of a flexible OG(5,10) class in the cone with apex (11:12)
//          E7: image of a certified E6/P6 class in the cone with apex (17:78)
//   Tits   E6: Q={1} from divisor pairs in E6/P1;
//              Q={5} from E6/P6 divisor pairs carried to E6/P5
//          E7: Q={6} from E7/P7 divisor pairs carried to E7/P6;
//              Q={1} from certified classes of the 27-node interval in E7/P1
//              isomorphic to E6/P6

#include "schubert/classical.hpp"
#include "schubert/embedding.hpp"
#include "schubert/errors.hpp"
#include "schubert/poset.hpp"
#include "schubert/rigidity.hpp"
#include "schubert/tits.hpp"
#include "schubert/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// ---- cone embeddings ----

struct ConeEmbedding {
  NodeId apex;
  /// (sub node, ambient node) in sub-node order.
  std::vector<std::pair<NodeId, NodeId>> map;

  [[nodiscard]] std::optional<NodeId> image(NodeId sub) const {
    for (auto [a, b] : map)
      if (a == sub) return b;
    return std::nullopt;
  }
  [[nodiscard]] std::optional<NodeId> preimage(NodeId ambient) const {
    for (auto [a, b] : map)
      if (b == ambient) return a;
    return std::nullopt;
  }
};

/// Injective cover-preserving map of the whole `sub` poset into the interval
/// below `apex`, raising dimension by one and keeping degrees.
inline std::optional<ConeEmbedding> cone_embedding(const QuotientPoset& sub, const QuotientPoset& ambient,
                                                   NodeId apex) {
  require_cominuscule(sub, "cone_embedding");
  require_cominuscule(ambient, "cone_embedding");
  SubPoset s = full_subposet(sub);
  SubPoset t = lower_interval(ambient, apex);
  for (std::size_t k = 0; k < s.size(); ++k) s.weight[k] = sub.node(s.origin[k]).degree;
  for (std::size_t k = 0; k < t.size(); ++k) t.weight[k] = ambient.node(t.origin[k]).degree;
  auto phi = find_embedding(s, t, EmbeddingOptions{1, true, false, false});
  if (!phi) return std::nullopt;
  ConeEmbedding out{apex, {}};
  for (std::size_t k = 0; k < s.size(); ++k) out.map.emplace_back(s.origin[k], t.origin[(*phi)[k]]);
  return out;
}

// ---- certificates ----

struct ExceptionalCertificates {
  QuotientPoset poset;
  std::vector<std::vector<ConstructionWitness>> witnesses;

  [[nodiscard]] bool certified(NodeId id) const { return !witnesses.at(id.value).empty(); }
  [[nodiscard]] std::set<WitnessKind> kinds(NodeId id) const {
    std::set<WitnessKind> out;
    for (const auto& w : witnesses.at(id.value)) out.insert(w.kind);
    return out;
  }
};

namespace detail {

inline void add_poset_witnesses(ExceptionalCertificates& c) {
  for (const auto& node : c.poset.nodes()) {
    auto& ws = c.witnesses[node.id.value];
    if (auto w = bertini_witness(c.poset, node.id)) ws.push_back(std::move(*w));
    for (auto& w : linear_and_divisor_witness(c.poset, node.id)) ws.push_back(std::move(w));
  }
}

inline std::string dim_deg(const QuotientPoset& p, NodeId id) {
  const auto& n = p.node(id);
  return "(" + std::to_string(n.dim) + ":" + n.degree.str() + ")";
}

inline void add_cone_witnesses(ExceptionalCertificates& c, const QuotientPoset& sub, int apex_dim, int apex_degree,
                               const std::function<bool(NodeId)>& sub_flexible) {
  auto apexes = nodes_by_dim_deg(c.poset, apex_dim, apex_degree);
  if (apexes.size() != 1) throw InternalError("cone apex not unique in " + c.poset.label());
  auto emb = cone_embedding(sub, c.poset, apexes.front());
  if (!emb) throw InternalError("no cone embedding of " + sub.label() + " into " + c.poset.label());
  for (auto [v, x] : emb->map) {
    if (!sub_flexible(v)) continue;
    c.witnesses[x.value].push_back(ConstructionWitness{
        WitnessKind::Cone, ConePayload{emb->apex, sub.label(), v},
        "cone over a class of " + sub.label() + " with apex " + dim_deg(c.poset, emb->apex)});
  }
}

inline void add_tits_witnesses(ExceptionalCertificates& c, const TitsContext& ctx, const std::vector<SourcePair>& sources,
                               const std::string& route) {
  for (const auto& node : c.poset.nodes()) {
    auto found = tits_witnesses(ctx, node.id, sources);
    if (found.empty()) continue;
    const auto& f = found.front();
    const auto& src = ctx.poset_q.node(f.pair.sigma);
    c.witnesses[node.id.value].push_back(ConstructionWitness{
        WitnessKind::Tits, TitsPayload{route, ctx.p, ctx.q, f.pair.sigma, f.pair.sigma_cover, src.dim, ctx.d_tau},
        route + ": transform of a divisor pair from " + f.pair.origin});
  }
}

} // namespace detail

/// Certificates on E6/P6, computed without reference to golden data.
inline ExceptionalCertificates certify_e6() {
  const auto e6 = build_cartan(LieType::E6, 6);
  ExceptionalCertificates c{build_quotient_poset(e6, {6}), {}};
  c.witnesses.resize(c.poset.size());
  detail::add_poset_witnesses(c);

  const QuotientPoset og = isotropic_poset(IsoFamily::OG, 5);
  detail::add_cone_witnesses(c, og, 11, 12, [&](NodeId v) {
    const IsotropicIndex x = coset_to_isotropic(og, v);
    return !classify_og(x).rigid() && moduli_witness_isotropic(x).has_value();
  });

  const TitsContext q1 = build_context(e6, {6}, {1});
  detail::add_tits_witnesses(c, q1, bertini_pairs(q1.poset_q), "E6 Q={1}");

  const TitsContext q5 = build_context(e6, {6}, {5});
  const TitsContext q5_back = build_context(e6, {5}, {6});
  detail::add_tits_witnesses(c, q5, transported_pairs(q5_back, bertini_pairs(q5_back.poset_q)), "E6 Q={5}");
  return c;
}

/// The 27-node interval of E7/P1 below the transform of a point of E7/P7,
/// with its unique graded isomorphism from E6/P6.
struct CayleyInterval {
  TitsContext locate;   // P={1}, Q={7}
  SubPoset interval;
  /// iso[e6 local index] = interval local index; E6/P6 local index = node id.
  std::vector<std::size_t> iso;

  [[nodiscard]] NodeId e7p1_node(NodeId e6_node) const { return interval.origin[iso.at(e6_node.value)]; }
  [[nodiscard]] std::optional<NodeId> e6_node(NodeId e7p1) const {
    auto local = interval.local(e7p1);
    if (!local) return std::nullopt;
    for (std::size_t k = 0; k < iso.size(); ++k)
      if (iso[k] == *local) return NodeId{static_cast<std::uint32_t>(k)};
    return std::nullopt;
  }
};

inline CayleyInterval cayley_interval(const QuotientPoset& e6p6) {
  const auto e7 = build_cartan(LieType::E7, 7);
  CayleyInterval ci{build_context(e7, {1}, {7}), {}, {}};
  const NodeId apex = tits_transform(ci.locate, ci.locate.poset_q.bottom());
  ci.interval = lower_interval(ci.locate.poset_p, apex);
  if (ci.interval.size() != 27) {
    throw InternalError("Cayley-plane interval in E7/P1 has " + std::to_string(ci.interval.size()) + " nodes");
  }
  auto isos = graded_isomorphisms(full_subposet(e6p6), ci.interval, 2);
  if (isos.size() != 1) {
    throw InternalError("expected one graded isomorphism E6/P6 -> interval, found " + std::to_string(isos.size()));
  }
  ci.iso = isos.front();
  return ci;
}

inline ExceptionalCertificates certify_e7(const ExceptionalCertificates& e6) {
  const auto e7 = build_cartan(LieType::E7, 7);
  ExceptionalCertificates c{build_quotient_poset(e7, {7}), {}};
  c.witnesses.resize(c.poset.size());
  detail::add_poset_witnesses(c);

  detail::add_cone_witnesses(c, e6.poset, 17, 78, [&](NodeId v) { return e6.certified(v); });

  const TitsContext q6 = build_context(e7, {7}, {6});
  const TitsContext q6_back = build_context(e7, {6}, {7});
  detail::add_tits_witnesses(c, q6, transported_pairs(q6_back, bertini_pairs(q6_back.poset_q)), "E7 Q={6}");

  const CayleyInterval ci = cayley_interval(e6.poset);
  const TitsContext q1 = build_context(e7, {7}, {1});
  std::vector<SourcePair> pairs;
  for (const auto& node : e6.poset.nodes()) {
    if (!e6.certified(node.id)) continue;
    const std::size_t a = ci.iso[node.id.value];
    for (std::size_t b : ci.interval.upper[a])
      pairs.push_back({ci.interval.origin[a], ci.interval.origin[b], "certified class of the Cayley plane in E7/P1"});
  }
  detail::add_tits_witnesses(c, q1, pairs, "E7 Q={1}");
  return c;
}

// ---- decoration verification ----

struct DecorationEntry {
  NodeId id;
  int dim = 0;
  BigInt degree;
  Decoration decoration = Decoration::Rigid;
  std::set<WitnessKind> certified;
  bool pass = false;
  bool violation = false;
  std::string note;
};

struct DecorationReport {
  std::string label;
  std::vector<DecorationEntry> entries;

  [[nodiscard]] int rigid_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const auto& e) { return e.decoration == Decoration::Rigid; }));
  }
  [[nodiscard]] int witnessed_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.certified.empty(); }));
  }
  [[nodiscard]] int violations() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.violation; }));
  }
  [[nodiscard]] int failures() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
  }
  [[nodiscard]] bool all_pass() const { return failures() == 0 && violations() == 0; }
};

inline std::optional<WitnessKind> required_kind(Decoration d) {
  switch (d) {
  case Decoration::Plus:
    return WitnessKind::Bertini;
  case Decoration::Star:
    return WitnessKind::Cone;
  case Decoration::T:
    return WitnessKind::Tits;
  case Decoration::Rigid:
    return std::nullopt;
  }
  return std::nullopt;
}

/// Entries are ordered by dimension, then node id.
inline DecorationReport verify_decorations(const ExceptionalCertificates& certs, const ExceptionalGolden& golden) {
  const auto& p = certs.poset;
  if (golden.records.size() != p.size() || golden.label != p.datum().label())
    throw DataIntegrityError("golden data for " + golden.label + " does not describe " + p.label());
  DecorationReport r{p.label(), {}};
  std::vector<NodeId> order;
  for (const auto& n : p.nodes()) order.push_back(n.id);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return p.node(a).dim < p.node(b).dim; });
  for (NodeId id : order) {
    const auto& rec = golden.at(id);
    DecorationEntry e{id, p.node(id).dim, p.node(id).degree, rec.decoration, certs.kinds(id), false, false, rec.note};
    if (auto need = required_kind(rec.decoration)) {
      e.pass = e.certified.contains(*need);
      e.violation = e.certified.empty();
    } else {
      e.pass = e.certified.empty();
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

// ---- Cayley-plane transform table ----

struct Table1Row {
  NodeId src;  // node of E7/P1 inside the Cayley-plane interval
  NodeId src_e6;
  int src_dim = 0;
  BigInt src_degree;
  bool src_rigid = false;
  NodeId dst;  // node of E7/P7
  int dst_dim = 0;
  BigInt dst_degree;
  bool dst_rigid = false;
  bool injective = false;
};

/// Transforms of the Cayley plane's Schubert varieties from E7/P1 to E7/P7,
/// in dimension order.  Rigidity flags come from the golden data of each side.
inline std::vector<Table1Row> table1(const CayleyInterval& ci, const TitsContext& q1, const ExceptionalGolden& e6_golden,
                                     const ExceptionalGolden& e7_golden) {
  std::vector<Table1Row> rows;
  for (std::size_t e6 = 0; e6 < ci.iso.size(); ++e6) {
    const std::size_t local = ci.iso[e6];
    const NodeId y = ci.interval.origin[local];
    const NodeId t = tits_transform(q1, y);
    const auto& tn = q1.poset_p.node(t);
    const NodeId e6_id{static_cast<std::uint32_t>(e6)};
    rows.push_back({y, e6_id, ci.interval.dim[local], ci.interval.weight[local],
                    e6_golden.at(e6_id).decoration == Decoration::Rigid, t, tn.dim, tn.degree,
                    e7_golden.at(t).decoration == Decoration::Rigid, injectivity_check(q1, y)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
    return a.src_dim != b.src_dim ? a.src_dim < b.src_dim : a.src.value < b.src.value;
  });
  return rows;
}

struct Table1Entry {
  int dim = 0;
  BigInt degree;
  bool rigid = false;

  [[nodiscard]] std::string str() const { return std::to_string(dim) + ":" + degree.str() + (rigid ? "*" : ""); }
  friend bool operator==(const Table1Entry&, const Table1Entry&) = default;
};

struct Table1GoldenRow {
  Table1Entry src;
  Table1Entry dst;
  std::string note;
};

namespace detail {

inline Table1Entry parse_table1_entry(const std::string& s, const std::string& where) {
  std::string body = s;
  Table1Entry e;
  if (!body.empty() && body.back() == '*') {
    e.rigid = true;
    body.pop_back();
  }
  const auto colon = body.find(':');
  if (colon == std::string::npos) throw DataIntegrityError(where + ": expected dim:deg, got '" + s + "'");
  e.dim = static_cast<int>(parse_field_int(body.substr(0, colon), where));
  const std::string deg = body.substr(colon + 1);
  if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos)
    throw DataIntegrityError(where + ": malformed degree in '" + s + "'");
  e.degree = BigInt(deg);
  return e;
}

} // namespace detail

inline std::vector<Table1GoldenRow> parse_table1_golden(const std::vector<std::vector<std::string>>& rows,
                                                        const std::string& source) {
  std::vector<Table1GoldenRow> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& f = rows[r];
    const std::string where = source + " row " + std::to_string(r + 1);
    if (f.size() < 2 || f.size() > 3) throw DataIntegrityError(where + ": expected 2 or 3 tab-separated fields");
    out.push_back({detail::parse_table1_entry(f[0], where), detail::parse_table1_entry(f[1], where),
                   f.size() == 3 ? f[2] : ""});
  }
  if (out.size() != 27) throw DataIntegrityError(source + ": expected 27 rows, found " + std::to_string(out.size()));
  return out;
}

inline std::vector<Table1GoldenRow> load_table1_golden(const std::filesystem::path& dir = golden_dir()) {
  const auto path = dir / "table1.tsv";
  return parse_table1_golden(detail::read_tsv(path), path.string());
}

struct Table1Check {
  Table1Row row;
  std::optional<std::size_t> golden_row;
  bool pass = false;
};

/// Matches computed rows to golden rows one-to-one on (dim, degree, asterisk)
/// of both sides; a computed row also needs an injective transform.
inline std::vector<Table1Check> verify_table1(const std::vector<Table1Row>& rows,
                                             const std::vector<Table1GoldenRow>& golden) {
  std::vector<char> used(golden.size(), 0);
  std::vector<Table1Check> out;
  for (const auto& row : rows) {
    const Table1Entry src{row.src_dim, row.src_degree, row.src_rigid};
    const Table1Entry dst{row.dst_dim, row.dst_degree, row.dst_rigid};
    Table1Check c{row, std::nullopt, false};
    for (std::size_t g = 0; g < golden.size(); ++g) {
      if (used[g] || !(golden[g].src == src) || !(golden[g].dst == dst)) continue;
      used[g] = 1;
      c.golden_row = g;
      break;
    }
    c.pass = c.golden_row.has_value() && row.injective;
    out.push_back(std::move(c));
  }
  if (rows.size() != golden.size()) {
    for (auto& c : out) c.pass = false;
  }
  return out;
}

} // namespace schubert
