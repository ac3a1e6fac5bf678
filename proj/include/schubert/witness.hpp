#pragma once

// Combinatorial witnesses for the flexibility constructions: hyperplane
// sections of Schubert varieties with a single divisor class, non-maximal
// linear spaces, divisors, the quadric constructions, and the moduli
// constructions on Grassmannians and isotropic Grassmannians.

#include "schubert/classical.hpp"
#include "schubert/errors.hpp"
#include "schubert/poset.hpp"
#include "schubert/rigidity.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace schubert {

enum class WitnessKind { Bertini, LinearSpace, Divisor, QuadricExplicit, ModuliGr, ModuliIsotropic, Cone, Tits };

inline std::string to_string(WitnessKind k) {
  switch (k) {
  case WitnessKind::Bertini:
    return "Bertini";
  case WitnessKind::LinearSpace:
    return "LinearSpace";
  case WitnessKind::Divisor:
    return "Divisor";
  case WitnessKind::QuadricExplicit:
    return "QuadricExplicit";
  case WitnessKind::ModuliGr:
    return "ModuliGr";
  case WitnessKind::ModuliIsotropic:
    return "ModuliIsotropic";
  case WitnessKind::Cone:
    return "Cone";
  case WitnessKind::Tits:
    return "Tits";
  }
  return {};
}

/// Sigma' covers sigma, sigma is its only co-atom and the degrees agree.
struct BertiniPayload {
  NodeId cover;
  int cover_dim = 0;
  BigInt degree;
};

/// A linear space of one more dimension containing sigma.
struct LinearPayload {
  NodeId container;
  int dim = 0;
};

struct DivisorPayload {
  NodeId top;
  int ambient_dim = 0;
};

enum class QuadricConstruction { NonMaximalLinear, TangentSection, OddMaximalInduction };

inline std::string to_string(QuadricConstruction c) {
  switch (c) {
  case QuadricConstruction::NonMaximalLinear:
    return "non-maximal-linear";
  case QuadricConstruction::TangentSection:
    return "tangent-section";
  case QuadricConstruction::OddMaximalInduction:
    return "odd-maximal-induction";
  }
  return {};
}

struct QuadricPayload {
  QuadricConstruction construction = QuadricConstruction::NonMaximalLinear;
  /// Dimension of the linear span holding the degree-m hypersurface, or of the
  /// Schubert variety whose general hypersurface section is used.
  int ambient_dim = 0;
};

/// Case 1: a plane curve of degree m in P F_{lambda_u + 1} coned over
/// P F_{lambda_u - 2}.  Case 2 passes through Ann to a case-1 index.
struct ModuliGrPayload {
  int case_number = 1;
  int u = 0;
  std::vector<int> flag_dims;
  int vertex_dim = 0;
  /// Index that carries the case-1 construction (the input itself in case 1).
  GrIndex carrier;
  /// Class of dimension one larger that contains the construction.
  GrIndex container;
};

struct ModuliIsotropicPayload {
  /// 'a': moduli construction inside G(s,F); 'b': OG extension inside G(s+1,F);
  /// 'c': cone with vertex P F_{n-2} over a plane curve (LG only).
  char branch = 'a';
  /// Sub-case 1 or 2 for branch 'c', 0 otherwise.
  int special_case = 0;
  /// Grassmannian index inside the maximal isotropic space F (branches a, b).
  std::optional<GrIndex> inner;
  std::optional<ModuliGrPayload> inner_witness;
  /// OG only: F must be taken in the other family of maximal isotropic spaces.
  bool second_component = false;
};

struct ConePayload {
  NodeId apex;
  std::string sub_label;
  /// Node of the sub-poset mapped onto the witnessed node.
  NodeId source;
};

struct TitsPayload {
  std::string route;
  /// Parabolics of the context whose transform lands on the witnessed node.
  NodeSubset p;
  NodeSubset q;
  /// Certified pair Sigma < Sigma' in G/Q with T(Sigma) = the witnessed node.
  NodeId source;
  NodeId source_cover;
  int source_dim = 0;
  int d_tau = 0;
};

using WitnessPayload = std::variant<BertiniPayload, LinearPayload, DivisorPayload, QuadricPayload, ModuliGrPayload,
                                    ModuliIsotropicPayload, ConePayload, TitsPayload>;

struct ConstructionWitness {
  WitnessKind kind = WitnessKind::Bertini;
  WitnessPayload payload;
  std::string summary;
};

// ---- poset-level constructions ----

/// Upper covers of `id` whose only co-atom is `id`.
inline std::vector<NodeId> unique_coatom_covers(const QuotientPoset& p, NodeId id) {
  std::vector<NodeId> out;
  for (NodeId u : p.upper_covers(id))
    if (p.lower_covers(u).size() == 1) out.push_back(u);
  return out;
}

inline std::optional<ConstructionWitness> bertini_witness(const QuotientPoset& p, NodeId id) {
  require_cominuscule(p, "bertini_witness");
  const auto& node = p.node(id);
  for (NodeId u : unique_coatom_covers(p, id)) {
    const auto& cover = p.node(u);
    if (cover.dim < 2 || cover.degree != node.degree) continue;
    return ConstructionWitness{WitnessKind::Bertini, BertiniPayload{u, cover.dim, cover.degree},
                               "hyperplane section of (" + std::to_string(cover.dim) + ":" + cover.degree.str() + ")"};
  }
  return std::nullopt;
}

inline std::optional<ConstructionWitness> linear_witness(const QuotientPoset& p, NodeId id) {
  require_cominuscule(p, "linear_witness");
  const auto& node = p.node(id);
  if (node.degree != 1 || node.dim < 1) return std::nullopt;
  for (NodeId u : p.upper_covers(id))
    if (p.node(u).degree == 1) {
      return ConstructionWitness{WitnessKind::LinearSpace, LinearPayload{u, p.node(u).dim},
                                 "P^" + std::to_string(node.dim) + " inside P^" + std::to_string(p.node(u).dim)};
    }
  return std::nullopt;
}

inline std::optional<ConstructionWitness> divisor_witness(const QuotientPoset& p, NodeId id) {
  require_cominuscule(p, "divisor_witness");
  if (p.parabolic().size() != 1 || p.top_dim() < 2 || p.node(id).dim != p.top_dim() - 1) return std::nullopt;
  return ConstructionWitness{WitnessKind::Divisor, DivisorPayload{p.top(), p.top_dim()}, "Schubert divisor"};
}

/// Linear-space and divisor constructions together.
inline std::vector<ConstructionWitness> linear_and_divisor_witness(const QuotientPoset& p, NodeId id) {
  std::vector<ConstructionWitness> out;
  if (auto w = linear_witness(p, id)) out.push_back(std::move(*w));
  if (auto w = divisor_witness(p, id)) out.push_back(std::move(*w));
  return out;
}

// ---- quadrics ----

inline std::optional<ConstructionWitness> quadric_witness(const QuadricIndex& q) {
  validate(q);
  if (q.kind == QuadricKind::Linear && q.j >= 2 && 2 * q.j <= q.n) {
    return ConstructionWitness{WitnessKind::QuadricExplicit, QuadricPayload{QuadricConstruction::NonMaximalLinear, q.j},
                               "degree-m hypersurface in P L_" + std::to_string(q.j + 1)};
  }
  if (q.kind == QuadricKind::CoLinear && q.j >= 1 && 2 * q.j < q.n) {
    return ConstructionWitness{WitnessKind::QuadricExplicit,
                               QuadricPayload{QuadricConstruction::TangentSection, q.n - q.j + 1},
                               "degree-m hypersurface section of P L_" + std::to_string(q.j - 1) + "^perp in Q"};
  }
  if (q.kind == QuadricKind::Linear && q.n % 2 == 1 && q.j == (q.n + 1) / 2) {
    return ConstructionWitness{WitnessKind::QuadricExplicit,
                               QuadricPayload{QuadricConstruction::OddMaximalInduction, q.j - 1},
                               "cone over a degree-m subvariety of a smaller quadric"};
  }
  return std::nullopt;
}

// ---- Grassmannians ----

namespace detail {

/// Case-1 payload for the j-th run if it qualifies.
inline std::optional<ModuliGrPayload> gr_case1(const GrIndex& g) {
  const auto a = associated_sequence(g.lambda);
  int u = 0;
  for (int j = 1; j <= a.t(); ++j) {
    u += a.mult(j);
    if (a.mult(j) != 1 || a.mu(j) <= 0 || a.mu(j) >= g.n - g.k) continue;
    ModuliGrPayload p;
    p.case_number = 1;
    p.u = u;
    p.flag_dims = g.lambda;
    p.flag_dims[u - 1] += 1;
    p.vertex_dim = g.lambda[u - 1] - 2;
    p.carrier = g;
    p.container = GrIndex{g.k, g.n, p.flag_dims};
    const int prev = u == 1 ? 0 : g.lambda[u - 2];
    const int next = u == g.k ? g.n + 1 : g.lambda[u];
    if (!(prev + 1 < g.lambda[u - 1] && g.lambda[u - 1] < next - 1))
      throw InternalError("case-1 run of " + to_string(g) + " fails the flag-gap condition");
    return p;
  }
  return std::nullopt;
}

inline bool has_unit_gap(const GrIndex& g) {
  const auto a = associated_sequence(g.lambda);
  for (int j = 1; j < a.t(); ++j)
    if (a.mu(j + 1) - a.mu(j) == 1) return true;
  return false;
}

} // namespace detail

inline std::optional<ConstructionWitness> moduli_witness_gr(const GrIndex& g) {
  validate(g);
  if (auto p = detail::gr_case1(g)) {
    auto s = "cone over a plane curve, u=" + std::to_string(p->u);
    return ConstructionWitness{WitnessKind::ModuliGr, std::move(*p), std::move(s)};
  }
  if (detail::has_unit_gap(g)) {
    const GrIndex dualized = ann_index(g);
    auto p = detail::gr_case1(dualized);
    if (!p) throw InternalError("Ann image of " + to_string(g) + " has no case-1 run");
    p->case_number = 2;
    auto s = "via Ann: " + to_string(dualized) + ", u=" + std::to_string(p->u);
    return ConstructionWitness{WitnessKind::ModuliGr, std::move(*p), std::move(s)};
  }
  return std::nullopt;
}

/// 1 iff nu is the Poincare dual of lambda.  Dimensions must be complementary.
inline int pairing(const GrIndex& nu, const GrIndex& lambda) {
  validate(nu);
  validate(lambda);
  if (nu.k != lambda.k || nu.n != lambda.n) throw InvalidArgument("pairing needs indices on the same Grassmannian");
  if (gr_dimension(nu) + gr_dimension(lambda) != lambda.k * (lambda.n - lambda.k))
    throw InvalidArgument("pairing needs complementary dimensions");
  return nu == dual_index(lambda) ? 1 : 0;
}

// ---- isotropic Grassmannians ----

/// OG(n,2n) indices have entries at most n-1;
/// in both families the maximal isotropic space F has dimension n.
inline std::optional<ConstructionWitness> moduli_witness_isotropic(const IsotropicIndex& x) {
  validate(x);
  if (classify_isotropic(x).rigid())
    throw InvalidArgument(to_string(x) + " is multi-rigid; no flexibility witness applies");
  const int s = static_cast<int>(x.lambda.size());
  const int f = x.n;
  const bool og = x.family == IsoFamily::OG;
  const bool second = og && (s % 2) != (f % 2);

  if (s >= 1 && s < f) {
    GrIndex inner{s, f, x.lambda};
    if (!classify_gr(inner).rigid()) {
      ModuliIsotropicPayload p;
      p.branch = 'a';
      p.inner = inner;
      if (auto w = moduli_witness_gr(inner)) p.inner_witness = std::get<ModuliGrPayload>(w->payload);
      p.second_component = second;
      return ConstructionWitness{WitnessKind::ModuliIsotropic, std::move(p),
                                 "obstructed in G(" + std::to_string(s) + ",F): " + to_string(inner)};
    }
  }
  if (og && s >= 1 && x.lambda.back() == f - 2) {
    GrIndex ext{s + 1, f, x.lambda};
    ext.lambda.push_back(f);
    if (ext.k < ext.n && !classify_gr(ext).rigid()) {
      ModuliIsotropicPayload p;
      p.branch = 'b';
      p.inner = ext;
      if (auto w = moduli_witness_gr(ext)) p.inner_witness = std::get<ModuliGrPayload>(w->payload);
      p.second_component = (s % 2) == (f % 2);
      return ConstructionWitness{WitnessKind::ModuliIsotropic, std::move(p),
                                 "extended index " + to_string(ext) + " in G(" + std::to_string(s + 1) + ",F)"};
    }
  }
  if (!og && s >= 1) {
    const auto a = associated_sequence(x.lambda);
    int sub = 0;
    if (a.mu(a.t()) == x.n - s && a.mult(a.t()) == 1) sub = 1;
    else if (x.lambda.back() == x.n - 1) sub = 2;
    if (sub) {
      ModuliIsotropicPayload p;
      p.branch = 'c';
      p.special_case = sub;
      return ConstructionWitness{WitnessKind::ModuliIsotropic, std::move(p),
                                 "cone with vertex P F_" + std::to_string(x.n - 2) + " over a plane curve"};
    }
  }
  return std::nullopt;
}

} // namespace schubert
