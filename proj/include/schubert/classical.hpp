#pragma once

// Classical Schubert indices and their translation to coset nodes.
//
//   G(k,n)     = A_{n-1}/P_k   lambda = positions of the 1s in the 0/1 vector w^{-1} omega_k
//   LG(n,2n)   = C_n/P_n       lambda = positions of the + signs in w^{-1} omega_n
//   OG(n,2n)   = D_n/P_n       lambda = positions of the + signs among 1..n-1 (n >= 3)
//   Q^{2m-1}   = B_m/P_1,  Q^{2m-2} = D_m/P_1   nodes are +-e_i
//
// Quadric classes: Linear(j) is e_j, CoLinear(j) is -e_{j+1}, and for even n
// MaxLinear(plus) is e_m and MaxLinear(minus) is -e_m.
//
// Weights are converted to epsilon coordinates doubled, so spin weights stay integral.

#include "schubert/errors.hpp"
#include "schubert/lattice.hpp"
#include "schubert/poset.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

struct GrIndex {
  int k = 0;
  int n = 0;
  std::vector<int> lambda;

  friend bool operator==(const GrIndex&, const GrIndex&) = default;
};

/// Runs (mu_j, i_j) of the shifted sequence lambda_i - i.
struct AssociatedSequence {
  std::vector<std::pair<int, int>> pairs;

  [[nodiscard]] int t() const { return static_cast<int>(pairs.size()); }
  /// 1-based accessors mu_j and i_j.
  [[nodiscard]] int mu(int j) const { return pairs.at(j - 1).first; }
  [[nodiscard]] int mult(int j) const { return pairs.at(j - 1).second; }

  friend bool operator==(const AssociatedSequence&, const AssociatedSequence&) = default;
};

enum class IsoFamily { LG, OG };

/// LG: lambda in [1,n], s <= n.  OG (for OG(n,2n)): lambda in [1,n-1], s <= n-1.
struct IsotropicIndex {
  IsoFamily family = IsoFamily::LG;
  int n = 0;
  std::vector<int> lambda;

  friend bool operator==(const IsotropicIndex&, const IsotropicIndex&) = default;
};

enum class QuadricKind { Linear, CoLinear, MaxLinear };
enum class Component { Plus, Minus };

struct QuadricIndex {
  int n = 0;
  QuadricKind kind = QuadricKind::Linear;
  int j = 0;
  Component component = Component::Plus;

  friend bool operator==(const QuadricIndex&, const QuadricIndex&) = default;
};

inline std::string to_string(IsoFamily f) { return f == IsoFamily::LG ? "lg" : "og"; }

inline std::string format_sequence(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

inline std::string to_string(const GrIndex& g) {
  return "gr:" + std::to_string(g.k) + "," + std::to_string(g.n) + ":" + format_sequence(g.lambda);
}

inline std::string to_string(const IsotropicIndex& x) {
  return to_string(x.family) + ":" + std::to_string(x.n) + ":" + format_sequence(x.lambda);
}

inline std::string class_token(const QuadricIndex& q) {
  switch (q.kind) {
  case QuadricKind::Linear:
    return "linear-" + std::to_string(q.j);
  case QuadricKind::CoLinear:
    return "colinear-" + std::to_string(q.j);
  case QuadricKind::MaxLinear:
    return q.component == Component::Plus ? "max-plus" : "max-minus";
  }
  return {};
}

inline std::string to_string(const QuadricIndex& q) { return "quad:" + std::to_string(q.n) + ":" + class_token(q); }

namespace detail {

inline void require_increasing(const std::vector<int>& v, const std::string& what) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) throw InvalidArgument(what + ": sequence " + format_sequence(v) + " is not strictly increasing");
}

inline void require_range(const std::vector<int>& v, int lo, int hi, const std::string& what) {
  for (int x : v)
    if (x < lo || x > hi) {
      throw InvalidArgument(what + ": entry " + std::to_string(x) + " outside [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]");
    }
}

} // namespace detail

inline void validate(const GrIndex& g) {
  if (g.k < 1 || g.n <= g.k) throw InvalidArgument("G(k,n) needs 0 < k < n");
  if (static_cast<int>(g.lambda.size()) != g.k) {
    throw InvalidArgument("G(" + std::to_string(g.k) + "," + std::to_string(g.n) + ") index needs " +
                          std::to_string(g.k) + " entries");
  }
  detail::require_increasing(g.lambda, "Grassmannian index");
  detail::require_range(g.lambda, 1, g.n, "Grassmannian index");
}

inline void validate(const IsotropicIndex& x) {
  if (x.n < 1) throw InvalidArgument("isotropic Grassmannian needs n >= 1");
  const int hi = x.family == IsoFamily::LG ? x.n : x.n - 1;
  detail::require_increasing(x.lambda, "isotropic index");
  detail::require_range(x.lambda, 1, hi, "isotropic index");
}

inline int quadric_max_linear(int n) { return n % 2 ? (n + 1) / 2 : n / 2; }

inline void validate(const QuadricIndex& q) {
  if (q.n < 2) throw InvalidArgument("quadric Q^n needs n >= 2");
  const bool odd = q.n % 2 == 1;
  switch (q.kind) {
  case QuadricKind::Linear:
    if (q.j < 1 || q.j > quadric_max_linear(q.n))
      throw InvalidArgument("linear-" + std::to_string(q.j) + " is out of range for Q^" + std::to_string(q.n));
    return;
  case QuadricKind::CoLinear:
    if (q.j < 0 || q.j > (odd ? (q.n - 1) / 2 : q.n / 2 - 1))
      throw InvalidArgument("colinear-" + std::to_string(q.j) + " is out of range for Q^" + std::to_string(q.n));
    return;
  case QuadricKind::MaxLinear:
    if (odd) throw InvalidArgument("max-plus/max-minus exist only for even-dimensional quadrics");
    return;
  }
}

inline GrIndex make_gr(int k, int n, std::vector<int> lambda) {
  GrIndex g{k, n, std::move(lambda)};
  validate(g);
  return g;
}

inline IsotropicIndex make_isotropic(IsoFamily f, int n, std::vector<int> lambda) {
  IsotropicIndex x{f, n, std::move(lambda)};
  validate(x);
  return x;
}

inline AssociatedSequence associated_sequence(const std::vector<int>& lambda) {
  detail::require_increasing(lambda, "associated_sequence");
  AssociatedSequence a;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int shifted = lambda[i] - static_cast<int>(i + 1);
    if (!a.pairs.empty() && a.pairs.back().first == shifted) ++a.pairs.back().second;
    else a.pairs.emplace_back(shifted, 1);
  }
  return a;
}

inline std::vector<int> sequence_from_associated(const AssociatedSequence& a) {
  std::vector<int> out;
  int prev = -1;
  for (auto [mu, mult] : a.pairs) {
    if (mu <= prev || mu < 0 || mult < 1) throw InvalidArgument("associated sequence must have increasing mu >= 0");
    prev = mu;
    for (int r = 0; r < mult; ++r) out.push_back(mu + static_cast<int>(out.size()) + 1);
  }
  return out;
}

inline int gr_dimension(const GrIndex& g) {
  validate(g);
  int d = 0;
  for (int i = 0; i < g.k; ++i) d += g.lambda[i] - (i + 1);
  return d;
}

inline int lg_dimension(const IsotropicIndex& x) {
  validate(x);
  int d = x.n * (x.n + 1) / 2;
  for (int v : x.lambda) d -= x.n + 1 - v;
  return d;
}

inline int og_dimension(const IsotropicIndex& x) {
  validate(x);
  int d = x.n * (x.n - 1) / 2;
  for (int v : x.lambda) d -= x.n - v;
  return d;
}

inline int isotropic_dimension(const IsotropicIndex& x) {
  return x.family == IsoFamily::LG ? lg_dimension(x) : og_dimension(x);
}

inline int quadric_dimension(const QuadricIndex& q) {
  validate(q);
  switch (q.kind) {
  case QuadricKind::Linear:
    return q.j - 1;
  case QuadricKind::CoLinear:
    return q.n - q.j;
  case QuadricKind::MaxLinear:
    return q.n / 2;
  }
  return 0;
}

inline int quadric_degree(const QuadricIndex& q) {
  validate(q);
  return q.kind == QuadricKind::CoLinear ? 2 : 1;
}

inline GrIndex dual_index(const GrIndex& g) {
  validate(g);
  GrIndex out{g.k, g.n, std::vector<int>(g.k)};
  for (int i = 0; i < g.k; ++i) out.lambda[i] = g.n - g.lambda[g.k - 1 - i] + 1;
  return out;
}

/// Index of the image class under W -> Ann(W), G(k,n) -> G(n-k,n).
inline GrIndex ann_index(const GrIndex& g) {
  validate(g);
  GrIndex out{g.n - g.k, g.n, {}};
  for (int x = 1; x <= g.n; ++x)
    if (!std::binary_search(g.lambda.begin(), g.lambda.end(), x)) out.lambda.push_back(g.n + 1 - x);
  std::sort(out.lambda.begin(), out.lambda.end());
  return out;
}

inline std::vector<QuadricIndex> quadric_classes(int n) {
  if (n < 2) throw InvalidArgument("quadric Q^n needs n >= 2");
  std::vector<QuadricIndex> out;
  for (int j = 1; j <= quadric_max_linear(n); ++j) out.push_back({n, QuadricKind::Linear, j, Component::Plus});
  if (n % 2 == 0) {
    out.push_back({n, QuadricKind::MaxLinear, 0, Component::Plus});
    out.push_back({n, QuadricKind::MaxLinear, 0, Component::Minus});
  }
  const int top = n % 2 ? (n - 1) / 2 : n / 2 - 1;
  for (int j = 0; j <= top; ++j) out.push_back({n, QuadricKind::CoLinear, j, Component::Plus});
  return out;
}

/// All k-subsets of [1,n] in lexicographic order.
inline std::vector<GrIndex> all_gr_indices(int k, int n) {
  std::vector<GrIndex> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(GrIndex{k, n, cur});
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int r = i + 1; r < k; ++r) cur[r] = cur[r - 1] + 1;
  }
  return out;
}

/// All valid isotropic indices, including the empty one.
inline std::vector<IsotropicIndex> all_isotropic_indices(IsoFamily f, int n) {
  const int hi = f == IsoFamily::LG ? n : n - 1;
  std::vector<IsotropicIndex> out;
  for (int mask = 0; mask < (1 << std::max(hi, 0)); ++mask) {
    IsotropicIndex x{f, n, {}};
    for (int v = 1; v <= hi; ++v)
      if (mask & (1 << (v - 1))) x.lambda.push_back(v);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const IsotropicIndex& a, const IsotropicIndex& b) {
    return a.lambda.size() != b.lambda.size() ? a.lambda.size() < b.lambda.size() : a.lambda < b.lambda;
  });
  return out;
}

// ---- coset translation ----

/// Weight in epsilon coordinates, doubled.
inline std::vector<int> epsilon2(const CartanDatum& d, const Weight& f) {
  const int n = d.rank();
  const auto& c = f.coords;
  switch (d.type()) {
  case LieType::A: {
    std::vector<int> x(n + 1, 0);
    for (int j = n - 1; j >= 0; --j) x[j] = x[j + 1] + 2 * c[j];
    // defined up to a common shift; take the representative with minimum 0
    const int lo = *std::min_element(x.begin(), x.end());
    for (auto& v : x) v -= lo;
    return x;
  }
  case LieType::B: {
    std::vector<int> x(n, 0);
    x[n - 1] = c[n - 1];
    for (int j = n - 2; j >= 0; --j) x[j] = x[j + 1] + 2 * c[j];
    return x;
  }
  case LieType::C: {
    std::vector<int> x(n, 0);
    x[n - 1] = 2 * c[n - 1];
    for (int j = n - 2; j >= 0; --j) x[j] = x[j + 1] + 2 * c[j];
    return x;
  }
  case LieType::D: {
    std::vector<int> x(n, 0);
    x[n - 1] = c[n - 1] - c[n - 2];
    x[n - 2] = c[n - 1] + c[n - 2];
    for (int j = n - 3; j >= 0; --j) x[j] = x[j + 1] + 2 * c[j];
    return x;
  }
  default:
    throw InvalidArgument("epsilon coordinates are defined for classical types only");
  }
}

inline Weight from_epsilon2(const CartanDatum& d, const std::vector<int>& x) {
  const int n = d.rank();
  Weight f{std::vector<int>(n, 0)};
  auto half = [](int v) {
    if (v % 2 != 0) throw InvalidArgument("epsilon vector is not in the weight lattice");
    return v / 2;
  };
  switch (d.type()) {
  case LieType::A:
    if (static_cast<int>(x.size()) != n + 1) throw InvalidArgument("epsilon vector has wrong length");
    for (int i = 0; i < n; ++i) f.coords[i] = half(x[i] - x[i + 1]);
    return f;
  case LieType::B:
    for (int i = 0; i + 1 < n; ++i) f.coords[i] = half(x[i] - x[i + 1]);
    f.coords[n - 1] = x[n - 1];
    return f;
  case LieType::C:
    for (int i = 0; i + 1 < n; ++i) f.coords[i] = half(x[i] - x[i + 1]);
    f.coords[n - 1] = half(x[n - 1]);
    return f;
  case LieType::D:
    for (int i = 0; i + 1 < n; ++i) f.coords[i] = half(x[i] - x[i + 1]);
    f.coords[n - 1] = half(x[n - 2] + x[n - 1]);
    return f;
  default:
    throw InvalidArgument("epsilon coordinates are defined for classical types only");
  }
}

namespace detail {

inline void require_poset(const QuotientPoset& p, LieType t, int rank, int node, const std::string& what) {
  if (p.datum().type() != t || p.datum().rank() != rank || p.parabolic() != NodeSubset{node}) {
    throw InvalidArgument(what + " does not match poset " + p.label());
  }
}

inline NodeId lookup(const QuotientPoset& p, const Weight& f) {
  auto id = p.find(f);
  if (!id) throw InternalError("index translated to a weight outside the orbit of " + p.label());
  return *id;
}

} // namespace detail

inline QuotientPoset gr_poset(int k, int n) {
  if (k < 1 || n <= k) throw InvalidArgument("G(k,n) needs 0 < k < n");
  return build_quotient_poset(build_cartan(LieType::A, n - 1), {k});
}

inline NodeId gr_to_coset(const QuotientPoset& p, const GrIndex& g) {
  validate(g);
  detail::require_poset(p, LieType::A, g.n - 1, g.k, "G(" + std::to_string(g.k) + "," + std::to_string(g.n) + ")");
  std::vector<int> x(g.n, 0);
  for (int v : g.lambda) x[v - 1] = 2;
  return detail::lookup(p, from_epsilon2(p.datum(), x));
}

inline GrIndex coset_to_gr(const QuotientPoset& p, NodeId id) {
  if (p.datum().type() != LieType::A || p.parabolic().size() != 1)
    throw InvalidArgument(p.label() + " is not a Grassmannian quotient");
  const auto x = epsilon2(p.datum(), p.node(id).fingerprint);
  GrIndex g{p.parabolic().front(), p.datum().rank() + 1, {}};
  for (int j = 0; j < g.n; ++j)
    if (x[j] == 2) g.lambda.push_back(j + 1);
  validate(g);
  return g;
}

inline QuotientPoset isotropic_poset(IsoFamily f, int n) {
  if (f == IsoFamily::LG) {
    if (n < 2) throw InvalidArgument("LG(n,2n) posets need n >= 2");
    return build_quotient_poset(build_cartan(LieType::C, n), {n});
  }
  if (n < 3) throw InvalidArgument("OG(n,2n) posets need n >= 3");
  return build_quotient_poset(build_cartan(LieType::D, n), {n});
}

inline NodeId isotropic_to_coset(const QuotientPoset& p, const IsotropicIndex& x) {
  validate(x);
  if (x.family == IsoFamily::LG) {
    detail::require_poset(p, LieType::C, x.n, x.n, "LG(" + std::to_string(x.n) + ")");
    std::vector<int> e(x.n, -2);
    for (int v : x.lambda) e[v - 1] = 2;
    return detail::lookup(p, from_epsilon2(p.datum(), e));
  }
  detail::require_poset(p, LieType::D, x.n, x.n, "OG(" + std::to_string(x.n) + ")");
  std::vector<int> e(x.n, -1);
  for (int v : x.lambda) e[v - 1] = 1;
  const auto minus = std::count(e.begin(), e.end() - 1, -1);
  e[x.n - 1] = minus % 2 ? -1 : 1;
  return detail::lookup(p, from_epsilon2(p.datum(), e));
}

inline IsotropicIndex coset_to_isotropic(const QuotientPoset& p, NodeId id) {
  const auto& d = p.datum();
  const int n = d.rank();
  if (p.parabolic() != NodeSubset{n} || (d.type() != LieType::C && d.type() != LieType::D))
    throw InvalidArgument(p.label() + " is not an isotropic Grassmannian quotient");
  const auto e = epsilon2(d, p.node(id).fingerprint);
  IsotropicIndex x{d.type() == LieType::C ? IsoFamily::LG : IsoFamily::OG, n, {}};
  const int last = x.family == IsoFamily::LG ? n : n - 1;
  for (int j = 0; j < last; ++j)
    if (e[j] > 0) x.lambda.push_back(j + 1);
  return x;
}

/// Poset of Q^n: B_m/P_1 for n = 2m-1, D_m/P_1 for n = 2m-2 (n >= 3).
inline QuotientPoset quadric_poset(int n) {
  if (n < 3) throw InvalidArgument("quadric posets need n >= 3");
  if (n % 2) return build_quotient_poset(build_cartan(LieType::B, (n + 1) / 2), {1});
  return build_quotient_poset(build_cartan(LieType::D, n / 2 + 1), {1});
}

inline NodeId quadric_to_coset(const QuotientPoset& p, const QuadricIndex& q) {
  validate(q);
  const int m = q.n % 2 ? (q.n + 1) / 2 : q.n / 2 + 1;
  detail::require_poset(p, q.n % 2 ? LieType::B : LieType::D, m, 1, "Q^" + std::to_string(q.n));
  std::vector<int> e(m, 0);
  switch (q.kind) {
  case QuadricKind::Linear:
    e[q.j - 1] = 2;
    break;
  case QuadricKind::CoLinear:
    e[q.j] = -2;
    break;
  case QuadricKind::MaxLinear:
    e[m - 1] = q.component == Component::Plus ? 2 : -2;
    break;
  }
  return detail::lookup(p, from_epsilon2(p.datum(), e));
}

inline QuadricIndex coset_to_quadric(const QuotientPoset& p, NodeId id) {
  const auto& d = p.datum();
  if (p.parabolic() != NodeSubset{1} || (d.type() != LieType::B && d.type() != LieType::D))
    throw InvalidArgument(p.label() + " is not a quadric quotient");
  const int m = d.rank();
  const int n = d.type() == LieType::B ? 2 * m - 1 : 2 * m - 2;
  const auto e = epsilon2(d, p.node(id).fingerprint);
  for (int j = 0; j < m; ++j) {
    if (e[j] == 0) continue;
    const bool plus = e[j] > 0;
    if (d.type() == LieType::D && j == m - 1)
      return {n, QuadricKind::MaxLinear, 0, plus ? Component::Plus : Component::Minus};
    if (plus) return {n, QuadricKind::Linear, j + 1, Component::Plus};
    return {n, QuadricKind::CoLinear, j, Component::Plus};
  }
  throw InternalError("zero weight in quadric orbit");
}

// ---- text syntax ----

namespace detail {

inline int parse_int(std::string_view s, const std::string& context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("malformed integer '" + std::string(s) + "' in " + context);
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

} // namespace detail

/// "2,4,6"; "-" or "" for the empty sequence.
inline std::vector<int> parse_sequence(std::string_view s) {
  if (s.empty() || s == "-") return {};
  std::vector<int> out;
  for (auto part : detail::split(s, ',')) out.push_back(detail::parse_int(part, "sequence '" + std::string(s) + "'"));
  return out;
}

inline QuadricIndex parse_quadric_class(int n, std::string_view token) {
  QuadricIndex q{n, QuadricKind::Linear, 0, Component::Plus};
  const std::string t(token);
  if (t == "max-plus") q.kind = QuadricKind::MaxLinear;
  else if (t == "max-minus") {
    q.kind = QuadricKind::MaxLinear;
    q.component = Component::Minus;
  } else if (t.rfind("linear-", 0) == 0) {
    q.j = detail::parse_int(std::string_view(t).substr(7), "quadric class '" + t + "'");
  } else if (t.rfind("colinear-", 0) == 0) {
    q.kind = QuadricKind::CoLinear;
    q.j = detail::parse_int(std::string_view(t).substr(9), "quadric class '" + t + "'");
  } else {
    throw InvalidArgument("unknown quadric class '" + t + "' (expected linear-j, colinear-j, max-plus, max-minus)");
  }
  validate(q);
  return q;
}

} // namespace schubert
