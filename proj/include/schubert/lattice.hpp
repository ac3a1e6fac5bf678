#pragma once

// Root systems, weights and Weyl words in exact integer arithmetic.
//
// Dynkin nodes use Bourbaki numbering throughout:
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n        (alpha_n short)
//   C_n   1 - 2 - ... - (n-1) <= n        (alpha_n long)
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                          \ - n
//   E6    1 - 3 - 4 - 5 - 6,  2 - 4
//   E7    1 - 3 - 4 - 5 - 6 - 7,  2 - 4
//
// Weights are stored in fundamental-weight coordinates.  Row i of the Cartan
// matrix is alpha_i written in fundamental weights, i.e. entry (i, j) is
// <alpha_i, alpha_j^vee>, so the simple reflection is
//   s_i(v) = v - v_i * row_i.
// Roots are stored in simple-root coordinates, coroots in simple-coroot
// coordinates.

#include "schubert/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace schubert {

enum class LieType { A, B, C, D, E6, E7 };

inline std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
  }
  return "?";
}

struct Weight {
  std::vector<int> coords;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Word in simple reflections, letters 1-based.  Not necessarily reduced.
struct WeylWord {
  std::vector<int> letters;

  [[nodiscard]] std::size_t size() const { return letters.size(); }
  [[nodiscard]] bool empty() const { return letters.empty(); }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

inline WeylWord concat(const WeylWord& a, const WeylWord& b) {
  WeylWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

/// Word for the inverse element.
inline WeylWord inverse(const WeylWord& w) {
  WeylWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

/// Sorted set of 1-based Dynkin node indices.
using NodeSubset = std::vector<int>;

class CartanDatum {
public:
  [[nodiscard]] LieType type() const { return type_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  [[nodiscard]] int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  /// Positive roots in simple-root coordinates, ordered by height.
  [[nodiscard]] const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  /// Coroot of positive_roots()[k], in simple-coroot coordinates.
  [[nodiscard]] const std::vector<std::vector<int>>& positive_coroots() const { return coroots_; }

  /// "E6", "A3", ...
  [[nodiscard]] std::string label() const {
    if (type_ == LieType::E6 || type_ == LieType::E7) return to_string(type_);
    return to_string(type_) + std::to_string(rank_);
  }

  friend CartanDatum build_cartan(LieType type, int rank);

private:
  LieType type_ = LieType::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
};

namespace detail {

inline std::size_t expected_root_count(LieType t, int n) {
  switch (t) {
    case LieType::A: return static_cast<std::size_t>(n * (n + 1) / 2);
    case LieType::B:
    case LieType::C: return static_cast<std::size_t>(n * n);
    case LieType::D: return static_cast<std::size_t>(n * (n - 1));
    case LieType::E6: return 36;
    case LieType::E7: return 63;
  }
  return 0;
}

inline void validate_type_rank(LieType t, int n) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = n >= 1; break;
    case LieType::B:
    case LieType::C: ok = n >= 2; break;
    case LieType::D: ok = n >= 3; break;
    case LieType::E6: ok = n == 6; break;
    case LieType::E7: ok = n == 7; break;
  }
  if (!ok) {
    throw InvalidArgument("invalid type/rank pair: " + to_string(t) + " with rank " + std::to_string(n));
  }
}

} // namespace detail

/// Cartan datum with positive roots generated by string closure from the
/// simple roots.  The root count is checked against the classification.
inline CartanDatum build_cartan(LieType type, int rank) {
  detail::validate_type_rank(type, rank);
  const int n = rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  // squared lengths of simple roots, up to a common factor
  std::vector<int> norm(n, 2);
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto bond = [&m](int i, int j) {
    m[i - 1][j - 1] = -1;
    m[j - 1][i - 1] = -1;
  };

  switch (type) {
    case LieType::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      m[n - 2][n - 1] = -2;
      m[n - 1][n - 2] = -1;
      norm[n - 1] = 1;
      break;
    case LieType::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      m[n - 2][n - 1] = -1;
      m[n - 1][n - 2] = -2;
      std::fill(norm.begin(), norm.end(), 1);
      norm[n - 1] = 2;
      break;
    case LieType::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case LieType::E6:
    case LieType::E7:
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(5, 6);
      bond(2, 4);
      if (type == LieType::E7) bond(6, 7);
      break;
  }

  // gram[i][j] = 2 (alpha_i, alpha_j) in the chosen scale
  std::vector<std::vector<int>> gram(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = m[i][j] * norm[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw InternalError("Cartan matrix is not symmetrizable with the chosen norms");

  auto pair_with_simple_coroot = [&](const std::vector<int>& c, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s = detail::checked_add(s, detail::checked_mul(c[j], m[j][i]));
    return s;
  };

  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, std::size_t> index;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    index.emplace(e, roots.size());
    roots.push_back(std::move(e));
  }
  // roots are appended in nondecreasing height, so every beta - k alpha_i
  // has been seen before beta is processed
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const std::vector<int> beta = roots[k];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        if (!index.contains(down)) break;
        ++p;
      }
      const int q = p - pair_with_simple_coroot(beta, i);
      if (q > 0) {
        std::vector<int> up = beta;
        up[i] = detail::checked_add(up[i], 1);
        if (!index.contains(up)) {
          index.emplace(up, roots.size());
          roots.push_back(std::move(up));
        }
      }
    }
  }
  if (roots.size() != detail::expected_root_count(type, n)) {
    throw InternalError("root closure produced " + std::to_string(roots.size()) + " positive roots for " +
                        to_string(type) + std::to_string(n));
  }

  std::vector<std::vector<int>> coroots;
  coroots.reserve(roots.size());
  for (const auto& c : roots) {
    int two_norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        two_norm = detail::checked_add(two_norm, detail::checked_mul(detail::checked_mul(c[i], c[j]), gram[i][j]));
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i) {
      const int num = detail::checked_mul(c[i], gram[i][i]);
      if (num % two_norm != 0) throw InternalError("non-integral coroot");
      d[i] = num / two_norm;
    }
    coroots.push_back(std::move(d));
  }

  CartanDatum out;
  out.type_ = type;
  out.rank_ = n;
  out.cartan_ = std::move(m);
  out.roots_ = std::move(roots);
  out.coroots_ = std::move(coroots);
  return out;
}

namespace detail {

inline void check_letter(const CartanDatum& d, int i) {
  if (i < 1 || i > d.rank()) {
    throw InvalidArgument("simple reflection index " + std::to_string(i) + " out of range [1, " +
                          std::to_string(d.rank()) + "]");
  }
}

inline void check_weight(const CartanDatum& d, const Weight& v) {
  if (static_cast<int>(v.coords.size()) != d.rank()) {
    throw InvalidArgument("weight has " + std::to_string(v.coords.size()) + " coordinates, rank is " +
                          std::to_string(d.rank()));
  }
}

inline void reflect_in_place(const CartanDatum& d, int i, std::vector<int>& v) {
  const int c = v[i - 1];
  if (c == 0) return;
  const auto& row = d.cartan_matrix()[i - 1];
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_sub(v[j], checked_mul(c, row[j]));
}

} // namespace detail

inline Weight reflect(const CartanDatum& d, int i, const Weight& v) {
  detail::check_letter(d, i);
  detail::check_weight(d, v);
  Weight out = v;
  detail::reflect_in_place(d, i, out.coords);
  return out;
}

/// Action of the element spelled by `word`; the rightmost letter acts first.
inline Weight act(const CartanDatum& d, const WeylWord& word, const Weight& v) {
  detail::check_weight(d, v);
  for (int i : word.letters) detail::check_letter(d, i);
  Weight out = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) detail::reflect_in_place(d, *it, out.coords);
  return out;
}

/// <v, beta^vee> for the k-th positive root.
inline int coroot_pairing(const CartanDatum& d, const Weight& v, std::size_t k) {
  const auto& co = d.positive_coroots()[k];
  int s = 0;
  for (std::size_t i = 0; i < co.size(); ++i) s = detail::checked_add(s, detail::checked_mul(v.coords[i], co[i]));
  return s;
}

/// Number of positive roots pairing negatively with v.  For v = u(lambda),
/// lambda dominant, this is the length of the shortest element of u W_lambda.
inline int negative_root_count(const CartanDatum& d, const Weight& v) {
  int count = 0;
  for (std::size_t k = 0; k < d.positive_roots().size(); ++k)
    if (coroot_pairing(d, v, k) < 0) ++count;
  return count;
}

/// The strictly dominant weight used as a fingerprint for group elements.
inline Weight rho(const CartanDatum& d) { return Weight{std::vector<int>(d.rank(), 1)}; }

inline Weight fundamental_weight_sum(const CartanDatum& d, const NodeSubset& nodes) {
  Weight w{std::vector<int>(d.rank(), 0)};
  for (int i : nodes) {
    detail::check_letter(d, i);
    w.coords[i - 1] = 1;
  }
  return w;
}

/// Elements are equal iff they move rho to the same place.
inline bool same_element(const CartanDatum& d, const WeylWord& a, const WeylWord& b) {
  return act(d, a, rho(d)) == act(d, b, rho(d));
}

/// Inversion count of the element spelled by `word`.
inline int length(const CartanDatum& d, const WeylWord& word) {
  return negative_root_count(d, act(d, word, rho(d)));
}

inline bool is_reduced(const CartanDatum& d, const WeylWord& word) {
  return length(d, word) == static_cast<int>(word.size());
}

inline NodeSubset normalize_subset(const CartanDatum& d, NodeSubset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s) detail::check_letter(d, i);
  return s;
}

inline NodeSubset complement(const CartanDatum& d, const NodeSubset& s) {
  NodeSubset out;
  for (int i = 1; i <= d.rank(); ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

/// Positive roots whose support lies inside `s`: the positive roots of the
/// Levi subsystem generated by `s`.
inline int supported_root_count(const CartanDatum& d, const NodeSubset& s) {
  int count = 0;
  for (const auto& r : d.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < d.rank(); ++i)
      if (r[i] != 0 && !std::binary_search(s.begin(), s.end(), i + 1)) {
        inside = false;
        break;
      }
    if (inside) ++count;
  }
  return count;
}

/// Dimension of G/P_I where the marked nodes I generate the unipotent radical.
inline int homogeneous_dimension(const CartanDatum& d, const NodeSubset& marked) {
  const NodeSubset m = normalize_subset(d, marked);
  return static_cast<int>(d.positive_roots().size()) - supported_root_count(d, complement(d, m));
}

/// Reduced word for the longest element of the parabolic subgroup generated
/// by {s_i : i in s}, built by appending length-increasing generators.
inline WeylWord longest_element(const CartanDatum& d, const NodeSubset& s) {
  if (s.empty()) throw InvalidArgument("longest_element needs a nonempty node set");
  const NodeSubset nodes = normalize_subset(d, s);
  WeylWord w;
  // g = w^{-1} rho; appending i raises the length iff g_i > 0
  Weight g = rho(d);
  while (true) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&g](int i) { return g.coords[i - 1] > 0; });
    if (it == nodes.end()) break;
    w.letters.push_back(*it);
    detail::reflect_in_place(d, *it, g.coords);
  }
  return w;
}

} // namespace schubert

template <>
struct std::hash<schubert::Weight> {
  std::size_t operator()(const schubert::Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int c : w.coords) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
