#pragma once

// Graded embeddings between sub-posets, found by backtracking one dimension
// layer at a time.  Layers in the posets of interest hold at most three
// nodes, so the search is tiny.

#include "schubert/poset.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace schubert {

struct EmbeddingOptions {
  /// dim(phi(v)) = dim(v) + dim_shift.
  int dim_shift = 0;
  /// Require weight(phi(v)) = weight(v).
  bool match_weights = true;
  /// Also require non-covers to map to non-covers between adjacent layers.
  bool reflect_covers = false;
  /// Require the image to be all of the target.
  bool surjective = false;
};

/// All maps from local indices of `sub` to local indices of `target` meeting
/// `opts` that send covers to covers, in lexicographic order of images.
/// Stops after `limit` solutions.
inline std::vector<std::vector<std::size_t>> find_embeddings(const SubPoset& sub, const SubPoset& target,
                                                             const EmbeddingOptions& opts, std::size_t limit = 1) {
  const std::size_t n = sub.size();
  std::vector<std::vector<std::size_t>> solutions;
  if (opts.surjective && n != target.size()) return solutions;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sub.dim[a] < sub.dim[b]; });

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < target.size(); ++x) {
      if (target.dim[x] != sub.dim[v] + opts.dim_shift) continue;
      if (opts.match_weights && target.weight[x] != sub.weight[v]) continue;
      candidates[v].push_back(x);
    }

  const std::size_t none = target.size();
  std::vector<std::size_t> phi(n, none);
  std::vector<char> used(target.size(), 0);
  auto covers = [&](std::size_t lo, std::size_t hi) {
    const auto& ups = target.upper[lo];
    return std::find(ups.begin(), ups.end(), hi) != ups.end();
  };

  std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (solutions.size() >= limit) return;
    if (pos == n) {
      solutions.push_back(phi);
      return;
    }
    const std::size_t v = order[pos];
    for (std::size_t x : candidates[v]) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t u : sub.lower[v])
        if (phi[u] == none || !covers(phi[u], x)) {
          ok = false;
          break;
        }
      if (ok && opts.reflect_covers) {
        for (std::size_t u = 0; u < n && ok; ++u) {
          if (phi[u] == none || sub.dim[u] + 1 != sub.dim[v]) continue;
          const bool sub_cover = std::find(sub.lower[v].begin(), sub.lower[v].end(), u) != sub.lower[v].end();
          if (!sub_cover && covers(phi[u], x)) ok = false;
        }
      }
      if (!ok) continue;
      phi[v] = x;
      used[x] = 1;
      search(pos + 1);
      used[x] = 0;
      phi[v] = none;
      if (solutions.size() >= limit) return;
    }
  };
  search(0);
  return solutions;
}

inline std::optional<std::vector<std::size_t>> find_embedding(const SubPoset& sub, const SubPoset& target,
                                                              const EmbeddingOptions& opts) {
  auto all = find_embeddings(sub, target, opts, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Graded isomorphisms preserving weights.
inline std::vector<std::vector<std::size_t>> graded_isomorphisms(const SubPoset& a, const SubPoset& b,
                                                                 std::size_t limit = 2) {
  return find_embeddings(a, b, EmbeddingOptions{0, true, true, true}, limit);
}

} // namespace schubert
