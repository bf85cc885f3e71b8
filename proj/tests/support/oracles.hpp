#pragma once

// Brute-force reference computations for the test suites. None of these call
// into the library's subset kernels.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "quasitree/map_core.hpp"

namespace oracle {

using quasitree::CombMap;
using quasitree::Dart;

inline std::size_t count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

inline std::vector<std::size_t> subset_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < 64; ++e)
    if ((mask >> e) & 1U) out.push_back(e);
  return out;
}

/// Vertex id of every dart, from scratch.
inline std::vector<int> vertex_ids(const CombMap& map) {
  std::vector<int> id(map.dart_count(), -1);
  int next = 0;
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    if (id[d] >= 0) continue;
    for (Dart x = static_cast<Dart>(d); id[x] < 0; x = map.sigma()[x]) id[x] = next;
    ++next;
  }
  return id;
}

inline std::size_t vertex_total(const CombMap& map) {
  const auto id = vertex_ids(map);
  const int orbits = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  return static_cast<std::size_t>(orbits) + map.isolated_vertices();
}

/// Boundary count from explicitly built permutations sigma_F and alpha_F on
/// the renumbered retained darts, composed and cycle-counted.
inline std::size_t boundaries(const CombMap& map, const std::vector<std::size_t>& subset) {
  const std::set<std::size_t> keep(subset.begin(), subset.end());
  std::vector<Dart> retained;
  std::vector<int> index(map.dart_count(), -1);
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    const Dart a = map.alpha()[d];
    const std::size_t edge = static_cast<std::size_t>(std::min<Dart>(static_cast<Dart>(d), a));
    // edge index = rank of the smaller dart among smaller darts
    std::size_t rank = 0;
    for (std::size_t x = 0; x < edge; ++x)
      if (static_cast<Dart>(x) < map.alpha()[x]) ++rank;
    if (keep.count(rank)) {
      index[d] = static_cast<int>(retained.size());
      retained.push_back(static_cast<Dart>(d));
    }
  }
  const std::size_t n = retained.size();
  std::vector<int> sigma_f(n), alpha_f(n), phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Dart x = map.sigma()[retained[i]];
    while (index[x] < 0) x = map.sigma()[x];
    sigma_f[i] = index[x];
    alpha_f[i] = index[map.alpha()[retained[i]]];
  }
  for (std::size_t i = 0; i < n; ++i) phi[i] = sigma_f[alpha_f[i]];

  const auto vid = vertex_ids(map);
  std::set<int> touched;
  for (Dart d : retained) touched.insert(vid[d]);
  return count_cycles(phi) + (vertex_total(map) - touched.size());
}

/// Components of the vertex/edge incidence graph by breadth-first search.
inline std::size_t components(const CombMap& map, const std::vector<std::size_t>& subset) {
  const auto vid = vertex_ids(map);
  const std::size_t v = vertex_total(map);
  std::vector<std::vector<int>> adj(v);
  std::size_t edge = 0;
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    const Dart a = map.alpha()[d];
    if (static_cast<Dart>(d) > a) continue;
    if (std::find(subset.begin(), subset.end(), edge) != subset.end()) {
      adj[vid[d]].push_back(vid[a]);
      adj[vid[a]].push_back(vid[d]);
    }
    ++edge;
  }
  std::vector<char> seen(v, 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    seen[s] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  return count;
}

struct Stats {
  std::size_t k, n, f;
  long genus_twice;  // 2g = n + k - f
};

inline Stats stats(const CombMap& map, const std::vector<std::size_t>& subset) {
  const std::size_t k = components(map, subset);
  const std::size_t v = vertex_total(map);
  const std::size_t n = subset.size() - (v - k);
  const std::size_t f = boundaries(map, subset);
  return {k, n, f, static_cast<long>(n + k) - static_cast<long>(f)};
}

/// Spanning trees by the matrix-tree theorem (loops ignored, multi-edges kept).
inline long spanning_trees_kirchhoff(const CombMap& map) {
  const auto vid = vertex_ids(map);
  const std::size_t v = vertex_total(map);
  if (v <= 1) return 1;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v));
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    const Dart a = map.alpha()[d];
    if (static_cast<Dart>(d) > a || vid[d] == vid[a]) continue;
    lap(vid[d], vid[d]) += 1;
    lap(vid[a], vid[a]) += 1;
    lap(vid[d], vid[a]) -= 1;
    lap(vid[a], vid[d]) -= 1;
  }
  const auto m = static_cast<Eigen::Index>(v) - 1;
  return std::lround(lap.topLeftCorner(m, m).determinant());
}

/// Random rotation on 2*edges darts with the standard edge pairing.
inline CombMap random_map(std::mt19937& rng, std::size_t edges) {
  std::vector<Dart> sigma(2 * edges);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return CombMap::from_rotation(std::move(sigma));
}

inline CombMap random_connected_map(std::mt19937& rng, std::size_t edges) {
  while (true) {
    CombMap m = random_map(rng, edges);
    std::vector<std::size_t> all(edges);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (edges == 0 || components(m, all) == 1) return m;
  }
}

}  // namespace oracle
