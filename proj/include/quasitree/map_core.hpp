#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasitree {

using Dart = int;

/// Orientable ribbon graph as a pair of permutations on darts.
///
/// `sigma` sends a dart to its counterclockwise successor around the incident
/// vertex, `alpha` to the other dart of the same edge. Vertices, edges and
/// boundary components are the orbits of sigma, alpha and sigma∘alpha.
/// Edges are numbered by the smallest dart in their alpha-orbit, so the usual
/// pairing 2i <-> 2i+1 gives edge i. Vertices without darts are carried as a
/// separate count and numbered after the sigma-orbits.
class CombMap {
 public:
  CombMap() = default;
  CombMap(std::vector<Dart> sigma, std::vector<Dart> alpha,
          std::vector<std::string> edge_labels = {}, std::size_t isolated_vertices = 0);

  /// Map with the standard pairing alpha(2i) = 2i+1.
  static CombMap from_rotation(std::vector<Dart> sigma,
                               std::vector<std::string> edge_labels = {},
                               std::size_t isolated_vertices = 0);

  std::size_t dart_count() const noexcept { return sigma_.size(); }
  std::size_t edge_count() const noexcept { return edge_darts_.size(); }
  std::size_t vertex_count() const noexcept { return vertex_darts_.size(); }

  const std::vector<Dart>& sigma() const noexcept { return sigma_; }
  const std::vector<Dart>& alpha() const noexcept { return alpha_; }
  const std::vector<std::string>& edge_labels() const noexcept { return labels_; }
  std::size_t isolated_vertices() const noexcept { return isolated_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  std::size_t edge_of(Dart d) const { return edge_of_[d]; }
  const std::array<Dart, 2>& edge_darts(std::size_t e) const { return edge_darts_[e]; }

  /// Darts around vertex v in rotation order, starting at its smallest dart.
  const std::vector<Dart>& rotation(int v) const { return vertex_darts_[v]; }

  friend bool operator==(const CombMap&, const CombMap&) = default;

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> alpha_;
  std::vector<std::string> labels_;
  std::size_t isolated_ = 0;
  std::vector<int> vertex_of_;
  std::vector<std::size_t> edge_of_;
  std::vector<std::array<Dart, 2>> edge_darts_;
  std::vector<std::vector<Dart>> vertex_darts_;
};

struct VertexPartition {
  std::vector<int> component_of_vertex;
  std::size_t count = 0;
};

struct SubgraphProfile {
  std::vector<std::size_t> subset;  // sorted edge indices
  std::size_t vertices = 0;
  std::size_t components = 0;  // k
  std::size_t rank = 0;        // r = V - k
  std::size_t nullity = 0;     // n = |subset| - r
  std::size_t boundaries = 0;  // f
  std::size_t genus = 0;       // g, from n - 2g = f - k
};

VertexPartition components(const CombMap& map);

/// Number of boundary components of the spanning ribbon subgraph on `subset`.
/// Every vertex is kept; isolated vertices count one boundary each.
std::size_t boundary_components(const CombMap& map, std::span<const std::size_t> subset);

SubgraphProfile subgraph_profile(const CombMap& map, std::span<const std::size_t> subset);

/// Profile of the full edge set.
SubgraphProfile map_profile(const CombMap& map);

std::vector<std::size_t> all_edges(const CombMap& map);

/// Reusable workspace evaluating subgraph statistics for edge bitmasks.
/// Not thread-safe; give each worker its own instance.
class SubsetProfiler {
 public:
  struct Counts {
    int size = 0;
    int components = 0;
    int boundaries = 0;
    int nullity = 0;
    int genus = 0;
  };

  explicit SubsetProfiler(const CombMap& map);

  /// Requires edge_count() <= 63.
  Counts evaluate(std::uint64_t mask);
  int boundaries(std::uint64_t mask);
  int components(std::uint64_t mask);

 private:
  const CombMap* map_;
  std::vector<Dart> next_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<int> parent_;
};

/// Text form: `sigma: ...`, `alpha: ...`, optional `labels: ...` and
/// `isolated: N`.
CombMap parse_map(std::string_view text);
std::string to_text(const CombMap& map);

}  // namespace quasitree
