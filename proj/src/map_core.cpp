#include "quasitree/map_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quasitree/error.hpp"

namespace quasitree {
namespace {

void check_permutation(const std::vector<Dart>& perm, const char* name) {
  std::vector<char> hit(perm.size(), 0);
  for (Dart d : perm) {
    if (d < 0 || static_cast<std::size_t>(d) >= perm.size())
      throw InputError(std::string(name) + ": dart " + std::to_string(d) + " out of range");
    if (hit[d]) throw InputError(std::string(name) + " is not a bijection");
    hit[d] = 1;
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Dart> read_ints(std::istringstream& in, std::string_view key) {
  std::vector<Dart> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("map text: bad integer '" + tok + "' in " + std::string(key));
    }
  }
  return out;
}

}  // namespace

CombMap::CombMap(std::vector<Dart> sigma, std::vector<Dart> alpha,
                 std::vector<std::string> edge_labels, std::size_t isolated_vertices)
    : sigma_(std::move(sigma)),
      alpha_(std::move(alpha)),
      labels_(std::move(edge_labels)),
      isolated_(isolated_vertices) {
  const std::size_t n = sigma_.size();
  if (alpha_.size() != n) throw InputError("sigma and alpha have different sizes");
  if (n % 2 != 0) throw InputError("dart count must be even");
  check_permutation(sigma_, "sigma");
  check_permutation(alpha_, "alpha");
  for (std::size_t d = 0; d < n; ++d) {
    if (alpha_[d] == static_cast<Dart>(d))
      throw InputError("alpha has a fixed point at dart " + std::to_string(d));
    if (alpha_[alpha_[d]] != static_cast<Dart>(d)) throw InputError("alpha is not an involution");
  }

  edge_of_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    if (static_cast<Dart>(d) < alpha_[d]) {
      edge_of_[d] = edge_of_[alpha_[d]] = edge_darts_.size();
      edge_darts_.push_back({static_cast<Dart>(d), alpha_[d]});
    }
  }
  if (!labels_.empty() && labels_.size() != edge_darts_.size())
    throw InputError("expected " + std::to_string(edge_darts_.size()) + " edge labels, got " +
                     std::to_string(labels_.size()));

  vertex_of_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    const int v = static_cast<int>(vertex_darts_.size());
    auto& rot = vertex_darts_.emplace_back();
    for (Dart x = static_cast<Dart>(d); vertex_of_[x] < 0; x = sigma_[x]) {
      vertex_of_[x] = v;
      rot.push_back(x);
    }
  }
  vertex_darts_.resize(vertex_darts_.size() + isolated_);

  // Euler relation per component; fails only for inconsistent input.
  const auto parts = quasitree::components(*this);
  std::vector<long> chi(parts.count, 0);
  for (std::size_t v = 0; v < vertex_count(); ++v) chi[parts.component_of_vertex[v]] += 1;
  for (const auto& e : edge_darts_) chi[parts.component_of_vertex[vertex_of_[e[0]]]] -= 1;
  std::vector<char> seen(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    if (seen[d]) continue;
    chi[parts.component_of_vertex[vertex_of_[d]]] += 1;
    for (Dart x = static_cast<Dart>(d); !seen[x]; x = sigma_[alpha_[x]]) seen[x] = 1;
  }
  for (std::size_t v = vertex_count() - isolated_; v < vertex_count(); ++v)
    chi[parts.component_of_vertex[v]] += 1;
  for (long c : chi)
    if (c > 2 || (2 - c) % 2 != 0) throw InputError("map is not an orientable surface embedding");
}

CombMap CombMap::from_rotation(std::vector<Dart> sigma, std::vector<std::string> edge_labels,
                               std::size_t isolated_vertices) {
  std::vector<Dart> alpha(sigma.size());
  for (std::size_t d = 0; d < alpha.size(); ++d) alpha[d] = static_cast<Dart>(d ^ 1U);
  return CombMap(std::move(sigma), std::move(alpha), std::move(edge_labels), isolated_vertices);
}

VertexPartition components(const CombMap& map) {
  std::vector<int> parent(map.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < map.edge_count(); ++e) {
    const auto& [d0, d1] = map.edge_darts(e);
    parent[find_root(parent, map.vertex_of(d0))] = find_root(parent, map.vertex_of(d1));
  }
  VertexPartition out;
  out.component_of_vertex.assign(map.vertex_count(), -1);
  std::vector<int> label_of_root(map.vertex_count(), -1);
  for (std::size_t v = 0; v < map.vertex_count(); ++v) {
    const int r = find_root(parent, static_cast<int>(v));
    if (label_of_root[r] < 0) label_of_root[r] = static_cast<int>(out.count++);
    out.component_of_vertex[v] = label_of_root[r];
  }
  return out;
}

namespace {

std::vector<char> keep_mask(const CombMap& map, std::span<const std::size_t> subset) {
  std::vector<char> keep(map.edge_count(), 0);
  for (std::size_t e : subset) {
    if (e >= map.edge_count())
      throw InputError("edge index " + std::to_string(e) + " out of range (map has " +
                       std::to_string(map.edge_count()) + " edges)");
    keep[e] = 1;
  }
  return keep;
}

std::size_t count_boundaries(const CombMap& map, const std::vector<char>& keep) {
  std::vector<Dart> next(map.dart_count(), -1);
  std::size_t f = 0;
  for (std::size_t v = 0; v < map.vertex_count(); ++v) {
    const auto& rot = map.rotation(static_cast<int>(v));
    Dart first = -1, prev = -1;
    for (Dart d : rot) {
      if (!keep[map.edge_of(d)]) continue;
      if (first < 0) first = d;
      if (prev >= 0) next[prev] = d;
      prev = d;
    }
    if (first < 0)
      ++f;  // isolated vertex bounds one disk
    else
      next[prev] = first;
  }
  std::vector<char> seen(map.dart_count(), 0);
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    if (next[d] < 0 || seen[d]) continue;
    ++f;
    for (Dart x = static_cast<Dart>(d); !seen[x]; x = next[map.alpha()[x]]) seen[x] = 1;
  }
  return f;
}

}  // namespace

std::size_t boundary_components(const CombMap& map, std::span<const std::size_t> subset) {
  return count_boundaries(map, keep_mask(map, subset));
}

SubgraphProfile subgraph_profile(const CombMap& map, std::span<const std::size_t> subset) {
  const auto keep = keep_mask(map, subset);
  SubgraphProfile p;
  for (std::size_t e = 0; e < keep.size(); ++e)
    if (keep[e]) p.subset.push_back(e);

  std::vector<int> parent(map.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t k = map.vertex_count();
  for (std::size_t e : p.subset) {
    const auto& [d0, d1] = map.edge_darts(e);
    const int a = find_root(parent, map.vertex_of(d0));
    const int b = find_root(parent, map.vertex_of(d1));
    if (a != b) {
      parent[a] = b;
      --k;
    }
  }
  p.vertices = map.vertex_count();
  p.components = k;
  p.rank = p.vertices - k;
  p.nullity = p.subset.size() - p.rank;
  p.boundaries = count_boundaries(map, keep);
  p.genus = (p.nullity + k - p.boundaries) / 2;
  return p;
}

std::vector<std::size_t> all_edges(const CombMap& map) {
  std::vector<std::size_t> out(map.edge_count());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

SubgraphProfile map_profile(const CombMap& map) {
  const auto edges = all_edges(map);
  return subgraph_profile(map, edges);
}

SubsetProfiler::SubsetProfiler(const CombMap& map)
    : map_(&map),
      next_(map.dart_count(), -1),
      seen_(map.dart_count(), 0),
      parent_(map.vertex_count()) {}

int SubsetProfiler::boundaries(std::uint64_t mask) {
  const auto& alpha = map_->alpha();
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  int f = 0;
  for (std::size_t v = 0; v < map_->vertex_count(); ++v) {
    Dart first = -1, prev = -1;
    for (Dart d : map_->rotation(static_cast<int>(v))) {
      if (!((mask >> map_->edge_of(d)) & 1U)) continue;
      if (first < 0)
        first = d;
      else
        next_[prev] = d;
      prev = d;
    }
    if (first < 0)
      ++f;
    else
      next_[prev] = first;
  }
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const auto e = static_cast<std::size_t>(__builtin_ctzll(m));
    for (Dart d : map_->edge_darts(e)) {
      if (seen_[d] == stamp_) continue;
      ++f;
      for (Dart x = d; seen_[x] != stamp_; x = next_[alpha[x]]) seen_[x] = stamp_;
    }
  }
  return f;
}

int SubsetProfiler::components(std::uint64_t mask) {
  std::iota(parent_.begin(), parent_.end(), 0);
  int k = static_cast<int>(map_->vertex_count());
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const auto& [d0, d1] = map_->edge_darts(static_cast<std::size_t>(__builtin_ctzll(m)));
    const int a = find_root(parent_, map_->vertex_of(d0));
    const int b = find_root(parent_, map_->vertex_of(d1));
    if (a != b) {
      parent_[a] = b;
      --k;
    }
  }
  return k;
}

SubsetProfiler::Counts SubsetProfiler::evaluate(std::uint64_t mask) {
  Counts c;
  c.size = __builtin_popcountll(mask);
  c.components = components(mask);
  c.boundaries = boundaries(mask);
  c.nullity = c.size - (static_cast<int>(map_->vertex_count()) - c.components);
  c.genus = (c.nullity + c.components - c.boundaries) / 2;
  return c;
}

CombMap parse_map(std::string_view text) {
  std::vector<Dart> sigma, alpha;
  std::vector<std::string> labels;
  std::size_t isolated = 0;
  bool have_sigma = false, have_alpha = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("map text: expected 'key: values' in '" + line + "'");
    std::string key = line.substr(start, colon - start);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::istringstream values(line.substr(colon + 1));
    if (key == "sigma") {
      sigma = read_ints(values, key);
      have_sigma = true;
    } else if (key == "alpha") {
      alpha = read_ints(values, key);
      have_alpha = true;
    } else if (key == "isolated") {
      const auto v = read_ints(values, key);
      if (v.size() != 1 || v[0] < 0) throw InputError("map text: 'isolated:' takes one count");
      isolated = static_cast<std::size_t>(v[0]);
    } else if (key == "labels") {
      std::string tok;
      while (values >> tok) labels.push_back(tok);
    } else {
      throw InputError("map text: unknown key '" + key + "'");
    }
  }
  if (!have_sigma) throw InputError("map text: missing 'sigma:' line");
  if (!have_alpha) throw InputError("map text: missing 'alpha:' line");
  return CombMap(std::move(sigma), std::move(alpha), std::move(labels), isolated);
}

std::string to_text(const CombMap& map) {
  std::ostringstream out;
  out << "sigma:";
  for (Dart d : map.sigma()) out << ' ' << d;
  out << "\nalpha:";
  for (Dart d : map.alpha()) out << ' ' << d;
  out << '\n';
  if (!map.edge_labels().empty()) {
    out << "labels:";
    for (const auto& l : map.edge_labels()) out << ' ' << l;
    out << '\n';
  }
  if (map.isolated_vertices() != 0) out << "isolated: " << map.isolated_vertices() << '\n';
  return out.str();
}

}  // namespace quasitree
