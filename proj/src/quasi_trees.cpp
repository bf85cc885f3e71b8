#include "quasitree/quasi_trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "quasitree/error.hpp"

namespace quasitree {

QuasiTreePoly::QuasiTreePoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QuasiTreePoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string QuasiTreePoly::to_text() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const bool negative = coeffs_[j] < 0;
    const BigInt mag = negative ? BigInt(-coeffs_[j]) : coeffs_[j];
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (j == 0 || mag != 1) out += mag.str();
    if (j >= 1) out += 't';
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_scannable(const CombMap& map) {
  if (map.edge_count() > kMaxScanEdges)
    throw Unsupported("subset scan limited to " + std::to_string(kMaxScanEdges) + " edges, map has " +
                      std::to_string(map.edge_count()));
}

void require_connected(const CombMap& map) {
  if (components(map).count != 1)
    throw Unsupported("quasi-trees require a connected map");
}

// Scans every edge bitmask, giving each worker a contiguous index range, its
// own profiler and its own tally. Tallies are merged by elementwise addition.
template <typename Visit>
std::vector<std::uint64_t> scan_subsets(const CombMap& map, std::size_t tally_size,
                                        const EnumerationOptions& options, Visit visit) {
  const std::uint64_t total = std::uint64_t{1} << map.edge_count();
  unsigned workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::uint64_t>> tallies(workers,
                                                  std::vector<std::uint64_t>(tally_size, 0));
  auto run = [&](unsigned w) {
    SubsetProfiler profiler(map);
    const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
    for (std::uint64_t mask = lo; mask < hi; ++mask) visit(profiler, mask, tallies[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> merged(tally_size, 0);
  for (const auto& t : tallies)
    for (std::size_t i = 0; i < tally_size; ++i) merged[i] += t[i];
  return merged;
}

std::vector<std::size_t> edges_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1)
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(m)));
  return out;
}

}  // namespace

std::vector<QuasiTree> enumerate_quasi_trees(const CombMap& map) {
  require_scannable(map);
  require_connected(map);
  const int v = static_cast<int>(map.vertex_count());
  SubsetProfiler profiler(map);
  std::vector<QuasiTree> out;
  const std::uint64_t total = std::uint64_t{1} << map.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (profiler.boundaries(mask) != 1) continue;
    const auto c = profiler.evaluate(mask);
    if (c.size != v - 1 + 2 * c.genus)
      throw std::logic_error("quasi-tree of genus " + std::to_string(c.genus) + " has " +
                             std::to_string(c.size) + " edges");
    out.push_back({edges_of(mask), c.genus});
  }
  return out;
}

QuasiTreePoly quasi_tree_polynomial(const CombMap& map, const EnumerationOptions& options) {
  require_scannable(map);
  require_connected(map);
  const int v = static_cast<int>(map.vertex_count());
  const int g_max = static_cast<int>(map_profile(map).genus);
  const auto tally = scan_subsets(
      map, g_max + 1, options,
      [v, g_max](SubsetProfiler& profiler, std::uint64_t mask, std::vector<std::uint64_t>& out) {
        const int extra = __builtin_popcountll(mask) - (v - 1);
        if (extra < 0 || extra % 2 != 0 || extra / 2 > g_max) return;
        if (profiler.boundaries(mask) == 1) ++out[extra / 2];
      });
  return QuasiTreePoly(std::vector<BigInt>(tally.begin(), tally.end()));
}

TriVarPoly brt_polynomial(const CombMap& map, const EnumerationOptions& options) {
  require_scannable(map);
  const int v = static_cast<int>(map.vertex_count());
  const int e = static_cast<int>(map.edge_count());
  const int full_rank = v - static_cast<int>(components(map).count);
  const int gs = e / 2 + 1, ns = e + 1;
  // Tally indexed by (r(E) - r(F), n(F), g(F)).
  const auto tally = scan_subsets(
      map, static_cast<std::size_t>((full_rank + 1) * ns * gs), options,
      [&](SubsetProfiler& profiler, std::uint64_t mask, std::vector<std::uint64_t>& out) {
        const auto c = profiler.evaluate(mask);
        const int deficit = full_rank - (v - c.components);
        ++out[(deficit * ns + c.nullity) * gs + c.genus];
      });

  TriVarPoly poly;
  for (int m = 0; m <= full_rank; ++m) {
    for (int n = 0; n < ns; ++n) {
      for (int g = 0; g < gs; ++g) {
        const std::uint64_t count = tally[(m * ns + n) * gs + g];
        if (count == 0) continue;
        // (X - 1)^m = sum_i binom(m, i) X^i (-1)^(m - i)
        BigInt binom = 1;
        for (int i = 0; i <= m; ++i) {
          const BigInt c = ((m - i) % 2 == 0 ? 1 : -1) * binom * count;
          poly.add_term({i, n, g}, c);
          binom = binom * (m - i) / (i + 1);
        }
      }
    }
  }
  return poly;
}

BiVarPoly two_variable_q(const CombMap& map, const EnumerationOptions& options) {
  require_scannable(map);
  require_connected(map);
  const int e = static_cast<int>(map.edge_count());
  const int gs = e / 2 + 1, ys = e + 1;
  const auto tally = scan_subsets(
      map, static_cast<std::size_t>(gs * ys), options,
      [&](SubsetProfiler& profiler, std::uint64_t mask, std::vector<std::uint64_t>& out) {
        if (profiler.components(mask) != 1) return;
        const auto c = profiler.evaluate(mask);
        ++out[c.genus * ys + (c.boundaries - 1)];
      });
  BiVarPoly poly;
  for (int g = 0; g < gs; ++g)
    for (int y = 0; y < ys; ++y)
      if (const auto count = tally[g * ys + y]; count != 0) poly.add_term({g, y}, count);
  return poly;
}

BiVarPoly specialize_brt(const TriVarPoly& brt) {
  BiVarPoly out;
  for (const auto& [exp, coeff] : brt.terms()) {
    const auto [x, y, z] = exp;
    (void)x;  // X = 1
    out.add_term({z, y - 2 * z}, coeff);
  }
  return out;
}

QuasiTreePoly at_y_zero(const BiVarPoly& q) {
  std::vector<BigInt> coeffs;
  for (const auto& [exp, coeff] : q.terms()) {
    const auto [t, y] = exp;
    if (y < 0) throw Unsupported("q(t,Y) has a negative power of Y; cannot set Y = 0");
    if (t < 0) throw Unsupported("q(t,Y) has a negative power of t");
    if (y != 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(t)) coeffs.resize(t + 1);
    coeffs[t] += coeff;
  }
  return QuasiTreePoly(std::move(coeffs));
}

}  // namespace quasitree
