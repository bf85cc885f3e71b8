#pragma once

#include <cstddef>
#include <vector>

#include "quasitree/map_core.hpp"
#include "quasitree/polynomial.hpp"

namespace quasitree {

/// Subset scans split the index range across `workers` threads; 0 picks the
/// hardware concurrency. Results do not depend on the worker count.
struct EnumerationOptions {
  unsigned workers = 1;
};

/// Largest edge count accepted by the exhaustive subset scans.
inline constexpr std::size_t kMaxScanEdges = 40;

struct QuasiTree {
  std::vector<std::size_t> edges;
  int genus = 0;
};

/// All spanning subsets with one boundary component, in increasing bitmask
/// order. Throws Unsupported for disconnected maps.
std::vector<QuasiTree> enumerate_quasi_trees(const CombMap& map);

/// Coefficients a_j of q(Γ;t). Only subsets of size V-1+2j, j <= g(Γ), are
/// profiled.
QuasiTreePoly quasi_tree_polynomial(const CombMap& map, const EnumerationOptions& options = {});

/// C(Γ;X,Y,Z) = sum over F of (X-1)^{r(E)-r(F)} Y^{n(F)} Z^{g(F)}.
TriVarPoly brt_polynomial(const CombMap& map, const EnumerationOptions& options = {});

/// q(Γ;t,Y) = sum over connected spanning F of t^{g(F)} Y^{f(F)-1}.
BiVarPoly two_variable_q(const CombMap& map, const EnumerationOptions& options = {});

/// Formal substitution X -> 1, Z -> t*Y^-2 into C, with cancellation. The
/// result may carry negative Y exponents if C is not of the expected form.
BiVarPoly specialize_brt(const TriVarPoly& brt);

/// q(Γ;t,0). Throws Unsupported if a negative Y exponent is present.
QuasiTreePoly at_y_zero(const BiVarPoly& q);

}  // namespace quasitree
