#pragma once

#include <vector>

#include "quasitree/knot_diagram.hpp"
#include "quasitree/map_core.hpp"

namespace quasitree {

enum class Marker { A, B };

/// Result of smoothing every crossing the same way.
///
/// The A-smoothing of X(a,b,c,d) joins arcs a,d and b,c; the B-smoothing
/// joins a,b and c,d. Circles are numbered by their smallest arc label and
/// list their arcs in tracing order starting from it.
struct KauffmanState {
  Marker marker = Marker::A;
  std::vector<std::vector<int>> circles;
  std::vector<int> circle_of_arc;  // indexed by arc label; entry 0 unused

  std::size_t circle_count() const noexcept { return circles.size(); }
};

KauffmanState kauffman_state(const KnotDiagram& diagram, Marker marker);

/// Ribbon graph of the all-A (or all-B) state: vertices are state circles,
/// edge x is crossing x, and the rotation at each circle is the order in which
/// its smoothing arcs are met. Crossing x owns darts 2x (the a/d side) and
/// 2x+1 (the b/c side). The boundary components of the full map are exactly
/// the circles of the opposite state.
CombMap build_ribbon_graph(const KnotDiagram& diagram, Marker marker = Marker::A);

inline CombMap build_all_a_ribbon_graph(const KnotDiagram& diagram) {
  return build_ribbon_graph(diagram, Marker::A);
}

/// (c + 2 - s_A - s_B) / 2.
int turaev_genus(const KnotDiagram& diagram);

}  // namespace quasitree
