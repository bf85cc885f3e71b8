#include "quasitree/ribbon_builder.hpp"

#include <stdexcept>
#include <string>

namespace quasitree {
namespace {

// Position joined to `p` by the smoothing at a crossing.
int smoothing_partner(int p, Marker marker) {
  if (marker == Marker::A) return 3 - p;  // 0<->3, 1<->2
  return p ^ 1;                           // 0<->1, 2<->3
}

Slot head_of(const KnotDiagram& d, int label) {
  for (int x = 0; x < static_cast<int>(d.crossing_count()); ++x)
    for (int p = 0; p < 4; ++p)
      if (d.label({x, p}) == label && d.incoming({x, p})) return {x, p};
  throw std::logic_error("arc without head");
}

}  // namespace

KauffmanState kauffman_state(const KnotDiagram& diagram, Marker marker) {
  const int m = static_cast<int>(diagram.arc_count());
  KauffmanState state;
  state.marker = marker;
  state.circle_of_arc.assign(m + 1, -1);
  for (int start = 1; start <= m; ++start) {
    if (state.circle_of_arc[start] >= 0) continue;
    const int id = static_cast<int>(state.circles.size());
    auto& circle = state.circles.emplace_back();
    const Slot head = head_of(diagram, start);
    const Slot tail = diagram.mate(head);
    circle.push_back(start);
    state.circle_of_arc[start] = id;
    Slot s = head;
    while (true) {
      const Slot turn{s.crossing, smoothing_partner(s.position, marker)};
      if (turn == tail) break;
      const int l = diagram.label(turn);
      circle.push_back(l);
      state.circle_of_arc[l] = id;
      s = diagram.mate(turn);
    }
  }
  return state;
}

CombMap build_ribbon_graph(const KnotDiagram& diagram, Marker marker) {
  if (marker == Marker::B) return build_ribbon_graph(mirror(diagram), Marker::A);

  // Each arc is traversed by the opposite-state circles in a direction fixed by
  // a per-crossing parity: with parity 0 positions 0 and 2 point into the
  // crossing. Over-under arcs keep the parity, over-over and under-under arcs
  // flip it. Consistency around every face holds for planar diagrams.
  const int c = static_cast<int>(diagram.crossing_count());
  std::vector<int> parity(c, -1);
  std::vector<int> stack{0};
  parity[0] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4; ++p) {
      const Slot far = diagram.mate({x, p});
      const bool alternating = KnotDiagram::is_under(p) != KnotDiagram::is_under(far.position);
      const int want = alternating ? parity[x] : 1 - parity[x];
      if (parity[far.crossing] < 0) {
        parity[far.crossing] = want;
        stack.push_back(far.crossing);
      } else if (parity[far.crossing] != want) {
        throw std::logic_error("inconsistent state-circle orientation; diagram not planar");
      }
    }
  }

  auto side_of = [](int position) { return (position == 1 || position == 2) ? 1 : 0; };
  std::vector<Dart> sigma(2 * c);
  std::vector<std::string> labels(c);
  for (int x = 0; x < c; ++x) {
    labels[x] = std::to_string(x);
    const int leave_ad = parity[x] == 0 ? 3 : 0;
    const int leave_bc = parity[x] == 0 ? 1 : 2;
    const Slot to_ad = diagram.mate({x, leave_ad});
    const Slot to_bc = diagram.mate({x, leave_bc});
    sigma[2 * x] = 2 * to_ad.crossing + side_of(to_ad.position);
    sigma[2 * x + 1] = 2 * to_bc.crossing + side_of(to_bc.position);
  }
  return CombMap::from_rotation(std::move(sigma), std::move(labels));
}

int turaev_genus(const KnotDiagram& diagram) {
  const auto s_a = kauffman_state(diagram, Marker::A).circle_count();
  const auto s_b = kauffman_state(diagram, Marker::B).circle_count();
  return (static_cast<int>(diagram.crossing_count()) + 2 - static_cast<int>(s_a + s_b)) / 2;
}

}  // namespace quasitree
