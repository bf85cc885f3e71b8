#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quasitree {

/// Arc labels of one crossing, counterclockwise from the incoming understrand.
using CrossingCode = std::array<int, 4>;

/// One arm of a crossing: `position` 0..3 indexes into its CrossingCode.
struct Slot {
  int crossing = 0;
  int position = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// The region between arm `position` and arm `position + 1` (mod 4).
using Corner = Slot;

struct Face {
  int id = 0;
  std::vector<Corner> boundary;
};

/// Planar diagram of a knot as a validated PD code.
///
/// Labels 1..2c each occur exactly twice; along the knot they increase by one
/// at every crossing, wrapping at 2c. Position 0 is the incoming understrand,
/// so the understrand runs 0 -> 2 and the overstrand runs between 1 and 3 in
/// the direction given by the labels.
class KnotDiagram {
 public:
  KnotDiagram() = default;
  explicit KnotDiagram(std::vector<CrossingCode> crossings, std::string name = {});

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t arc_count() const noexcept { return 2 * crossings_.size(); }
  const std::vector<CrossingCode>& crossings() const noexcept { return crossings_; }
  const CrossingCode& crossing(int x) const { return crossings_[x]; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int label(Slot s) const { return crossings_[s.crossing][s.position]; }

  /// The slot at the other end of the arc leaving `s`.
  Slot mate(Slot s) const { return mate_[4 * s.crossing + s.position]; }

  /// True when the knot enters the crossing through `s`.
  bool incoming(Slot s) const { return incoming_[4 * s.crossing + s.position] != 0; }

  static bool is_under(int position) { return position % 2 == 0; }

  /// +1 or -1 with the usual right-handed convention.
  int sign(int x) const;
  int writhe() const;

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<CrossingCode> crossings_;
  std::string name_;
  std::vector<Slot> mate_;
  std::vector<char> incoming_;
};

/// Accepts `X(1,4,2,5) X(3,6,4,1) ...` and `PD[X[1,4,2,5], ...]`.
KnotDiagram parse_pd(std::string_view text);

/// Canonical `X(a,b,c,d) X(...)` form; parse_pd(to_pd(d)) == d.
std::string to_pd(const KnotDiagram& diagram);

/// A PD file: comment lines start with '#'; `# name: ...` and
/// `# r3-face: N` are read as metadata.
struct PdDocument {
  KnotDiagram diagram;
  std::optional<int> r3_face;
};

PdDocument parse_pd_document(std::string_view text);
PdDocument read_pd_file(const std::filesystem::path& path);

/// Faces of the underlying 4-valent plane graph, numbered by the first unseen
/// corner when scanning crossings then positions. Each boundary lists corners
/// with the face on the right of the walk.
std::vector<Face> faces(const KnotDiagram& diagram);

/// Reidemeister III move across the triangular face `face_id`. Throws
/// NotApplicable unless the face is a triangle on three distinct crossings
/// with one strand over at both of its triangle crossings.
KnotDiagram reidemeister_3(const KnotDiagram& diagram, int face_id);

/// Reflection of the projection plane: (a,b,c,d) -> (a,d,c,b). Swaps the roles
/// of A- and B-smoothings.
KnotDiagram mirror(const KnotDiagram& diagram);

/// Switches over and under at crossing `x`.
KnotDiagram crossing_change(const KnotDiagram& diagram, int x);

/// Equal as oriented diagrams up to renumbering crossings and cyclically
/// shifting arc labels.
bool isomorphic(const KnotDiagram& a, const KnotDiagram& b);

}  // namespace quasitree
