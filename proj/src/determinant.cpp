#include "quasitree/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasitree {

Checkerboard checkerboard(const KnotDiagram& diagram, bool swap) {
  Checkerboard out;
  out.faces = faces(diagram);
  const int c = static_cast<int>(diagram.crossing_count());
  std::vector<int> face_of(4 * c, -1);
  for (const auto& f : out.faces)
    for (const auto& k : f.boundary) face_of[4 * k.crossing + k.position] = f.id;

  for (const auto& f : out.faces)
    if (f.boundary.size() > out.faces[out.unbounded_face].boundary.size()) out.unbounded_face = f.id;

  // Corners (x, p) and (x, p+1) lie on opposite sides of arm p+1.
  std::vector<int> colour(out.faces.size(), -1);
  std::vector<int> stack{out.unbounded_face};
  colour[out.unbounded_face] = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (const auto& k : out.faces[f].boundary) {
      for (int step : {1, 3}) {
        const int g = face_of[4 * k.crossing + (k.position + step) % 4];
        if (colour[g] < 0) {
          colour[g] = 1 - colour[f];
          stack.push_back(g);
        } else if (colour[g] == colour[f]) {
          throw std::logic_error("faces do not admit a checkerboard colouring");
        }
      }
    }
  }
  out.shaded.resize(out.faces.size());
  for (std::size_t f = 0; f < colour.size(); ++f) out.shaded[f] = (colour[f] == 1) != swap;
  return out;
}

GoeritzData goeritz(const KnotDiagram& diagram, bool swap) {
  GoeritzData data;
  data.coloring = checkerboard(diagram, swap);
  const auto& fs = data.coloring.faces;
  const int c = static_cast<int>(diagram.crossing_count());
  std::vector<int> face_of(4 * c, -1);
  for (const auto& f : fs)
    for (const auto& k : f.boundary) face_of[4 * k.crossing + k.position] = f.id;

  std::vector<int> row_of(fs.size(), -1);
  for (const auto& f : fs) {
    if (!data.coloring.shaded[f.id]) continue;
    row_of[f.id] = static_cast<int>(data.shaded_faces.size());
    data.shaded_faces.push_back(f.id);
  }
  const auto n = static_cast<Eigen::Index>(data.shaded_faces.size());
  data.matrix = IntMatrix::Zero(n, n);
  data.crossing_types.resize(c);
  for (int x = 0; x < c; ++x) {
    // Corners (x,0) and (x,2) are merged by the A-smoothing.
    const bool a_shaded = data.coloring.shaded[face_of[4 * x]];
    const int eta = a_shaded ? 1 : -1;
    data.crossing_types[x] = eta;
    const int first = a_shaded ? 0 : 1;
    const int r = row_of[face_of[4 * x + first]];
    const int s = row_of[face_of[4 * x + first + 2]];
    if (r == s) continue;
    data.matrix(r, s) -= eta;
    data.matrix(s, r) -= eta;
    data.matrix(r, r) += eta;
    data.matrix(s, s) += eta;
  }
  return data;
}

BigInt reduced_determinant(const GoeritzData& data, int deleted) {
  const Eigen::Index n = data.matrix.rows();
  if (deleted < 0 || deleted >= n) throw std::out_of_range("Goeritz row out of range");
  IntMatrix reduced(n - 1, n - 1);
  for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
    if (i == deleted) continue;
    for (Eigen::Index j = 0, rj = 0; j < n; ++j) {
      if (j == deleted) continue;
      reduced(ri, rj++) = data.matrix(i, j);
    }
    ++ri;
  }
  const BigInt det = bareiss_determinant(reduced);
  return det < 0 ? BigInt(-det) : det;
}

BigInt knot_determinant(const KnotDiagram& diagram) {
  const auto data = goeritz(diagram);
  if (data.shaded_faces.empty()) return 1;
  return reduced_determinant(data, static_cast<int>(data.shaded_faces.size()) - 1);
}

}  // namespace quasitree
