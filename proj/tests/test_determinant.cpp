#include <fstream>
#include <random>

#include <Eigen/LU>

#include "doctest.h"
#include "quasitree/determinant.hpp"
#include "support/fixtures.hpp"

using namespace quasitree;

namespace {

std::vector<std::pair<KnotDiagram, BigInt>> table_with_dets() {
  std::ifstream in(fixture::dir() / "knots_le8.csv");
  std::vector<std::pair<KnotDiagram, BigInt>> out;
  for (const auto& entry : cli::parse_knot_table(in))
    if (entry.row && entry.row->expected_det) out.emplace_back(parse_pd(entry.row->pd), *entry.row->expected_det);
  return out;
}

}  // namespace

TEST_CASE("Bareiss determinant") {
  CHECK(bareiss_determinant(IntMatrix(0, 0)) == 1);
  IntMatrix m(2, 2);
  m << 2, 1, 1, 2;
  CHECK(bareiss_determinant(m) == 3);
  m << 0, 1, 1, 0;
  CHECK(bareiss_determinant(m) == -1);
  m << 1, 2, 2, 4;
  CHECK(bareiss_determinant(m) == 0);

  std::mt19937 rng(12);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = (trial % 3 == 0 && j == 0) ? 0 : entry(rng);
    const double want = a.cast<double>().determinant();
    CHECK(bareiss_determinant(a) == BigInt(static_cast<long long>(std::llround(want))));
  }
}

TEST_CASE("Bareiss stays exact beyond 64 bits") {
  IntMatrix m = IntMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) m(i, i) = 2'000'000'000LL;
  BigInt want = 1;
  for (int i = 0; i < 6; ++i) want *= 2'000'000'000LL;
  CHECK(bareiss_determinant(m) == want);
}

TEST_CASE("checkerboard colouring is proper") {
  for (const auto& name : fixture::pd_files()) {
    const auto d = fixture::diagram(name);
    for (bool swap : {false, true}) {
      const auto cb = checkerboard(d, swap);
      CHECK(cb.shaded.size() == cb.faces.size());
      CHECK(cb.shaded[cb.unbounded_face] == swap);
      std::vector<int> face_of(4 * d.crossing_count());
      for (const auto& f : cb.faces)
        for (const auto& k : f.boundary) face_of[4 * k.crossing + k.position] = f.id;
      for (int x = 0; x < static_cast<int>(d.crossing_count()); ++x)
        for (int p = 0; p < 4; ++p) {
          const int here = face_of[4 * x + p];
          const int next = face_of[4 * x + (p + 1) % 4];
          CHECK(cb.shaded[here] != cb.shaded[next]);
        }
    }
  }
  const auto kink = checkerboard(fixture::diagram("unknot_kink.pd"));
  CHECK(std::count(kink.shaded.begin(), kink.shaded.end(), true) == 2);
}

TEST_CASE("Goeritz matrix shape") {
  for (const auto& name : fixture::pd_files()) {
    const auto g = goeritz(fixture::diagram(name));
    CHECK(g.matrix.rows() == static_cast<Eigen::Index>(g.shaded_faces.size()));
    CHECK(g.matrix == g.matrix.transpose());
    CHECK(g.matrix.rowwise().sum().isZero());
    for (int eta : g.crossing_types) CHECK((eta == 1 || eta == -1));
  }
}

TEST_CASE("determinants of fixtures") {
  CHECK(knot_determinant(fixture::diagram("unknot_kink.pd")) == 1);
  CHECK(knot_determinant(fixture::diagram("trefoil.pd")) == 3);
  CHECK(knot_determinant(fixture::diagram("figure_eight.pd")) == 5);
  CHECK(knot_determinant(fixture::diagram("8_21_knotatlas.pd")) == 15);
  CHECK(knot_determinant(fixture::diagram("8_21_knotatlas_r3.pd")) == 15);
  CHECK(knot_determinant(fixture::diagram("8_21_knotscape.pd")) == 15);
}

TEST_CASE("determinant does not depend on shading, deleted row or mirror image") {
  for (const auto& name : fixture::pd_files()) {
    const auto d = fixture::diagram(name);
    const BigInt det = knot_determinant(d);
    for (bool swap : {false, true}) {
      const auto g = goeritz(d, swap);
      for (int r = 0; r < static_cast<int>(g.shaded_faces.size()); ++r) CHECK(reduced_determinant(g, r) == det);
    }
    CHECK(knot_determinant(mirror(d)) == det);
  }
  CHECK_THROWS_AS(reduced_determinant(goeritz(fixture::diagram("trefoil.pd")), 9), std::out_of_range);
}

TEST_CASE("determinants of the bundled table") {
  const auto rows = table_with_dets();
  CHECK(rows.size() == 35);
  for (const auto& [d, want] : rows) {
    const BigInt det = knot_determinant(d);
    CHECK(det == want);
    CHECK(det % 2 == 1);
    CHECK(knot_determinant(d) == reduced_determinant(goeritz(d, true), 0));
  }
}
