#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quasitree/cli.hpp"
#include "quasitree/knot_diagram.hpp"
#include "quasitree/map_core.hpp"

namespace fixture {

inline std::filesystem::path dir() { return quasitree::cli::default_fixture_dir(); }

inline quasitree::PdDocument pd(const std::string& name) { return quasitree::read_pd_file(dir() / name); }

inline quasitree::KnotDiagram diagram(const std::string& name) { return pd(name).diagram; }

inline quasitree::CombMap map(const std::string& name) {
  std::ifstream in(dir() / "maps" / name);
  std::stringstream buf;
  buf << in.rdbuf();
  return quasitree::parse_map(buf.str());
}

/// Every diagram of the bundled knot table.
inline std::vector<quasitree::KnotDiagram> table() {
  std::ifstream in(dir() / "knots_le8.csv");
  std::vector<quasitree::KnotDiagram> out;
  for (const auto& entry : quasitree::cli::parse_knot_table(in))
    if (entry.row) out.push_back(quasitree::parse_pd(entry.row->pd));
  return out;
}

inline const std::vector<std::string>& pd_files() {
  static const std::vector<std::string> names{"trefoil.pd", "figure_eight.pd", "unknot_kink.pd",
                                              "8_21_knotatlas.pd", "8_21_knotatlas_r3.pd",
                                              "8_21_knotscape.pd"};
  return names;
}

}  // namespace fixture
