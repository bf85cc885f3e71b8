#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quasitree/knot_diagram.hpp"
#include "quasitree/polynomial.hpp"
#include "quasitree/quasi_trees.hpp"
#include "quasitree/ribbon_builder.hpp"

namespace quasitree::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

enum class Format { Text, Json };

struct DiagramReport {
  std::string name;
  std::size_t crossings = 0;
  std::size_t s_a = 0;
  std::size_t s_b = 0;
  int turaev_genus = 0;
  std::size_t v = 0, e = 0, f = 0, g = 0;
  QuasiTreePoly q;
  BigInt det;
  BigInt q_at_minus_1;
};

DiagramReport analyze(const KnotDiagram& diagram, Marker marker = Marker::A,
                      const EnumerationOptions& options = {});

std::string to_text(const DiagramReport& report);
/// Single JSON document; key order is fixed.
std::string to_json(const DiagramReport& report);

struct KnotTableRow {
  std::string name;
  std::string pd;
  std::optional<BigInt> expected_det;
};

struct TableEntry {
  int line = 0;
  std::optional<KnotTableRow> row;
  std::string error;  // set when `row` is empty
};

/// CSV with a `name,pd[,det]` header; fields may be double-quoted.
std::vector<TableEntry> parse_knot_table(std::istream& in);

int cmd_q(const std::filesystem::path& file, bool all_b, Format format, std::ostream& out,
          std::ostream& err);
int cmd_r3(const std::filesystem::path& file, int face, std::ostream& out, std::ostream& err);
int cmd_counterexample(const std::filesystem::path& fixture_dir, std::ostream& out,
                       std::ostream& err);
int cmd_verify(const std::filesystem::path& table, unsigned jobs, std::ostream& out,
               std::ostream& err);
int cmd_brt(const std::filesystem::path& map_file, Format format, std::ostream& out,
            std::ostream& err);

std::filesystem::path default_fixture_dir();

}  // namespace quasitree::cli
