#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quasitree/cli.hpp"

int main(int argc, char** argv) {
  namespace qc = quasitree::cli;

  CLI::App app{"Quasi-tree polynomials of all-A ribbon graphs of knot diagrams"};
  app.require_subcommand(1);

  const std::map<std::string, qc::Format> formats{{"text", qc::Format::Text},
                                                  {"json", qc::Format::Json}};

  std::string q_file;
  bool all_b = false;
  qc::Format q_format = qc::Format::Text;
  auto* q = app.add_subcommand("q", "Turaev genus, map statistics and q(t) of a PD file");
  q->add_option("file", q_file, "PD code file")->required();
  q->add_flag("--all-b", all_b, "use the all-B ribbon graph");
  q->add_option("--format", q_format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string r3_file;
  int face = -1;
  auto* r3 = app.add_subcommand("r3", "apply a Reidemeister III move at a triangular face");
  r3->add_option("file", r3_file, "PD code file")->required();
  r3->add_option("--face", face, "face id")->required();

  std::string fixtures = qc::default_fixture_dir().string();
  auto* ce = app.add_subcommand("counterexample", "reproduce the 8_21 non-invariance example");
  ce->add_option("--fixtures", fixtures, "fixture directory");

  std::string table;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "check |q(-1)| = det over a knot table");
  verify->add_option("table", table, "CSV with name,pd[,det]")->required();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));

  std::string map_file;
  qc::Format brt_format = qc::Format::Text;
  auto* brt = app.add_subcommand("brt", "Bollobas-Riordan-Tutte polynomial of a map file");
  brt->add_option("mapfile", map_file, "map text file")->required();
  brt->add_option("--format", brt_format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qc::kInputError;
  }

  if (*q) return qc::cmd_q(q_file, all_b, q_format, std::cout, std::cerr);
  if (*r3) return qc::cmd_r3(r3_file, face, std::cout, std::cerr);
  if (*ce) return qc::cmd_counterexample(fixtures, std::cout, std::cerr);
  if (*verify) return qc::cmd_verify(table, jobs, std::cout, std::cerr);
  if (*brt) return qc::cmd_brt(map_file, brt_format, std::cout, std::cerr);
  return qc::kInputError;
}
