// Command-line front end. Reports go to stdout; timing and errors go to
// stderr so that stdout is byte-identical across runs.
//
// Exit codes: 0 success or AGREE, 1 input error, 2 DISAGREE, 3 resource bound.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "precrossed/commands.hpp"

namespace {

struct Common {
  std::string file;
  std::string object;
  std::size_t cap = precrossed::kDefaultSimplexCap;
};

void add_common(CLI::App* sub, Common& c, bool needs_object = true) {
  sub->add_option("FILE", c.file, "input file")->required();
  if (needs_object) sub->add_option("--object", c.object, "name of the object in FILE")->required();
  sub->add_option("--cap", c.cap, "maximum simplices enumerated per degree")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace precrossed;

  CLI::App app{"Pre-crossed module homology, rack homology and group homology"};
  app.require_subcommand(1);

  Common common;
  int max_degree = 1;
  int max_length = 2;
  int degree = 1;
  std::string coeff_text = "Z";
  std::string pipeline_text;
  std::string lengths_text;
  bool machine = false;

  auto* validate = app.add_subcommand("validate", "parse and validate every object in FILE");
  add_common(validate, common, false);

  auto* homology = app.add_subcommand("homology", "H_0..H_M of one object through one pipeline");
  add_common(homology, common);
  homology->add_option("--pipeline", pipeline_text, "envelope|clauwens|rackcomplex|coskeleton|nerve")->required();
  homology->add_option("--max-degree", max_degree, "top homology degree M")->required();
  homology->add_option("--max-length", max_length, "truncation length L")->required();
  homology->add_option("--coeff", coeff_text, "Z|Q|F2|F3|F5|...")->capture_default_str();
  homology->add_flag("--machine", machine, "print only m;coeff;b;torsion lines");

  auto* compare = app.add_subcommand("compare-ra", "envelope vs clauwens vs rack complex");
  add_common(compare, common);
  compare->add_option("--max-degree", max_degree, "top homology degree M")->required();
  compare->add_option("--max-length", max_length, "truncation length L")->required();

  auto* tri = app.add_subcommand("check-tri", "envelope of X -> 1 against the tensor algebra on H(X)");
  add_common(tri, common);
  tri->add_option("--max-degree", max_degree, "top homology degree M")->required();
  tri->add_option("--coeff", coeff_text, "a field: Q|F2|F3|...")->required();
  tri->add_option("--lengths", lengths_text, "L1,L2,.. or L1..L2")->required();

  auto* cosk = app.add_subcommand("check-coskeleton", "M/G against the bar complex of G");
  add_common(cosk, common);
  cosk->add_option("--max-degree", max_degree, "top homology degree M")->required();

  auto* sweep = app.add_subcommand("sweep", "H_M of one pipeline across truncation lengths");
  add_common(sweep, common);
  sweep->add_option("--pipeline", pipeline_text, "envelope|clauwens|rackcomplex|coskeleton|nerve")->required();
  sweep->add_option("--degree", degree, "homology degree M")->required();
  sweep->add_option("--lengths", lengths_text, "L1..L2 or L1,L2,..")->required();
  sweep->add_option("--coeff", coeff_text, "Z|Q|F2|F3|F5|...")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const auto registry = parse_input(common.file);
    MatrixCaps caps;
    caps.simplices = common.cap;

    Report report;
    if (*validate) {
      report = cmd_validate(registry, common.file);
    } else if (*homology) {
      report = cmd_homology(registry, common.file, common.object, parse_pipeline(pipeline_text), max_degree,
                            max_length, Coefficients::parse(coeff_text), caps);
    } else if (*compare) {
      report = cmd_compare_ra(registry, common.file, common.object, max_degree, max_length, caps);
    } else if (*tri) {
      report = cmd_check_tri(registry, common.file, common.object, max_degree, Coefficients::parse(coeff_text),
                             parse_lengths(lengths_text), caps);
    } else if (*cosk) {
      report = cmd_check_coskeleton(registry, common.file, common.object, max_degree, caps);
    } else {
      report = cmd_sweep(registry, common.file, common.object, parse_pipeline(pipeline_text), degree,
                         parse_lengths(lengths_text), Coefficients::parse(coeff_text), caps);
    }
    std::cout << report.render(machine);
    std::cout.flush();
    std::fprintf(stderr, "time: %.3f s\n", report.seconds);
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceBound ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
