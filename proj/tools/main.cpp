// coxhull: strong hull property checks for planar Coxeter complexes.

#include <iostream>

#include <CLI11.hpp>

#include "coxhull/cli.hpp"
#include "coxhull/error.hpp"

using namespace coxhull;

namespace {

TypeTag to_tag(const std::string& name) {
  auto tag = parse_tag(name);
  if (!tag || *tag == TypeTag::Unsupported) throw Error(ErrorKind::ConfigError, "unknown type '" + name + "'");
  return *tag;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::HullDiscrepancy:
    case ErrorKind::IoError:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

const std::vector<std::string> kTypes{"a2t", "c2t", "g2t", "i2inf"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex hulls and the strong hull property in planar Coxeter complexes"};
  app.require_subcommand(1);

  RunConfig check;
  std::string check_type = "a2t";
  auto* check_cmd = app.add_subcommand("check", "Sweep all triples (identity, v, w) within a radius");
  check_cmd->add_option("--type", check_type, "Group type")->check(CLI::IsMember(kTypes));
  check_cmd->add_option("--matrix", check.matrix_json, "Coxeter matrix as JSON text or a JSON file; overrides --type");
  check_cmd->add_option("--radius", check.radius, "Maximum word length of v and w");
  check_cmd->add_option("--radius-cap", check.radius_cap, "Upper bound accepted for --radius");
  check_cmd->add_option("--jobs", check.jobs, "Worker threads");
  check_cmd->add_option("--report", check.report_path, "Write the JSON report here");
  check_cmd->add_option("--seed", check.seed, "Seed for the sampled oracle cross-checks");
  check_cmd->add_option("--cross-checks", check.cross_checks, "Number of sampled oracle cross-checks");
  bool no_timing = false;
  check_cmd->add_flag("--no-timing", no_timing, "Report wall_clock_ms as 0");

  HullRequest hull;
  std::string hull_type = "a2t";
  auto* hull_cmd = app.add_subcommand("hull", "Hull sizes of chambers given as generator words");
  hull_cmd->add_option("--type", hull_type, "Group type")->check(CLI::IsMember(kTypes));
  hull_cmd->add_option("--u", hull.u, "Word for u (digits 1..rank, empty for the base chamber)");
  hull_cmd->add_option("--v", hull.v, "Word for v");
  hull_cmd->add_option("--w", hull.w, "Word for w");
  hull_cmd->add_option("--svg", hull.svg_path, "Render the hulls to this SVG file");

  FormulaRequest formula;
  std::string formula_type = "a2t";
  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form hull count");
  formula_cmd->add_option("--type", formula_type, "Group type")->check(CLI::IsMember(kTypes));
  formula_cmd->add_option("--xy", formula.xy, "a2t chamber coordinates x,y");
  formula_cmd->add_option("--orient", formula.orientation, "a2t base orientation (up or down)")
      ->check(CLI::IsMember({"up", "down"}));
  formula_cmd->add_option("--abxy", formula.abxy, "c2t case parameters a,b,x,y");
  formula_cmd->add_option("--d", formula.d, "i2inf distance");
  formula_cmd->add_flag("--verify", formula.verify, "Cross-check against hull enumeration");

  ProveRequest prove;
  auto* prove_cmd = app.add_subcommand("prove", "Verify the polynomial identities and inequalities");
  prove_cmd->add_option("which", prove.which, "a2 or c2")->required()->check(CLI::IsMember({"a2", "c2"}));
  prove_cmd->add_option("--box", prove.box, "Brute-force bound for every parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cmd) {
      check.type = to_tag(check_type);
      check.timing = !no_timing;
      return cmd_check(check, std::cout);
    }
    if (*hull_cmd) {
      hull.type = to_tag(hull_type);
      return cmd_hull(hull, std::cout);
    }
    if (*formula_cmd) {
      formula.type = to_tag(formula_type);
      return cmd_formula(formula, std::cout);
    }
    return cmd_prove(prove, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
