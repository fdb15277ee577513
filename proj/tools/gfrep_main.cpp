// gfrep: exact computations with representations of finite groups over
// GF(q) -- intertwining numbers, induction, irreducibility tests for
// induced modules, and the little-groups classification for semidirect
// products N x| H.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gfrep/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact representation theory over finite fields"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string report_path;
  gfrep::CommandArgs args;
  std::string subgroup_csv;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("problem", problem_path, "problem file (JSON)")
        ->required();
    cmd->add_option("--seed", args.seed, "random seed (default 0)");
    cmd->add_option("--report", report_path, "write the machine report here");
    cmd->add_flag("--oracle", args.oracle,
                  "force exhaustive-spin cross-checks where feasible");
    return cmd;
  };
  auto add_rep = [&](CLI::App* cmd, bool two = false) {
    cmd->add_option("--rep", args.rep, "named representation")->required();
    if (two)
      cmd->add_option("--rep2", args.rep2, "second named representation")
          ->required();
    cmd->add_option("--subgroup", subgroup_csv,
                    "comma-separated element words; restricts the named "
                    "representation(s) first");
    return cmd;
  };

  add_common(app.add_subcommand("classify",
                                "little-groups classification of Irr(G)"));
  add_common(app.add_subcommand("verify",
                                "run the invariant suite on this instance"));
  add_rep(add_common(app.add_subcommand("irr", "irreducibility test")));
  add_rep(add_common(app.add_subcommand("intertwine",
                                        "intertwining number i(rep, rep2)")),
          true);
  add_rep(add_common(app.add_subcommand("induce", "induce --rep up to G")));
  add_rep(add_common(
      app.add_subcommand("mackey", "double-coset sufficiency report")));
  add_rep(add_common(
      app.add_subcommand("match", "match an irreducible against classify")));

  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  if (!subgroup_csv.empty()) {
    std::stringstream ss(subgroup_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) args.subgroup_words.push_back(tok);
  }

  try {
    gfrep::ProblemSpec spec = gfrep::load_problem(problem_path);
    gfrep::Report report = gfrep::run_command(command, spec, args);
    std::cout << report.human;
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "cannot write report to " << report_path << "\n";
        return 2;
      }
      out << report.machine.dump(2) << "\n";
    }
    return 0;
  } catch (const gfrep::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const gfrep::HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const gfrep::CertificationError& e) {
    std::cerr << "internal certification failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
