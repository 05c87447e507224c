// Command-line front end: enumeration, homology, collapsing, point
// classification, the verification battery, and dot/json export.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pants/chords.hpp"
#include "pants/config.hpp"
#include "pants/errors.hpp"
#include "pants/pants.hpp"
#include "pants/partitions.hpp"
#include "pants/poset.hpp"
#include "pants/verify.hpp"

namespace {

using nlohmann::json;

struct CellArgs {
  std::string sigma = "<0|1>";
  std::string J;  // empty = full ground set
};

pants::CyclicPartition parse_sigma(const CellArgs& args) {
  return pants::CyclicPartition::parse(args.sigma);
}

pants::IndexSet parse_support(const CellArgs& args, const pants::CyclicPartition& sigma) {
  return args.J.empty() ? pants::IndexSet::full(sigma.n())
                        : pants::IndexSet::parse(args.J);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw pants::argument_error("cannot open output file: " + out_path);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

json betti_json(const pants::BettiVector& b) {
  json torsion = json::array();
  for (const auto& degree : b.torsion) {
    json factors = json::array();
    for (const auto& t : degree) factors.push_back(t.str());
    torsion.push_back(std::move(factors));
  }
  return json{{"summary", b.str()}, {"ranks", b.ranks}, {"torsion", torsion}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cell structures of complex and phase-tropical pairs of pants"};
  app.require_subcommand(1);

  std::string out_path, config_path;
  bool timing = false;
  app.add_option("--out", out_path, "write the result to this file instead of stdout");
  app.add_option("--config", config_path, "key=value limits file (see pants/config.hpp)");
  app.add_flag("--timing", timing, "include wall-clock timings in reports");

  // enumerate ------------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "list partitions, nets, cells, or pieces");
  std::string what;
  int enum_n = 1;
  CellArgs enum_cell;
  cmd_enum->add_option("what", what, "partitions | nets | cells | pieces")
      ->required()
      ->check(CLI::IsMember({"partitions", "nets", "cells", "pieces"}));
  cmd_enum->add_option("--n", enum_n, "ground set is {0..n}");
  cmd_enum->add_option("--sigma", enum_cell.sigma, "restrict pieces to this cell");
  cmd_enum->add_option("--J", enum_cell.J, "support of the cell, digits");

  // homology -------------------------------------------------------------
  auto* cmd_hom = app.add_subcommand("homology", "homology of an assembled complex");
  std::string hom_target = "pants", hom_coeff = "z";
  int hom_n = 2;
  CellArgs hom_cell;
  cmd_hom->add_option("--target", hom_target, "pants | cell | l")
      ->check(CLI::IsMember({"pants", "cell", "l"}));
  cmd_hom->add_option("--n", hom_n, "ground set for --target pants");
  cmd_hom->add_option("--sigma", hom_cell.sigma, "cell partition for cell/l targets");
  cmd_hom->add_option("--J", hom_cell.J, "cell support, digits (default: full)");
  cmd_hom->add_option("--coeff", hom_coeff, "z | z2")->check(CLI::IsMember({"z", "z2"}));

  // collapse ---------------------------------------------------------------
  auto* cmd_col = app.add_subcommand("collapse", "greedy free-pair collapsing");
  std::string col_target = "l", col_goal = "none";
  int col_n = 2;
  CellArgs col_cell;
  cmd_col->add_option("--target", col_target, "pants | cell | l")
      ->check(CLI::IsMember({"pants", "cell", "l"}));
  cmd_col->add_option("--n", col_n, "ground set for --target pants");
  cmd_col->add_option("--sigma", col_cell.sigma, "cell partition for cell/l targets");
  cmd_col->add_option("--J", col_cell.J, "cell support, digits (default: full)");
  cmd_col->add_option("--goal", col_goal, "none | point | circle")
      ->check(CLI::IsMember({"none", "point", "circle"}));

  // classify-point ---------------------------------------------------------
  auto* cmd_cls = app.add_subcommand("classify-point", "alcove containing an angle point");
  std::string theta_text;
  cmd_cls->add_option("--theta", theta_text, "angles in half-turns, e.g. 0,1/2,1")
      ->required();

  // verify -------------------------------------------------------------------
  auto* cmd_ver = app.add_subcommand("verify", "run the structural check battery");
  int ver_n = 2;
  std::vector<std::string> ver_checks;
  std::uint64_t ver_seed = 0;
  bool ver_seed_set = false, ver_parallel = false;
  std::string junit_path;
  cmd_ver->add_option("--n", ver_n, "ground set is {0..n}");
  cmd_ver->add_option("--checks", ver_checks, "subset of checks (default: all)")
      ->delimiter(',');
  cmd_ver->add_option("--seed", ver_seed, "sampling seed")
      ->each([&](const std::string&) { ver_seed_set = true; });
  cmd_ver->add_flag("--parallel", ver_parallel, "run checks on separate threads");
  cmd_ver->add_option("--junit", junit_path, "also write a JUnit XML report here");

  // export --------------------------------------------------------------------
  auto* cmd_exp = app.add_subcommand("export", "dump a poset as dot or json");
  std::string exp_target = "cells", exp_format = "dot";
  int exp_n = 1;
  CellArgs exp_cell;
  cmd_exp->add_option("--target", exp_target, "cells | pieces | cell | l | roof")
      ->check(CLI::IsMember({"cells", "pieces", "cell", "l", "roof"}));
  cmd_exp->add_option("--n", exp_n, "ground set for cells/pieces targets");
  cmd_exp->add_option("--sigma", exp_cell.sigma, "cell partition for cell/l targets");
  cmd_exp->add_option("--J", exp_cell.J, "cell support, digits (default: full)");
  cmd_exp->add_option("--format", exp_format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}));

  for (CLI::App* sub : {cmd_enum, cmd_hom, cmd_col, cmd_cls, cmd_ver, cmd_exp}) {
    sub->fallthrough();  // allow --out/--config/--timing after the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    pants::Config cfg =
        config_path.empty() ? pants::Config::from_env() : pants::Config::load_file(config_path);
    cfg.validate();

    if (app.got_subcommand(cmd_enum)) {
      json out;
      if (what == "partitions") {
        json items = json::array();
        for (const auto& p : pants::enumerate_cyclic_partitions(enum_n, cfg)) {
          items.push_back(p.str());
        }
        out = {{"n", enum_n}, {"count", items.size()}, {"partitions", items}};
      } else if (what == "nets") {
        json items = json::array();
        for (const auto& nu : pants::enumerate_nets(enum_n, cfg)) items.push_back(nu.str());
        out = {{"n", enum_n}, {"count", items.size()}, {"nets", items}};
      } else if (what == "cells") {
        const pants::PantsComplex pc = pants::enumerate_pants_cells(enum_n, cfg);
        out = {{"n", enum_n},
               {"count", pc.cells.size()},
               {"poset", pants::poset_json(pc.poset)}};
      } else if (cmd_enum->count("--sigma") || cmd_enum->count("--J")) {
        const auto sigma = parse_sigma(enum_cell);
        const auto J = parse_support(enum_cell, sigma);
        const pants::CellPieces cp = pants::pieces_of_cell(sigma, J, cfg);
        out = {{"sigma", sigma.str()},
               {"J", J.str()},
               {"count", cp.pieces.size()},
               {"poset", pants::poset_json(cp.poset)}};
      } else {
        const pants::PhaseComplex ph = pants::assemble_phase_tropical(enum_n, cfg);
        out = {{"n", enum_n},
               {"count", ph.pieces.size()},
               {"strata", ph.stratum_labels},
               {"poset", pants::poset_json(ph.poset)}};
      }
      emit_json(out, out_path);
      return 0;
    }

    const auto coeff_of = [](const std::string& c) {
      return c == "z2" ? pants::Coefficients::z2 : pants::Coefficients::integers;
    };
    const auto target_poset = [&cfg](const std::string& target, int n,
                                     const CellArgs& cell) -> pants::FacePoset {
      if (target == "pants") return pants::assemble_phase_tropical(n, cfg).poset;
      const auto sigma = parse_sigma(cell);
      const auto J = parse_support(cell, sigma);
      if (target == "cell") return pants::pieces_of_cell(sigma, J, cfg).poset;
      return pants::L_complex(sigma, J);
    };

    if (app.got_subcommand(cmd_hom)) {
      const pants::FacePoset poset = target_poset(hom_target, hom_n, hom_cell);
      pants::HomologyOptions hopt;
      hopt.snf_nonzero_guard = cfg.snf_nonzero_guard;
      const pants::BettiVector b =
          pants::poset_homology(poset, coeff_of(hom_coeff), hopt);
      json out{{"target", hom_target},
               {"coefficients", hom_coeff == "z2" ? "Z/2" : "Z"},
               {"elements", poset.size()},
               {"f_vector", poset.f_vector()},
               {"euler", pants::euler_characteristic(poset)},
               {"homology", betti_json(b)}};
      if (hom_target == "pants") out["n"] = hom_n;
      emit_json(out, out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_col)) {
      const pants::FacePoset poset = target_poset(col_target, col_n, col_cell);
      json out{{"target", col_target}, {"elements", poset.size()}};
      if (col_goal == "none") {
        const pants::FacePoset core = pants::collapse(poset);
        out["core"] = pants::poset_json(core);
        out["core_elements"] = core.size();
      } else {
        const auto goal = col_goal == "point" ? pants::is_single_point : pants::is_circle;
        const pants::CollapseResult res =
            pants::collapse_until(poset, goal, cfg.collapse_retries, cfg.seed);
        out["goal"] = col_goal;
        out["achieved"] = res.achieved;
        out["attempts"] = res.attempts;
        out["core"] = pants::poset_json(res.core);
        out["core_elements"] = res.core.size();
      }
      emit_json(out, out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_cls)) {
      const pants::AnglePoint theta = pants::AnglePoint::parse(theta_text);
      const pants::Net nu = pants::classify_point(theta, cfg);
      const json out{{"theta", theta.str()},
                     {"partition", nu.base().str()},
                     {"net", nu.str()},
                     {"alcove_dim", pants::alcove_dim(nu)},
                     {"relations", pants::alcove_relations(nu).str()}};
      emit_json(out, out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_ver)) {
      if (ver_seed_set) cfg.seed = ver_seed;
      const auto reports =
          pants::run_all(ver_n, ver_checks, cfg.seed, cfg, ver_parallel);
      json out = pants::reports_json(reports, timing);
      out["n"] = ver_n;
      if (!junit_path.empty()) emit(pants::junit_xml(reports), junit_path);
      emit_json(out, out_path);
      return pants::all_passed(reports) ? 0 : 1;
    }

    if (app.got_subcommand(cmd_exp)) {
      pants::FacePoset poset;
      if (exp_target == "cells") {
        poset = pants::enumerate_pants_cells(exp_n, cfg).poset;
      } else if (exp_target == "pieces") {
        poset = pants::assemble_phase_tropical(exp_n, cfg).poset;
      } else if (exp_target == "roof") {
        poset = pants::ober_cell_2x2().ober;
      } else {
        poset = target_poset(exp_target, exp_n, exp_cell);
      }
      if (exp_format == "dot") {
        emit(pants::to_dot(poset), out_path);
      } else {
        emit_json(pants::poset_json(poset), out_path);
      }
      return 0;
    }

    throw pants::argument_error("no subcommand selected");
  } catch (const pants::argument_error& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return 2;
  } catch (const pants::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
