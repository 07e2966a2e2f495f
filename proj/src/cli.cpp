#include "statmon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "statmon/errors.hpp"
#include "statmon/extremal.hpp"
#include "statmon/monogamy.hpp"
#include "statmon/npartite.hpp"
#include "statmon/selftest.hpp"
#include "statmon/serialization.hpp"

namespace statmon {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

// A named catalog state, or else a state JSON file.
PureState resolve_state(const std::string& source) {
  try {
    return named_state(NamedState::parse(source));
  } catch (const ValidationError&) {
    std::ifstream probe(source);
    if (!probe) throw ValidationError("'" + source + "' is neither a state name nor a readable file");
  }
  return state_from_json(read_json_file(source));
}

Eigen::Vector3d parse_triple(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw ValidationError("--v expects three numbers a,b,c");
    }
    if (used != item.size()) throw ValidationError("--v expects three numbers a,b,c");
  }
  if (values.size() != 3) throw ValidationError("--v expects three numbers a,b,c");
  return {values[0], values[1], values[2]};
}

int infer_boxes(const std::string& fix, const std::string& objective) {
  int highest = 2;
  for (const std::string* text : {&fix, &objective}) {
    for (char c : *text) {
      const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
      if (upper >= 'A' && upper <= 'Z') highest = std::max(highest, upper - 'A' + 1);
    }
  }
  return std::max(highest, 3);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exchange-statistics monogamy toolkit"};
  app.require_subcommand(1, 1);

  std::string state_name;
  std::string state_file;
  std::string state_out;
  auto* state_cmd = app.add_subcommand("state", "Resolve a named or stored state and print its JSON");
  auto* name_opt = state_cmd->add_option("--name", state_name, "sym_plus, antisym_minus, eq5, eq6, phi_eq23, "
                                                                "nontransitive_3_5, chi:theta,phi,s1,s2");
  auto* file_opt = state_cmd->add_option("--file", state_file, "State JSON file");
  name_opt->excludes(file_opt);
  state_cmd->add_option("--out", state_out, "Write JSON here instead of stdout");

  std::string v_source;
  auto* v_cmd = app.add_subcommand("v", "Print the v-vector of a state");
  v_cmd->add_option("--state", v_source, "State name or JSON file")->required();

  std::string check_v;
  int theta_grid = kDefaultThetaGrid;
  auto* check_cmd = app.add_subcommand("check", "Test a tripartite v-vector against the monogamy region");
  check_cmd->add_option("--v", check_v, "v_AB,v_BC,v_AC")->required();
  check_cmd->add_option("--theta-grid", theta_grid, "Grid size for the theta-family check")
      ->check(CLI::PositiveNumber);

  int theta_steps = 0;
  int phi_steps = 0;
  std::string mesh_out;
  bool no_landmarks = false;
  auto* surface_cmd = app.add_subcommand("surface", "Export the region boundary mesh as CSV");
  surface_cmd->add_option("--theta-steps", theta_steps)->required();
  surface_cmd->add_option("--phi-steps", phi_steps)->required();
  surface_cmd->add_option("--out", mesh_out, "CSV path (stdout if omitted)");
  surface_cmd->add_flag("--no-landmarks", no_landmarks, "Grid points only");

  std::uint64_t audit_samples = 0;
  std::uint64_t audit_seed = 0;
  bool audit_mixed = false;
  auto* audit_cmd = app.add_subcommand("audit", "Monte Carlo soundness audit of the region");
  audit_cmd->add_option("--samples", audit_samples)->required()->check(CLI::PositiveNumber);
  audit_cmd->add_option("--seed", audit_seed)->required();
  audit_cmd->add_flag("--mixed", audit_mixed, "Also draw as many random two-state mixtures");

  std::string fix;
  std::string objective_text;
  int extremal_n = 0;
  auto* extremal_cmd = app.add_subcommand("extremal", "Maximize sum c_XY v_XY, optionally with v = +-1 constraints");
  extremal_cmd->add_option("--fix", fix, "e.g. AB=1,CD=1");
  extremal_cmd->add_option("--objective", objective_text, "e.g. AB:1,BC:-1")->required();
  extremal_cmd->add_option("--n", extremal_n, "Number of boxes (inferred from labels, at least 3)");

  std::string scenario_file;
  auto* scenario_cmd = app.add_subcommand("scenario", "Bound a scenario graph");
  scenario_cmd->add_option("--file", scenario_file)->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (state_cmd->parsed()) {
      if (state_name.empty() == state_file.empty()) throw ValidationError("state needs exactly one of --name or --file");
      const PureState state = state_name.empty() ? state_from_json(read_json_file(state_file))
                                                 : named_state(NamedState::parse(state_name));
      const std::string text = state_to_json(state).dump(2) + "\n";
      if (state_out.empty()) {
        out << text;
      } else {
        write_text_file(state_out, text);
      }
      return kExitOk;
    }
    if (v_cmd->parsed()) {
      emit(out, v_to_json(v_vector(resolve_state(v_source))));
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      const auto result = region_check(parse_triple(check_v), theta_grid);
      emit(out, region_check_to_json(result));
      return result.inside ? kExitOk : kExitOutside;
    }
    if (surface_cmd->parsed()) {
      const auto mesh = surface_mesh(theta_steps, phi_steps, !no_landmarks);
      if (mesh_out.empty()) {
        write_mesh_csv(mesh, out);
      } else {
        std::ostringstream csv;
        write_mesh_csv(mesh, csv);
        write_text_file(mesh_out, csv.str());
        emit(out, Json{{"out", mesh_out},
                       {"points", mesh.points.size()},
                       {"grid_points", mesh.grid_points},
                       {"landmark_points", mesh.landmark_points},
                       {"duplicates", mesh.duplicates}});
      }
      return kExitOk;
    }
    if (audit_cmd->parsed()) {
      const auto report = region_audit({audit_samples, audit_mixed ? audit_samples : 0, audit_seed});
      emit(out, audit_to_json(report));
      return report.violations == 0 ? kExitOk : kExitOutside;
    }
    if (extremal_cmd->parsed()) {
      const int n = extremal_n > 0 ? extremal_n : infer_boxes(fix, objective_text);
      const auto objective = Objective::parse(n, objective_text);
      const auto constraints = parse_constraints(fix);
      emit(out, extremal_to_json(constrained_extremal(constraints, objective)));
      return kExitOk;
    }
    if (scenario_cmd->parsed()) {
      const auto graph = scenario_from_json(read_json_file(scenario_file));
      const auto bound = scenario_report(graph);
      emit(out, scenario_bound_to_json(graph, bound));
      return bound.feasible ? kExitOk : kExitOutside;
    }
    if (selftest_cmd->parsed()) {
      const auto checks = run_selftest();
      std::size_t failed = 0;
      for (const auto& c : checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.module << ": " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
        if (!c.passed) ++failed;
      }
      out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
      return failed == 0 ? kExitOk : kExitInvalid;
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitOutside;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace statmon
