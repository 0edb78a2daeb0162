// Scenario runner and exterior-calculus utility CLI.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 parse or validation
// error. All output is exact; no floating point is ever printed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pforms/pforms.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pforms::ParseError(pforms::codes::BAD_JSON, path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pforms::Json load_json(const std::string& path) {
  pforms::Json j = pforms::Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded())
    throw pforms::ParseError(pforms::codes::BAD_JSON, path, "not valid JSON");
  return j;
}

pforms::PolyForm load_form(const std::string& path) {
  return pforms::io::form_from_json(load_json(path), path);
}

int run_scenario_file(const std::string& path, const std::string& format,
                      std::optional<std::uint64_t> seed_override) {
  pforms::ScenarioFile sc = pforms::parse_scenario(read_file(path));
  if (seed_override) sc.seed = *seed_override;
  pforms::Report rep = pforms::run(sc);
  std::cout << pforms::emit(rep, format == "text" ? pforms::ReportFormat::Text
                                                  : pforms::ReportFormat::Json);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior calculus and p-form electrodynamics scenario runner"};
  app.require_subcommand(1);

  std::string form_path, second_path, chain_path, scenario_path, fields_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed_override;

  auto* d_cmd = app.add_subcommand("d", "exterior derivative of a form file");
  d_cmd->add_option("form", form_path, "form JSON file")->required();

  auto* wedge_cmd = app.add_subcommand("wedge", "exterior product of two form files");
  wedge_cmd->add_option("a", form_path, "left form JSON file")->required();
  wedge_cmd->add_option("b", second_path, "right form JSON file")->required();

  auto* int_cmd = app.add_subcommand("integrate", "integrate a form over a chain");
  int_cmd->add_option("form", form_path, "form JSON file")->required();
  int_cmd->add_option("chain", chain_path, "chain JSON file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a scenario file and report");
  verify_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  verify_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--seed", seed_override, "override the scenario seed");

  auto* em_cmd = app.add_subcommand("em", "electrodynamics commands");
  em_cmd->require_subcommand(1);
  auto* expand_cmd = em_cmd->add_subcommand("expand", "classical residuals of a fields file");
  expand_cmd->add_option("fields", fields_path, "classical fields JSON file")->required();
  expand_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  auto* pform_cmd = em_cmd->add_subcommand("pform", "run a pform-em scenario file");
  pform_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  pform_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  pform_cmd->add_option("--seed", seed_override, "override the scenario seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (d_cmd->parsed()) {
      pforms::PolyForm w = load_form(form_path);
      std::cout << pforms::io::form_to_json(pforms::exterior_derivative(w)).dump(2) << "\n";
      return 0;
    }
    if (wedge_cmd->parsed()) {
      pforms::PolyForm a = load_form(form_path);
      pforms::PolyForm b = load_form(second_path);
      std::cout << pforms::io::form_to_json(pforms::wedge_form(a, b)).dump(2) << "\n";
      return 0;
    }
    if (int_cmd->parsed()) {
      pforms::PolyForm w = load_form(form_path);
      pforms::Chain c = pforms::io::chain_from_json(load_json(chain_path), chain_path);
      std::cout << pforms::integrate(w, c).str() << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) return run_scenario_file(scenario_path, format, seed_override);
    if (em_cmd->parsed() && pform_cmd->parsed()) {
      pforms::ScenarioFile sc = pforms::parse_scenario(read_file(scenario_path));
      if (sc.kind != pforms::ScenarioKind::PFormEm)
        throw pforms::ParseError(pforms::codes::BAD_VALUE, scenario_path,
                                 "em pform needs a pform-em scenario");
      if (seed_override) sc.seed = *seed_override;
      pforms::Report rep = pforms::run(sc);
      std::cout << pforms::emit(rep, format == "text" ? pforms::ReportFormat::Text
                                                      : pforms::ReportFormat::Json);
      return rep.all_pass() ? 0 : 1;
    }
    if (em_cmd->parsed() && expand_cmd->parsed()) {
      // Accepts either a bare fields object or a full classical-em scenario.
      pforms::Json j = load_json(fields_path);
      pforms::ScenarioFile sc;
      if (j.contains("kind")) {
        sc = pforms::parse_scenario(read_file(fields_path));
        if (sc.kind != pforms::ScenarioKind::ClassicalEm)
          throw pforms::ParseError(pforms::codes::BAD_VALUE, fields_path,
                                   "em expand needs a classical-em scenario");
      } else {
        sc.schema_version = "1";
        sc.id = fields_path;
        sc.kind = pforms::ScenarioKind::ClassicalEm;
        sc.fields = pforms::io::classical_fields_from_json(j, fields_path);
      }
      pforms::Report rep = pforms::run(sc);
      std::cout << pforms::emit(rep, format == "text" ? pforms::ReportFormat::Text
                                                      : pforms::ReportFormat::Json);
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const pforms::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
