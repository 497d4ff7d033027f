// suffcheck: batch front end for the axiom checkers and theorem harnesses.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "suff/commands.hpp"
#include "suff/error.hpp"
#include "suff/report.hpp"

namespace {

int emit(const suff::CommandResult& result, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << result.report.dump(2) << "\n";
  }
  if (result.exit_code == 2) {
    std::cerr << "error: " << result.report.at("error").at("message").get<std::string>() << "\n";
  } else {
    std::cout << suff::render_text(result.report);
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive axiom verification for sufficientarian ranking rules"};
  app.require_subcommand(1);

  suff::RunConfig config;
  config.workers = std::max(1U, std::thread::hardware_concurrency());
  std::string out_path;
  std::string mode = "quotient";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the JSON report to this file");
    sub->add_option("--workers", config.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  };
  auto domain_flags = [&](CLI::App* sub) {
    sub->add_option("--space", config.space, "Fixture name (B2, C3, G2, G3, D12, U5, U9, ABC) or space JSON file")
        ->required();
    sub->add_option("--agents", config.agents, "Number of agents (at least 2)");
  };

  auto* check = app.add_subcommand("check", "Materialize a rule and check axioms");
  domain_flags(check);
  check->add_option("--rule", config.rule, "Rule as inline JSON or a file path")->required();
  check->add_option("--axioms", config.axioms, "Comma separated axiom names, or 'all'");
  common(check);

  auto* derive = app.add_subcommand("derive", "Classify a rule's relation");
  domain_flags(derive);
  derive->add_option("--rule", config.rule, "Rule as inline JSON or a file path")->required();
  common(derive);

  auto* enumerate = app.add_subcommand("enumerate", "Stream every weak order and count it");
  domain_flags(enumerate);
  enumerate->add_option("--mode", mode, "direct or quotient")->check(CLI::IsMember({"direct", "quotient"}));
  common(enumerate);

  auto* search = app.add_subcommand("search", "Count weak orders with an axiom signature");
  domain_flags(search);
  search->add_option("--satisfy", config.satisfy, "Axioms that must hold");
  search->add_option("--violate", config.violate, "Axioms that must fail");
  search->add_option("--mode", mode, "direct or quotient")->check(CLI::IsMember({"direct", "quotient"}));
  common(search);

  auto* reproduce = app.add_subcommand("reproduce", "Run a theorem or example harness");
  std::string targets;
  for (const auto& t : suff::reproduce_targets()) targets += (targets.empty() ? "" : ", ") + t;
  reproduce->add_option("target", config.target, "One of: " + targets)->required();
  common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.mode = suff::enumeration_mode_from_string(mode);
  std::string command = app.get_subcommands().front()->get_name();
  return emit(suff::run_command(command, config), out_path);
}
