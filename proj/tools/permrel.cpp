// permrel: command-line front end for the S_{n,l}(H) library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permrel/cli.hpp"
#include "permrel/errors.hpp"

namespace {

  void print_plain(permrel::cli::Json const& report) {
    std::cout << report["command"].get<std::string>() << '\n';
    for (auto const& [key, value] : report["result"].items()) {
      std::cout << "  " << key << ": " << value.dump() << '\n';
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem, cancellativity, group of fractions, embedding and "
               "radical computations for monoids defined by permutation relations"};

  std::string              command;
  std::vector<std::string> args;
  std::string              instance_file;
  std::size_t              inline_n = 0;
  std::size_t              inline_l = 0;
  std::vector<std::string> inline_gens;
  std::string              field_text = "q";
  bool                     as_json    = false;

  permrel::cli::CommandOptions options;
  std::uint64_t                budget    = options.budgets.enumeration_cap;
  std::size_t                  class_cap = options.budgets.class_cap;
  std::size_t                  k_max     = 8;

  app.add_option("command", command,
                 "classify | eq | canon | count | growth | cancel | group-info | "
                 "embed-check | radical | nilpotent")
      ->required();
  app.add_option("args", args, "command arguments; words are quoted, e.g. \"1 2 3\"");
  auto* file_opt = app.add_option("--instance", instance_file, "instance JSON file");
  app.add_option("--n", inline_n, "degree (inline instance)")->excludes(file_opt);
  app.add_option("--l", inline_l, "relation length (inline instance)")->excludes(file_opt);
  app.add_option("--gen", inline_gens,
                 "generator as image array \"[2,3,1]\" or cycles \"(1 2 3)\"; repeatable")
      ->excludes(file_opt);
  app.add_option("--budget", budget, "enumeration cap (words per length)");
  app.add_option("--class-cap", class_cap, "equivalence class size cap");
  app.add_option("--field", field_text, "q for the rationals, p=<prime> for F_p");
  app.add_option("--kmax", k_max, "default power bound for nilpotent");
  app.add_option("--samples", options.sample_budget, "tuple budget for embed-check");
  app.add_flag("--json", as_json, "emit the full JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    permrel::cli::InstanceSpec spec;
    if (!instance_file.empty()) {
      std::ifstream in(instance_file);
      if (!in) {
        throw permrel::InvalidArgument("cannot open " + instance_file);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      spec = permrel::cli::parse_instance(buffer.str(), false);
    } else {
      if (inline_n == 0) {
        throw permrel::InvalidArgument("give --instance <file> or --n/--l/--gen");
      }
      permrel::cli::Json j{{"n", inline_n}, {"l", inline_l}, {"generators", inline_gens}};
      spec = permrel::cli::parse_instance(j.dump(), true);
    }
    options.budgets.enumeration_cap = budget;
    options.budgets.class_cap       = class_cap;
    options.field                   = permrel::cli::parse_field(field_text);
    options.k_max                   = k_max;

    auto const report = permrel::cli::run_command(spec, command, args, options);
    if (as_json) {
      std::cout << report.dump(2) << '\n';
    } else {
      print_plain(report);
    }
  } catch (permrel::Error const& e) {
    std::cerr << "permrel: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
