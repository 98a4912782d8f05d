#ifndef PERMREL_CLI_HPP_
#define PERMREL_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permrel/algebra.hpp"
#include "permrel/permgroup.hpp"
#include "permrel/rewriting.hpp"
#include "permrel/scalar.hpp"

namespace permrel::cli {

  using Json = nlohmann::ordered_json;

  struct InstanceSpec {
    std::size_t              n = 0;
    std::size_t              l = 0;
    std::vector<Permutation> generators;
  };

  // JSON instance {"n": int, "l": int, "generators": [...]}.  A generator is
  // an image array; a string holding cycle notation such as "(1 2 3)" is
  // accepted only when allow_cycle_notation is set.  Errors name the field.
  InstanceSpec parse_instance(std::string_view text, bool allow_cycle_notation = true);

  // "[2,3,1]" or "(1 2 3)(4 5)".
  Permutation parse_permutation(std::string_view text, std::size_t n);

  // Space- or comma-separated 1-based letters: "1 2 3" is x_1 x_2 x_3.
  Word parse_word(std::string_view text);

  // Sum of terms such as "x2 - x1", "3/2 x1x2 + 1", "-2*x3".
  AlgebraElement parse_element(std::string_view      text,
                               MonoidInstance const& inst,
                               Field                 field);

  // "q" / "Q" / "0" for the rationals, "p=3" or "3" for F_3.
  Field parse_field(std::string_view text);

  MonoidInstance build_instance(InstanceSpec const& spec, Budgets budgets = {});

  Json to_json(InstanceSpec const& spec);

  struct CommandOptions {
    Budgets                    budgets;
    Field                      field;
    std::optional<std::size_t> k_max;
    std::uint64_t              sample_budget = 200'000;
  };

  // Dispatches one of: classify, eq, canon, count, growth, cancel,
  // group-info, embed-check, radical, nilpotent.  The report is
  // {"command", "instance", "result", "elapsed_ms"}.  Throws permrel::Error
  // on bad arguments or unmet preconditions.
  Json run_command(InstanceSpec const&             spec,
                   std::string const&              command,
                   std::vector<std::string> const& args,
                   CommandOptions const&           options = {});

  // The result payload alone (run_command minus the envelope).
  Json command_result(InstanceSpec const&             spec,
                      std::string const&              command,
                      std::vector<std::string> const& args,
                      CommandOptions const&           options = {});

}  // namespace permrel::cli

#endif  // PERMREL_CLI_HPP_
