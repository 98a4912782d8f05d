#include <doctest.h>

#include "permrel/cli.hpp"
#include "permrel/embedding.hpp"
#include "permrel/errors.hpp"
#include "permrel/fractions.hpp"
#include "support.hpp"

using namespace permrel;
using namespace permrel::cli;

namespace {
  std::string const A_text = R"({"n": 3, "l": 2, "generators": [[2,3,1]]})";
  std::string const E_text = R"({"n": 3, "l": 2, "generators": [[2,1,3]]})";

  std::string error_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }

  bool mentions(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

  std::vector<std::string> keys(Json const& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out.push_back(it.key());
    }
    return out;
  }
}  // namespace

TEST_CASE("parse_instance") {
  auto const spec = parse_instance(A_text);
  CHECK(spec.n == 3);
  CHECK(spec.l == 2);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] == test::perm({2, 3, 1}));

  auto const cyc = parse_instance(R"j({"n": 3, "l": 2, "generators": ["(1 2 3)"]})j");
  CHECK(cyc.generators[0] == test::perm({2, 3, 1}));

  CHECK(mentions(error_of([] { parse_instance(R"({"n":3,"l":2,"generators":[[2,2,1]]})"); }),
                 "value 2 repeated"));
  CHECK(mentions(error_of([] { parse_instance(R"({"n":3,"l":2,"generators":[[2,2,1]]})"); }),
                 "generators[0]"));
  CHECK(mentions(error_of([] { parse_instance(R"({"n":3,"l":1,"generators":[[2,3,1]]})"); }),
                 "l must be >= 2"));
  CHECK(mentions(error_of([] { parse_instance(R"({"n":3,"l":2,"generators":[[2,3]]})"); }),
                 "generators[0]"));
  CHECK(mentions(error_of([] { parse_instance(R"({"n":3,"l":2,"generators":[[4,3,1]]})"); }),
                 "out of range"));
  CHECK_THROWS_AS(parse_instance("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_instance(R"({"l":2,"generators":[]})"), InvalidArgument);
  CHECK(mentions(error_of([] {
                   parse_instance(R"j({"n":3,"l":2,"generators":["(1 2 3)"]})j", false);
                 }),
                 "image arrays only"));
}

TEST_CASE("parse_permutation, parse_word, parse_field, parse_element") {
  CHECK(parse_permutation("(1 2)(3 4)", 4) == test::perm({2, 1, 4, 3}));
  CHECK(parse_permutation("()", 2) == Permutation::identity(2));
  CHECK(parse_permutation("[2, 1]", 2) == test::perm({2, 1}));
  CHECK_THROWS_AS(parse_permutation("(1 1)", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 2), InvalidArgument);

  CHECK(parse_word("1 2 3") == Word{1, 2, 3});
  CHECK(parse_word("10,2") == Word{10, 2});
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("1 a"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("0"), InvalidArgument);

  CHECK(parse_field("q").is_rational());
  CHECK(parse_field("p=3").characteristic() == 3);
  CHECK(parse_field("3").characteristic() == 3);
  CHECK_THROWS_AS(parse_field("p=4"), InvalidArgument);

  auto const inst = test::inst_A();
  Field const Q;
  auto const  e = parse_element("3/2 x1x2 + 1 - x3", inst, Q);
  CHECK(e.to_string() == "1 + 3/2*x1x2 - x3");
  CHECK(parse_element("x2 - x1", inst, Q)
        == AlgebraElement::monomial(inst, Q, {2}) - AlgebraElement::monomial(inst, Q, {1}));
  CHECK(parse_element("-2*x3", inst, Q) == AlgebraElement::monomial(inst, Q, {3}, -2));
  CHECK(parse_element("0", inst, Q).is_zero());
  CHECK_THROWS_AS(parse_element("x4", inst, Q), InvalidArgument);
  CHECK_THROWS_AS(parse_element("x1 +", inst, Q), InvalidArgument);
}

TEST_CASE("report envelope and key order") {
  auto const spec = parse_instance(A_text);
  auto const r    = run_command(spec, "classify", {});
  CHECK(keys(r) == std::vector<std::string>{"command", "instance", "result", "elapsed_ms"});
  CHECK(r["command"] == "classify");
  CHECK(keys(r["instance"]) == std::vector<std::string>{"n", "l", "generators"});
  auto const& c = r["result"];
  CHECK(c["abelian"] == true);
  CHECK(c["semiregular"] == true);
  CHECK(c["transitive"] == true);
  CHECK(c["regular"] == true);
  CHECK(c["cancellative"] == true);
  CHECK(r["elapsed_ms"].is_number_integer());
}

TEST_CASE("commands mirror the library") {
  auto const spec = parse_instance(A_text);
  auto const inst = build_instance(spec);

  CHECK(command_result(spec, "eq", {"1 2", "2 3"})["equal"] == true);
  CHECK(command_result(spec, "eq", {"1 2", "2 1"})["equal"] == words_equal(inst, {1, 2}, {2, 1}));

  auto const canon = command_result(spec, "canon", {"3 1"});
  CHECK(canon["canonical"] == Json(canonical_form(inst, {3, 1})));
  CHECK(canon["class_size"] == equivalence_class(inst, {3, 1}).size());

  CHECK(command_result(spec, "count", {"4"})["count"] == count_elements_of_length(inst, 4));

  auto const growth = command_result(spec, "growth", {"5"});
  CHECK(growth["growth"] == "linear");
  CHECK(growth["counts"] == Json(growth_classify(inst, 5).counts));

  auto const cancel = command_result(parse_instance(E_text), "cancel", {"4"});
  CHECK(cancel["witness_found"] == true);
  CHECK(cancel["witness"]["side"] == "left");
  CHECK(cancel["witness"]["a"] == Json(Word{3}));
  CHECK(cancel["predicted_cancellative"] == false);
  CHECK(command_result(spec, "cancel", {"3"})["witness"].is_null());

  auto const info = command_result(spec, "group-info", {});
  CHECK(info["torsion_order"] == 3);
  CHECK(info["central"] == true);
  CHECK(info["index"] == GroupOfFractions(inst).centrality_check().index);

  auto const embed = command_result(spec, "embed-check", {"3"});
  CHECK(embed["relation_check"] == true);
  CHECK(embed["injective"] == UniversalGroupAction(inst).injectivity_check(3));

  CommandOptions f3;
  f3.field = Field(3);
  auto const rad = command_result(spec, "radical", {}, f3);
  CHECK(rad["dimension"] == 2);
  CHECK(rad["expected_dimension"] == 2);
  CHECK(rad["all_nilpotent"] == true);
  CHECK(command_result(spec, "radical", {"2"})["dimension"] == 0);

  auto const nil = command_result(spec, "nilpotent", {"x2 - x1", "6"}, f3);
  CHECK(nil["nilpotent"] == true);
  CHECK(nil["exponent"] == 3);
  auto const nq = command_result(spec, "nilpotent", {"x2 - x1", "6"});
  CHECK(nq["nilpotent"] == false);
  CHECK(nq["k_max"] == 6);
}

TEST_CASE("command errors") {
  auto const spec = parse_instance(A_text);
  auto const e    = parse_instance(E_text);
  CHECK(mentions(error_of([&] { command_result(e, "group-info", {}); }),
                 "requires transitive abelian H; got transitive=false, semiregular=false"));
  CHECK_THROWS_AS(command_result(e, "embed-check", {"3"}), PreconditionError);
  CHECK_THROWS_AS(command_result(e, "radical", {"3"}), PreconditionError);
  CHECK_THROWS_AS(command_result(spec, "frobnicate", {}), InvalidArgument);
  CHECK_THROWS_AS(command_result(spec, "eq", {"1 2"}), InvalidArgument);
  CHECK_THROWS_AS(command_result(spec, "count", {"x"}), InvalidArgument);
  CommandOptions tiny;
  tiny.budgets.enumeration_cap = 5;
  CHECK_THROWS_AS(command_result(spec, "count", {"4"}, tiny), BudgetExceeded);
}

TEST_CASE("results are deterministic") {
  auto const spec = parse_instance(R"({"n": 4, "l": 3, "generators": [[2,3,4,1]]})");
  for (std::string cmd : {"classify", "group-info"}) {
    CHECK(command_result(spec, cmd, {}).dump() == command_result(spec, cmd, {}).dump());
  }
  CHECK(command_result(spec, "growth", {"4"}).dump() == command_result(spec, "growth", {"4"}).dump());
}
