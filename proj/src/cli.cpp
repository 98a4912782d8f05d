#include "permrel/cli.hpp"

#include <algorithm>

#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "permrel/embedding.hpp"
#include "permrel/errors.hpp"
#include "permrel/fractions.hpp"

namespace permrel::cli {

  namespace {
    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

    std::vector<std::uint64_t> parse_integers(std::string_view text) {
      std::vector<std::uint64_t> out;
      std::size_t                i = 0;
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw InvalidArgument("unexpected character '" + std::string(1, c)
                                + "' in '" + std::string(text) + "'");
        }
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          ++i;
        }
        out.push_back(v);
      }
      return out;
    }

    Permutation from_images(std::vector<std::uint64_t> const& values, std::size_t n) {
      if (values.size() != n) {
        throw InvalidArgument("image array has " + std::to_string(values.size())
                              + " entries, expected n = " + std::to_string(n));
      }
      return Permutation(std::vector<point_type>(values.begin(), values.end()));
    }

    std::size_t parse_size(std::string const& text, std::string const& what) {
      auto v = parse_integers(text);
      if (v.size() != 1) {
        throw InvalidArgument(what + " must be a single non-negative integer, got '"
                              + text + "'");
      }
      return static_cast<std::size_t>(v.front());
    }

    Json word_json(Word const& w) {
      return Json(std::vector<std::uint64_t>(w.begin(), w.end()));
    }

    Json classification_json(GroupClassification const& c) {
      Json orbits = Json::array();
      for (auto const& o : c.orbits) {
        orbits.push_back(std::vector<std::uint64_t>(o.begin(), o.end()));
      }
      return Json{{"abelian", c.is_abelian},
                  {"semiregular", c.is_semiregular},
                  {"transitive", c.is_transitive},
                  {"regular", c.is_regular},
                  {"cancellative", c.is_semiregular && c.is_abelian},
                  {"orbits", orbits},
                  {"orbit_representatives",
                   std::vector<std::uint64_t>(c.orbit_representatives.begin(),
                                              c.orbit_representatives.end())}};
    }

    std::string tuple_string(PermutationGroup const& H, TorsionTuple const& t) {
      std::string out = "(";
      for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (i != 0) {
          out += ", ";
        }
        out += H.element(t.components[i]).to_cycle_string();
      }
      return out + ")";
    }

    void expect_args(std::string const&              command,
                     std::vector<std::string> const& args,
                     std::size_t                     count,
                     std::string const&              usage) {
      if (args.size() != count) {
        throw InvalidArgument(command + " expects " + usage);
      }
    }

    Json nilpotency_json(NilpotencyReport const& r) {
      return Json{{"nilpotent", r.nilpotent},
                  {"exponent", r.nilpotent ? Json(r.exponent) : Json(nullptr)},
                  {"k_max", r.k_max},
                  {"homogeneous", r.homogeneous}};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  Permutation parse_permutation(std::string_view text, std::size_t n) {
    std::string const s = trim(text);
    if (s.empty()) {
      throw InvalidArgument("empty permutation");
    }
    if (s.front() == '[') {
      if (s.back() != ']') {
        throw InvalidArgument("unterminated image array '" + s + "'");
      }
      return from_images(parse_integers(std::string_view(s).substr(1, s.size() - 2)), n);
    }
    if (s.front() != '(') {
      throw InvalidArgument("expected an image array or cycle notation, got '" + s + "'");
    }
    std::vector<point_type> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<point_type>(i + 1);
    }
    std::vector<bool> moved(n + 1, false);
    std::size_t       i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      if (s[i] != '(') {
        throw InvalidArgument("malformed cycle notation '" + s + "'");
      }
      auto const close = s.find(')', i);
      if (close == std::string::npos) {
        throw InvalidArgument("unterminated cycle in '" + s + "'");
      }
      auto const cycle = parse_integers(std::string_view(s).substr(i + 1, close - i - 1));
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        auto const a = cycle[k];
        if (a < 1 || a > n) {
          throw InvalidArgument("value " + std::to_string(a) + " out of range 1.."
                                + std::to_string(n));
        }
        if (moved[a]) {
          throw InvalidArgument("value " + std::to_string(a) + " repeated");
        }
        moved[a]      = true;
        images[a - 1] = static_cast<point_type>(cycle[(k + 1) % cycle.size()]);
      }
      i = close + 1;
    }
    return Permutation(std::move(images));
  }

  Word parse_word(std::string_view text) {
    auto const v = parse_integers(text);
    if (std::find(v.begin(), v.end(), 0) != v.end()) {
      throw InvalidArgument("letters are 1-based, got 0 in '" + std::string(text) + "'");
    }
    return Word(v.begin(), v.end());
  }

  Field parse_field(std::string_view text) {
    std::string s = trim(text);
    if (s == "q" || s == "Q" || s == "0") {
      return Field::rationals();
    }
    if (s.rfind("p=", 0) == 0) {
      s = s.substr(2);
    }
    auto const v = parse_integers(s);
    if (v.size() != 1 || s.empty()) {
      throw InvalidArgument("field must be 'q' or 'p=<prime>', got '"
                            + std::string(text) + "'");
    }
    return Field(v.front());
  }

  AlgebraElement parse_element(std::string_view      text,
                               MonoidInstance const& inst,
                               Field                 field) {
    AlgebraElement out(field);
    std::string    s = trim(text);
    std::size_t    i = 0;
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
    };
    auto fail = [&](std::string const& why) {
      throw InvalidArgument("malformed element '" + s + "': " + why);
    };
    if (s.empty()) {
      fail("empty");
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (i >= s.size()) {
        break;
      }
      bool negative = false;
      if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;

      Rational    coeff   = 1;
      bool        has_num = false;
      std::size_t start   = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) {
        ++i;
      }
      if (i > start) {
        coeff   = parse_rational(s.substr(start, i - start));
        has_num = true;
        skip_ws();
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip_ws();
        }
      }
      Word w;
      while (i < s.size() && s[i] == 'x') {
        ++i;
        std::size_t const d = i;
        std::uint64_t     v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
          ++i;
        }
        if (i == d) {
          fail("'x' must be followed by an index");
        }
        w.push_back(static_cast<letter_type>(v));
        if (i < s.size() && s[i] == '*' && i + 1 < s.size() && s[i + 1] == 'x') {
          ++i;
        }
      }
      if (!has_num && w.empty()) {
        fail("empty term");
      }
      out.add_term(inst, w, Scalar(field, negative ? -coeff : coeff));
    }
    return out;
  }

  InstanceSpec parse_instance(std::string_view text, bool allow_cycle_notation) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw InvalidArgument(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
      throw InvalidArgument("instance must be a JSON object");
    }
    auto get_int = [&](char const* key) -> std::int64_t {
      if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InvalidArgument(std::string("field '") + key + "' must be an integer");
      }
      return j[key].get<std::int64_t>();
    };
    InstanceSpec spec;
    auto const   n = get_int("n");
    auto const   l = get_int("l");
    if (n < 1) {
      throw InvalidArgument("field 'n': n must be >= 1");
    }
    if (l < 2) {
      throw InvalidArgument("field 'l': l must be >= 2");
    }
    spec.n = static_cast<std::size_t>(n);
    spec.l = static_cast<std::size_t>(l);
    if (!j.contains("generators") || !j["generators"].is_array()) {
      throw InvalidArgument("field 'generators' must be an array");
    }
    auto const& gens = j["generators"];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::string const where = "generators[" + std::to_string(g) + "]: ";
      try {
        if (gens[g].is_array()) {
          std::vector<std::uint64_t> images;
          for (auto const& x : gens[g]) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 1) {
              throw InvalidArgument("entries must be positive integers");
            }
            images.push_back(x.get<std::uint64_t>());
          }
          spec.generators.push_back(from_images(images, spec.n));
        } else if (gens[g].is_string()) {
          if (!allow_cycle_notation) {
            throw InvalidArgument("instance files take image arrays only");
          }
          spec.generators.push_back(parse_permutation(gens[g].get<std::string>(), spec.n));
        } else {
          throw InvalidArgument("expected an image array");
        }
      } catch (InvalidArgument const& e) {
        throw InvalidArgument(where + e.what());
      }
    }
    return spec;
  }

  MonoidInstance build_instance(InstanceSpec const& spec, Budgets budgets) {
    return MonoidInstance(spec.l, generate_closure(spec.generators, spec.n), budgets);
  }

  Json to_json(InstanceSpec const& spec) {
    Json gens = Json::array();
    for (auto const& g : spec.generators) {
      gens.push_back(std::vector<std::uint64_t>(g.images().begin(), g.images().end()));
    }
    return Json{{"n", spec.n}, {"l", spec.l}, {"generators", gens}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  Json command_result(InstanceSpec const&             spec,
                      std::string const&              command,
                      std::vector<std::string> const& args,
                      CommandOptions const&           options) {
    MonoidInstance const inst = build_instance(spec, options.budgets);
    auto const&          cls  = inst.classification();

    if (command == "classify") {
      expect_args(command, args, 0, "no arguments");
      Json r = classification_json(cls);
      r["order"] = inst.group().order();
      return r;
    }
    if (command == "eq") {
      expect_args(command, args, 2, "two words");
      auto const u = parse_word(args[0]);
      auto const v = parse_word(args[1]);
      return Json{{"equal", words_equal(inst, u, v)},
                  {"method", cls.is_abelian ? "sweep" : "bfs"}};
    }
    if (command == "canon") {
      expect_args(command, args, 1, "one word");
      auto const eq = equivalence_class(inst, parse_word(args[0]));
      return Json{{"canonical", word_json(eq.canonical())}, {"class_size", eq.size()}};
    }
    if (command == "count") {
      expect_args(command, args, 1, "a length m");
      auto const m = parse_size(args[0], "m");
      return Json{{"length", m}, {"count", count_elements_of_length(inst, m)}};
    }
    if (command == "growth") {
      expect_args(command, args, 1, "m_max");
      auto const report = growth_classify(inst, parse_size(args[0], "m_max"));
      return Json{{"growth", to_string(report.type)}, {"counts", report.counts}};
    }
    if (command == "cancel") {
      expect_args(command, args, 1, "a length bound L");
      auto const L = parse_size(args[0], "L");
      auto const w = cancellativity_witness(inst, L);
      Json       witness(nullptr);
      if (w) {
        witness = Json{{"side", to_string(w->side)},
                       {"a", word_json(w->a)},
                       {"b", word_json(w->b)},
                       {"c", word_json(w->c)}};
      }
      return Json{{"L", L},
                  {"witness_found", w.has_value()},
                  {"witness", witness},
                  {"predicted_cancellative", cls.is_semiregular && cls.is_abelian}};
    }
    if (command == "group-info") {
      expect_args(command, args, 0, "no arguments");
      GroupOfFractions const G(inst);
      auto const&            H = inst.group();
      Json                   sigmas = Json::array();
      for (letter_type j = 1; j <= inst.n(); ++j) {
        sigmas.push_back(H.element(G.sigma(j)).to_cycle_string());
      }
      Json letters = Json::array();
      for (letter_type j = 1; j <= inst.n(); ++j) {
        auto const g = G.letter(j);
        letters.push_back(Json{{"k", g.k}, {"t", tuple_string(H, g.t)}});
      }
      std::uint64_t exponent = 1;
      for (auto const& t : G.torsion_elements()) {
        exponent = std::lcm(exponent, *G.torsion_order(FractionElement{0, t}));
      }
      auto const central = G.centrality_check();
      return Json{{"torsion_order", G.torsion_size()},
                  {"torsion_exponent", exponent},
                  {"sigma", sigmas},
                  {"letters", letters},
                  {"central", central.central},
                  {"index", central.index}};
    }
    if (command == "embed-check") {
      expect_args(command, args, 1, "a length bound L");
      auto const                 L = parse_size(args[0], "L");
      UniversalGroupAction const action(inst);
      return Json{{"L", L},
                  {"relation_check", action.relation_check(options.sample_budget)},
                  {"injective", action.injectivity_check(L)}};
    }
    if (command == "radical") {
      if (args.size() > 1) {
        throw InvalidArgument("radical expects at most one argument p");
      }
      Field const field = args.empty() ? options.field : parse_field(args[0]);
      GroupOfFractions const G(inst);
      auto const             A     = torsion_group_algebra(G, field);
      auto const             basis = radical_basis(A);
      bool                   all_nilpotent = true;
      Json                   vectors       = Json::array();
      for (auto const& v : basis) {
        all_nilpotent = all_nilpotent && fd_is_nilpotent(A, v, A.dimension()).nilpotent;
        Json terms    = Json::object();
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i].is_zero()) {
            terms[tuple_string(inst.group(), A.basis[i])] = v[i].to_string();
          }
        }
        vectors.push_back(terms);
      }
      return Json{{"field", field.name()},
                  {"algebra_dimension", A.dimension()},
                  {"dimension", basis.size()},
                  {"expected_dimension", radical_dimension_formula(A)},
                  {"all_nilpotent", all_nilpotent},
                  {"basis", vectors}};
    }
    if (command == "nilpotent") {
      if (args.empty() || args.size() > 2) {
        throw InvalidArgument("nilpotent expects an element and optionally k_max");
      }
      auto const a     = parse_element(args[0], inst, options.field);
      auto const k_max = args.size() == 2 ? parse_size(args[1], "k_max")
                                          : options.k_max.value_or(8);
      Json r = nilpotency_json(is_nilpotent(inst, a, k_max));
      r["element"] = a.to_string();
      r["field"]   = options.field.name();
      return r;
    }
    throw InvalidArgument("unknown command '" + command + "'");
  }

  Json run_command(InstanceSpec const&             spec,
                   std::string const&              command,
                   std::vector<std::string> const& args,
                   CommandOptions const&           options) {
    auto const start  = std::chrono::steady_clock::now();
    Json       result = command_result(spec, command, args, options);
    auto const ms     = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return Json{{"command", command},
                {"instance", to_json(spec)},
                {"result", std::move(result)},
                {"elapsed_ms", ms}};
  }

}  // namespace permrel::cli
