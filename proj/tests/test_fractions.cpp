#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "permrel/errors.hpp"
#include "permrel/fractions.hpp"
#include "support.hpp"

using namespace permrel;
using namespace permrel::test;

namespace {
  using idx = PermutationGroup::index_type;

  MonoidInstance inst_Z2() {
    return MonoidInstance(2, group({{2, 1}}, 2));
  }

  // A word w_h with w_h = x_1^{l-1} h in G: letters j with sigma_j = h_i.
  Word torsion_word(GroupOfFractions const& G, TorsionTuple const& t) {
    auto const& inst = G.instance();
    Word        w;
    for (auto h : t.components) {
      for (letter_type j = 1; j <= inst.n(); ++j) {
        if (G.sigma(j) == h) {
          w.push_back(j);
          break;
        }
      }
    }
    return w;
  }

  idx el(GroupOfFractions const& G, std::vector<point_type> images) {
    return *G.instance().group().index_of(Permutation(std::move(images)));
  }
}  // namespace

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(GroupOfFractions{inst_D()}, PreconditionError);
  CHECK_THROWS_AS(GroupOfFractions{inst_E()}, PreconditionError);
  CHECK_THROWS_AS(GroupOfFractions{inst_F()}, PreconditionError);
  try {
    GroupOfFractions G(inst_E());
  } catch (PreconditionError const& e) {
    CHECK(std::string(e.what()).find("requires transitive abelian H; got transitive=false, semiregular=false")
          != std::string::npos);
  }
}

TEST_CASE("torsion_multiply examples") {
  GroupOfFractions A(inst_A());
  auto const       s  = el(A, {2, 3, 1});
  auto const       s2 = el(A, {3, 1, 2});
  CHECK(A.torsion_multiply(A.torsion_identity(), {{s}}) == TorsionTuple{{s}});
  CHECK(A.torsion_multiply({{s}}, {{s2}}) == A.torsion_identity());

  GroupOfFractions C(inst_C());
  auto const       r  = el(C, {2, 3, 4, 1});
  auto const       r2 = el(C, {3, 4, 1, 2});
  auto const       r3 = el(C, {4, 1, 2, 3});
  CHECK(C.torsion_multiply({{r, r2}}, {{r3, r3}}) == TorsionTuple{{0, r}});
}

TEST_CASE("conj_by_x1 examples") {
  GroupOfFractions A(inst_A());
  auto const       s  = el(A, {2, 3, 1});
  auto const       s2 = el(A, {3, 1, 2});
  CHECK(A.conj_by_x1(A.torsion_identity(), 5) == A.torsion_identity());
  CHECK(A.conj_by_x1({{s2}}, 1) == TorsionTuple{{s}});
  GroupOfFractions C(inst_C());
  for (auto const& t : C.torsion_elements()) {
    CHECK(C.conj_by_x1(t, 3) == t);
    CHECK(C.conj_by_x1(C.conj_by_x1(t, 1), -1) == t);
    CHECK(C.conj_by_x1(t, -2) == C.conj_by_x1(t, 1));
  }
}

TEST_CASE("from_word, multiply, inverse examples") {
  GroupOfFractions A(inst_A());
  auto const       s2 = el(A, {3, 1, 2});
  CHECK(A.from_word({}) == A.identity());
  CHECK(A.from_word({2}) == FractionElement{1, {{s2}}});
  CHECK(A.from_word({1, 2}) == FractionElement{2, {{s2}}});
  CHECK(A.from_word({2, 3}) == A.from_word({1, 2}));
  CHECK(A.multiply(A.from_word({1}), A.from_word({2})) == A.from_word({1, 2}));
  CHECK(A.inverse(A.identity()) == A.identity());
  CHECK(A.inverse(A.x1_power(2)) == A.x1_power(-2));

  // x_2^{-1} = x_2 x_1^{-2}
  auto const x2 = A.from_word({2});
  auto const alt = A.multiply(x2, A.x1_power(-2));
  CHECK(A.multiply(x2, alt) == A.identity());
  CHECK(A.multiply(alt, x2) == A.identity());
  CHECK(A.inverse(x2) == alt);

  std::mt19937_64 rng(3);
  for (auto G : {GroupOfFractions(inst_A()), GroupOfFractions(inst_B()), GroupOfFractions(inst_C())}) {
    for (int i = 0; i < 50; ++i) {
      FractionElement g{static_cast<std::int64_t>(rng() % 11) - 5,
                        G.torsion_from_index(rng() % G.torsion_size())};
      FractionElement h{static_cast<std::int64_t>(rng() % 11) - 5,
                        G.torsion_from_index(rng() % G.torsion_size())};
      FractionElement u{static_cast<std::int64_t>(rng() % 11) - 5,
                        G.torsion_from_index(rng() % G.torsion_size())};
      CHECK(G.multiply(g, G.inverse(g)) == G.identity());
      CHECK(G.multiply(G.inverse(g), g) == G.identity());
      CHECK(G.multiply(g, G.identity()) == g);
      CHECK(G.multiply(G.multiply(g, h), u) == G.multiply(g, G.multiply(h, u)));
    }
  }
}

TEST_CASE("torsion_order examples") {
  GroupOfFractions A(inst_A());
  CHECK(A.torsion_order(A.identity()) == 1);
  CHECK(A.torsion_order(FractionElement{0, {{el(A, {2, 3, 1})}}}) == 3);
  CHECK_FALSE(A.torsion_order(FractionElement{1, {{0}}}).has_value());
  CHECK_FALSE(A.torsion_order(FractionElement{-2, {{1}}}).has_value());
  GroupOfFractions B(inst_B());
  for (auto const& t : B.torsion_elements()) {
    auto const o = B.torsion_order({0, t});
    REQUIRE(o.has_value());
    CHECK(*o == (t == B.torsion_identity() ? 1u : 2u));
  }
}

TEST_CASE("centrality_check examples") {
  auto const a = GroupOfFractions(inst_A()).centrality_check();
  CHECK(a.central);
  CHECK(a.index == 6);
  auto const c = GroupOfFractions(inst_C()).centrality_check();
  CHECK(c.central);
  CHECK(c.index == 48);
  auto const z = GroupOfFractions(inst_Z2()).centrality_check();
  CHECK(z.central);
  CHECK(z.index == 4);
}

TEST_CASE("from_word decides the word problem") {
  for (auto inst : {inst_A(), inst_B(), inst_C(), inst_Z2()}) {
    GroupOfFractions G(inst);
    std::size_t const max_m = inst.n() == 4 ? 4 : 6;
    for (std::size_t m = 0; m <= max_m; ++m) {
      LengthPartition part(inst, m);
      std::map<FractionElement, std::uint32_t> seen;
      for (std::uint64_t code = 0; code < part.num_words(); ++code) {
        auto const w = part.decode(code);
        auto const g = G.from_word(w);
        CHECK(g.k == static_cast<std::int64_t>(m));
        auto [it, fresh] = seen.emplace(g, part.class_of_code(code));
        CHECK(it->second == part.class_of_code(code));
      }
      CHECK(seen.size() == part.num_classes());
    }
  }
}

TEST_CASE("torsion_multiply agrees with word products") {
  for (auto inst : {inst_A(), inst_B(), inst_C()}) {
    GroupOfFractions G(inst);
    auto const       l  = inst.l();
    auto const       ts = G.torsion_elements();
    for (auto const& s : ts) {
      for (auto const& t : ts) {
        auto const u = G.torsion_multiply(s, t);
        // x1^{l-1} s x1^{l-1} t x1^{2} = x1^{l+1} x1^{l-1} u   (x1^l central)
        Word lhs = cat(cat(cat({1}, torsion_word(G, s)), {1}), torsion_word(G, t));
        Word rhs = cat(repeat(1, l + 1), torsion_word(G, u));
        CHECK(words_equal_bfs(inst, lhs, rhs));
      }
    }
  }
}

TEST_CASE("conjugation closed form agrees with word rewriting") {
  for (auto inst : {inst_A(), inst_B(), inst_C()}) {
    GroupOfFractions G(inst);
    for (auto const& t : G.torsion_elements()) {
      auto const c = G.conj_by_x1(t, 1);
      // x1 (x1^{l-1} t) = (x1^{l-1} c) x1
      CHECK(words_equal_bfs(inst, cat({1}, torsion_word(G, t)), cat(torsion_word(G, c), {1})));
      // automorphism of order dividing l
      CHECK(G.conj_by_x1(t, static_cast<std::int64_t>(inst.l())) == t);
      for (auto const& s : G.torsion_elements()) {
        CHECK(G.conj_by_x1(G.torsion_multiply(s, t), 1)
              == G.torsion_multiply(G.conj_by_x1(s, 1), c));
      }
    }
  }
}

TEST_CASE("torsion tuples are distinct elements") {
  GroupOfFractions C(inst_C());
  CHECK(C.torsion_size() == 16);
  std::set<TorsionTuple> all;
  for (std::uint64_t i = 0; i < C.torsion_size(); ++i) {
    auto const t = C.torsion_from_index(i);
    CHECK(C.torsion_index(t) == i);
    all.insert(t);
  }
  CHECK(all.size() == 16);
}
