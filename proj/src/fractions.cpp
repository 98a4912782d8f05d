#include "permrel/fractions.hpp"

#include <numeric>
#include <set>
#include <string>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
      std::int64_t r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  GroupOfFractions::GroupOfFractions(MonoidInstance inst) : _inst(std::move(inst)) {
    auto const& cls = _inst.classification();
    if (!cls.is_transitive || !cls.is_abelian || !cls.is_regular) {
      throw PreconditionError(
          std::string("requires transitive abelian H; got transitive=")
          + (cls.is_transitive ? "true" : "false")
          + ", semiregular=" + (cls.is_semiregular ? "true" : "false")
          + ", abelian=" + (cls.is_abelian ? "true" : "false"));
    }
    _sigma = sigma_map(_inst.group());
  }

  TorsionTuple GroupOfFractions::torsion_identity() const {
    return TorsionTuple{std::vector<PermutationGroup::index_type>(
        _inst.l() - 1, PermutationGroup::identity_index())};
  }

  FractionElement GroupOfFractions::identity() const {
    return {0, torsion_identity()};
  }

  FractionElement GroupOfFractions::x1_power(std::int64_t k) const {
    return {k, torsion_identity()};
  }

  FractionElement GroupOfFractions::letter(letter_type j) const {
    if (j < 1 || j > _inst.n()) {
      throw InvalidArgument("letter " + std::to_string(j) + " outside 1.."
                            + std::to_string(_inst.n()));
    }
    FractionElement g = x1_power(1);
    g.t.components.back() = _sigma[j - 1];
    return g;
  }

  std::uint64_t GroupOfFractions::torsion_size() const {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i + 1 < _inst.l(); ++i) {
      size *= _inst.group().order();
    }
    return size;
  }

  TorsionTuple GroupOfFractions::torsion_from_index(std::uint64_t idx) const {
    std::uint64_t const N = _inst.group().order();
    TorsionTuple        t = torsion_identity();
    for (std::size_t i = t.components.size(); i-- > 0;) {
      t.components[i] = static_cast<PermutationGroup::index_type>(idx % N);
      idx /= N;
    }
    return t;
  }

  std::uint64_t GroupOfFractions::torsion_index(TorsionTuple const& t) const {
    std::uint64_t const N   = _inst.group().order();
    std::uint64_t       idx = 0;
    for (auto c : t.components) {
      idx = idx * N + c;
    }
    return idx;
  }

  std::vector<TorsionTuple> GroupOfFractions::torsion_elements() const {
    std::vector<TorsionTuple> out;
    for (std::uint64_t i = 0; i < torsion_size(); ++i) {
      out.push_back(torsion_from_index(i));
    }
    return out;
  }

  TorsionTuple GroupOfFractions::torsion_multiply(TorsionTuple const& s,
                                                  TorsionTuple const& t) const {
    TorsionTuple out = s;
    for (std::size_t i = 0; i < out.components.size(); ++i) {
      out.components[i] = _inst.group().multiply(s.components[i], t.components[i]);
    }
    return out;
  }

  TorsionTuple GroupOfFractions::torsion_inverse(TorsionTuple const& t) const {
    TorsionTuple out = t;
    for (auto& c : out.components) {
      c = _inst.group().inverse(c);
    }
    return out;
  }

  // x_1 f(h) x_1^{-1} = f(h_{l-1}^{-1}, h_{l-1}^{-1} h_1, ..., h_{l-1}^{-1} h_{l-2}),
  // from rewriting the window x_1 x_{j_1} ... x_{j_{l-1}} by sigma_{j_{l-1}}.
  TorsionTuple GroupOfFractions::conj_step(TorsionTuple const& t) const {
    auto const& H    = _inst.group();
    auto const& h    = t.components;
    auto const  last = H.inverse(h.back());
    TorsionTuple out = t;
    out.components[0] = last;
    for (std::size_t i = 1; i < h.size(); ++i) {
      out.components[i] = H.multiply(last, h[i - 1]);
    }
    return out;
  }

  TorsionTuple GroupOfFractions::conj_step_inverse(TorsionTuple const& t) const {
    auto const& H     = _inst.group();
    auto const& g     = t.components;
    auto const  first = H.inverse(g.front());
    TorsionTuple out  = t;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      out.components[i] = H.multiply(first, g[i + 1]);
    }
    out.components.back() = first;
    return out;
  }

  TorsionTuple GroupOfFractions::conj_by_x1(TorsionTuple const& t, std::int64_t e) const {
    // x_1^l is central, so the action has order dividing l.
    auto const   l     = static_cast<std::int64_t>(_inst.l());
    std::int64_t steps = e >= 0 ? e % l : (-e) % l;
    TorsionTuple out   = t;
    while (steps-- > 0) {
      out = e >= 0 ? conj_step(out) : conj_step_inverse(out);
    }
    return out;
  }

  FractionElement GroupOfFractions::multiply(FractionElement const& g,
                                             FractionElement const& h) const {
    // x^a s x^b t = x^{a+b} (x^{-b} s x^b) t
    return {g.k + h.k, torsion_multiply(conj_by_x1(g.t, -h.k), h.t)};
  }

  FractionElement GroupOfFractions::inverse(FractionElement const& g) const {
    // (x^k t)^{-1} = t^{-1} x^{-k} = x^{-k} (x^k t^{-1} x^{-k})
    return {-g.k, conj_by_x1(torsion_inverse(g.t), g.k)};
  }

  FractionElement GroupOfFractions::from_word(Word const& w) const {
    _inst.validate(w);
    FractionElement g = identity();
    for (auto j : w) {
      g = multiply(g, letter(j));
    }
    return g;
  }

  std::optional<std::uint64_t>
  GroupOfFractions::torsion_order(FractionElement const& g) const {
    if (g.k != 0) {
      return std::nullopt;
    }
    std::uint64_t order = 1;
    for (auto c : g.t.components) {
      order = std::lcm(order, _inst.group().element_order(c));
    }
    return order;
  }

  CentralityReport GroupOfFractions::centrality_check() const {
    auto const       l       = static_cast<std::int64_t>(_inst.l());
    FractionElement  central = x1_power(l);
    CentralityReport out;
    out.central = true;
    for (letter_type j = 1; j <= _inst.n(); ++j) {
      auto const x = letter(j);
      if (multiply(central, x) != multiply(x, central)) {
        out.central = false;
      }
    }
    // Coset labels of <x_1^l>: (k mod l, t).  Collect the labels of the
    // representatives and confirm that generators and their inverses land
    // among them.
    std::set<std::pair<std::int64_t, TorsionTuple>> labels;
    for (std::int64_t k = 0; k < l; ++k) {
      for (auto const& t : torsion_elements()) {
        labels.emplace(k, t);
      }
    }
    for (letter_type j = 1; j <= _inst.n(); ++j) {
      for (auto const& g : {letter(j), inverse(letter(j))}) {
        if (!labels.contains({floor_mod(g.k, l), g.t})) {
          out.central = false;
        }
      }
    }
    out.index = labels.size();
    return out;
  }

}  // namespace permrel
