#include "permrel/embedding.hpp"

#include <map>
#include <random>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    using index_type = PermutationGroup::index_type;

    std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
      std::int64_t r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FreeGroupWord
  ////////////////////////////////////////////////////////////////////////

  FreeGroupWord::FreeGroupWord(std::vector<Factor> factors) {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      prepend(it->j, it->exponent);
    }
  }

  void FreeGroupWord::prepend(std::uint32_t j, int exponent) {
    if (exponent != 1 && exponent != -1) {
      throw InvalidArgument("free group exponents must be +1 or -1");
    }
    if (!_factors.empty() && _factors.front().j == j
        && _factors.front().exponent == -exponent) {
      _factors.erase(_factors.begin());
    } else {
      _factors.insert(_factors.begin(), Factor{j, exponent});
    }
    _degree += exponent;
  }

  std::string FreeGroupWord::to_string() const {
    if (_factors.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& f : _factors) {
      out += "y" + std::to_string(f.j);
      if (f.exponent < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // UniversalGroupAction
  ////////////////////////////////////////////////////////////////////////

  UniversalGroupAction::UniversalGroupAction(MonoidInstance inst)
      : _inst(std::move(inst)) {
    auto const& cls = _inst.classification();
    if (!cls.is_semiregular || !cls.is_abelian) {
      throw PreconditionError(
          std::string("requires semiregular abelian H; got semiregular=")
          + (cls.is_semiregular ? "true" : "false")
          + ", abelian=" + (cls.is_abelian ? "true" : "false"));
    }
  }

  GeneratorAction UniversalGroupAction::decompose(letter_type k) const {
    if (k < 1 || k > _inst.n()) {
      throw InvalidArgument("letter " + std::to_string(k) + " outside 1.."
                            + std::to_string(_inst.n()));
    }
    auto const& cls = _inst.classification();
    auto const  pos = cls.orbit_of[k - 1];
    auto const  rep = cls.orbit_representatives[pos];
    return {_inst.group().transporters(rep, k).front(),
            static_cast<std::uint32_t>(pos + 1)};
  }

  Configuration UniversalGroupAction::f_apply(GeneratorAction a, Configuration c) const {
    auto const&  H = _inst.group();
    auto const   l = static_cast<std::int64_t>(_inst.l());
    std::int64_t d = floor_mod(c.w.degree(), l);
    if (d == 0) {
      auto const inv = H.inverse(a.tau);
      for (auto& s : c.tail) {
        s = H.multiply(inv, s);
      }
    } else {
      c.tail[d - 1] = H.multiply(a.tau, c.tail[d - 1]);
    }
    c.w.prepend(a.j, 1);
    return c;
  }

  Configuration UniversalGroupAction::f_inverse(GeneratorAction a, Configuration c) const {
    auto const&  H = _inst.group();
    auto const   l = static_cast<std::int64_t>(_inst.l());
    std::int64_t d = floor_mod(c.w.degree(), l);
    if (d == 1 % l) {
      for (auto& s : c.tail) {
        s = H.multiply(a.tau, s);
      }
    } else {
      // deg(w) = k + 1 mod l with 1 <= k <= l - 1
      std::int64_t const k = floor_mod(d - 1, l);
      c.tail[k - 1]        = H.multiply(H.inverse(a.tau), c.tail[k - 1]);
    }
    c.w.prepend(a.j, -1);
    return c;
  }

  Configuration UniversalGroupAction::phi_apply(Word const& w, Configuration c) const {
    _inst.validate(w);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      c = f_apply(decompose(*it), std::move(c));
    }
    return c;
  }

  Configuration UniversalGroupAction::probe() const {
    Configuration c;
    c.w.prepend(1, 1);
    c.tail.assign(_inst.l() - 1, PermutationGroup::identity_index());
    return c;
  }

  std::vector<Configuration>
  UniversalGroupAction::configurations(std::size_t max_length) const {
    auto const r = static_cast<std::uint32_t>(num_orbits());
    std::vector<FreeGroupWord> words{FreeGroupWord()};
    std::vector<FreeGroupWord> layer{FreeGroupWord()};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<FreeGroupWord> next;
      for (auto const& w : layer) {
        for (std::uint32_t j = 1; j <= r; ++j) {
          for (int e : {1, -1}) {
            FreeGroupWord v = w;
            v.prepend(j, e);
            if (v.length() == len) {
              next.push_back(v);
            }
          }
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }

    std::size_t const N = _inst.group().order();
    std::size_t const m = _inst.l() - 1;
    std::size_t       tails = 1;
    for (std::size_t i = 0; i < m; ++i) {
      tails *= N;
    }
    std::vector<Configuration> out;
    for (auto const& w : words) {
      for (std::size_t code = 0; code < tails; ++code) {
        Configuration c{w, std::vector<index_type>(m)};
        std::size_t   x = code;
        for (std::size_t i = m; i-- > 0;) {
          c.tail[i] = static_cast<index_type>(x % N);
          x /= N;
        }
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  bool UniversalGroupAction::relation_check(std::uint64_t sample_budget) const {
    auto const&       H      = _inst.group();
    std::size_t const l      = _inst.l();
    std::uint64_t const N    = H.order();
    std::uint64_t const r    = num_orbits();
    auto const        probes = configurations(2);

    // Tuple layout: nu_1..nu_l, tau, j_1..j_l.
    std::vector<std::uint64_t> radix(l, N);
    radix.push_back(N);
    radix.insert(radix.end(), l, r);

    std::uint64_t total      = 1;
    bool          exhaustive = true;
    for (auto b : radix) {
      if (total > sample_budget / b) {
        exhaustive = false;
        break;
      }
      total *= b;
    }
    if (exhaustive && total > sample_budget) {
      exhaustive = false;
    }

    auto check = [&](std::vector<std::uint64_t> const& digits) {
      index_type const tau = static_cast<index_type>(digits[l]);
      for (auto const& c0 : probes) {
        Configuration lhs = c0;
        Configuration rhs = c0;
        for (std::size_t i = l; i-- > 0;) {
          auto const nu = static_cast<index_type>(digits[i]);
          auto const j  = static_cast<std::uint32_t>(digits[l + 1 + i] + 1);
          lhs           = f_apply({nu, j}, std::move(lhs));
          rhs           = f_apply({H.multiply(tau, nu), j}, std::move(rhs));
        }
        if (lhs != rhs) {
          return false;
        }
      }
      return true;
    };

    std::vector<std::uint64_t> digits(radix.size(), 0);
    if (exhaustive) {
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = radix.size(); i-- > 0;) {
          digits[i] = x % radix[i];
          x /= radix[i];
        }
        if (!check(digits)) {
          return false;
        }
      }
      return true;
    }
    std::mt19937_64 rng(0x5eed);
    for (std::uint64_t s = 0; s < sample_budget; ++s) {
      for (std::size_t i = 0; i < radix.size(); ++i) {
        digits[i] = std::uniform_int_distribution<std::uint64_t>(0, radix[i] - 1)(rng);
      }
      if (!check(digits)) {
        return false;
      }
    }
    return true;
  }

  bool UniversalGroupAction::injectivity_check(std::size_t L) const {
    using Label = std::pair<std::size_t, std::uint32_t>;  // (length, class)
    std::map<Configuration, Label> image_owner;
    std::map<Label, Configuration> class_image;
    Configuration const            start = probe();
    for (std::size_t m = 0; m <= L; ++m) {
      LengthPartition const part(_inst, m);
      for (std::uint64_t code = 0; code < part.num_words(); ++code) {
        Label const lbl{m, part.class_of_code(code)};
        auto        img = phi_apply(part.decode(code), start);
        auto [it, fresh] = class_image.emplace(lbl, img);
        if (!fresh && it->second != img) {
          return false;  // phi is not constant on a class
        }
        auto [jt, new_img] = image_owner.emplace(img, lbl);
        if (!new_img && jt->second != lbl) {
          return false;  // two distinct elements act identically on the probe
        }
      }
    }
    return true;
  }

}  // namespace permrel
