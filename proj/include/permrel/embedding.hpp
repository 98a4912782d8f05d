#ifndef PERMREL_EMBEDDING_HPP_
#define PERMREL_EMBEDDING_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "permrel/permgroup.hpp"
#include "permrel/rewriting.hpp"

namespace permrel {

  // Reduced word in the free group on the orbit representatives
  // x_{i_1}, ..., x_{i_r}.  Factor indices are 1-based positions j in 1..r.
  class FreeGroupWord {
   public:
    struct Factor {
      std::uint32_t j;
      int           exponent;  // +1 or -1

      auto operator<=>(Factor const&) const = default;
    };

    FreeGroupWord() = default;

    // Builds a word and reduces it.
    explicit FreeGroupWord(std::vector<Factor> factors);

    std::vector<Factor> const& factors() const noexcept {
      return _factors;
    }
    std::int64_t degree() const noexcept {
      return _degree;
    }
    std::size_t length() const noexcept {
      return _factors.size();
    }

    // x_{i_j}^exponent * this, reduced.
    void prepend(std::uint32_t j, int exponent);

    std::string to_string() const;

    auto operator<=>(FreeGroupWord const&) const = default;

   private:
    std::vector<Factor> _factors;
    std::int64_t        _degree = 0;
  };

  // (w, x_{s_1(i_1)} ... x_{s_{l-1}(i_1)}); tail holds the indices of s_k.
  struct Configuration {
    FreeGroupWord                             w;
    std::vector<PermutationGroup::index_type> tail;

    auto operator<=>(Configuration const&) const = default;
  };

  // The map f_{tau, j}, attached to the generator x_{tau(i_j)}.
  struct GeneratorAction {
    PermutationGroup::index_type tau;
    std::uint32_t                j;  // 1-based orbit position

    auto operator<=>(GeneratorAction const&) const = default;
  };

  // Action of S_{n,l}(H) on configurations for semiregular abelian H.
  class UniversalGroupAction {
   public:
    // Throws PreconditionError unless H is semiregular and abelian.
    explicit UniversalGroupAction(MonoidInstance inst);

    MonoidInstance const& instance() const noexcept {
      return _inst;
    }
    std::size_t num_orbits() const noexcept {
      return _inst.classification().orbits.size();
    }

    // The unique (tau, j) with tau(i_j) = k.
    GeneratorAction decompose(letter_type k) const;

    Configuration f_apply(GeneratorAction a, Configuration c) const;
    Configuration f_inverse(GeneratorAction a, Configuration c) const;

    // Rightmost letter acts first.
    Configuration phi_apply(Word const& w, Configuration c) const;

    // (x_{i_1}, x_{i_1}^{l-1}).
    Configuration probe() const;

    // Every configuration whose free-group word has length <= max_length.
    std::vector<Configuration> configurations(std::size_t max_length) const;

    // f_{nu_1,j_1} o ... o f_{nu_l,j_l} = f_{tau nu_1,j_1} o ... o f_{tau nu_l,j_l}
    // on every configuration with |w| <= 2.  Exhaustive over (nu, tau, j) when
    // the tuple count is at most sample_budget, otherwise a fixed-seed sample
    // of sample_budget tuples.
    bool relation_check(std::uint64_t sample_budget) const;

    // phi(u)(probe) = phi(v)(probe) iff u = v, over all words of length <= L.
    bool injectivity_check(std::size_t L) const;

   private:
    MonoidInstance _inst;
  };

}  // namespace permrel

#endif  // PERMREL_EMBEDDING_HPP_
