#ifndef PERMREL_FRACTIONS_HPP_
#define PERMREL_FRACTIONS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "permrel/permgroup.hpp"
#include "permrel/rewriting.hpp"

namespace permrel {

  // (h_1, ..., h_{l-1}) in H^{l-1}, identified with the torsion element
  // x_1^{-l+1} x_{j_1} ... x_{j_{l-1}} where h_i = sigma_{j_i}.
  struct TorsionTuple {
    std::vector<PermutationGroup::index_type> components;

    auto operator<=>(TorsionTuple const&) const = default;
  };

  // x_1^k * t.  Every element of the group of fractions has exactly one such
  // representation; k is its degree.
  struct FractionElement {
    std::int64_t k = 0;
    TorsionTuple t;

    auto operator<=>(FractionElement const&) const = default;
  };

  struct CentralityReport {
    bool          central = false;
    std::uint64_t index   = 0;
  };

  // The group of fractions G = S_{n,l}(H) <x_1^l>^{-1} for transitive abelian
  // (hence regular) H, realized as T(G) x| <x_1> with T(G) = H^{l-1}.
  class GroupOfFractions {
   public:
    // Throws PreconditionError unless H is regular and abelian.
    explicit GroupOfFractions(MonoidInstance inst);

    MonoidInstance const& instance() const noexcept {
      return _inst;
    }
    // sigma(j) is the index of the unique element sending j to 1.
    PermutationGroup::index_type sigma(letter_type j) const {
      return _sigma[j - 1];
    }

    TorsionTuple    torsion_identity() const;
    FractionElement identity() const;
    FractionElement x1_power(std::int64_t k) const;
    // Image of the generator x_j: (1, (id, ..., id, sigma_j)).
    FractionElement letter(letter_type j) const;

    // |H|^{l-1} tuples in mixed-radix order of component indices.
    std::uint64_t              torsion_size() const;
    TorsionTuple               torsion_from_index(std::uint64_t idx) const;
    std::uint64_t              torsion_index(TorsionTuple const& t) const;
    std::vector<TorsionTuple>  torsion_elements() const;

    TorsionTuple torsion_multiply(TorsionTuple const& s, TorsionTuple const& t) const;
    TorsionTuple torsion_inverse(TorsionTuple const& t) const;

    // x_1^e t x_1^{-e}.
    TorsionTuple conj_by_x1(TorsionTuple const& t, std::int64_t e) const;

    FractionElement multiply(FractionElement const& g, FractionElement const& h) const;
    FractionElement inverse(FractionElement const& g) const;
    FractionElement from_word(Word const& w) const;

    // nullopt means infinite order.
    std::optional<std::uint64_t> torsion_order(FractionElement const& g) const;

    // x_1^l commutes with every generator; also counts the cosets of
    // <x_1^l> met by {(k, t) : 0 <= k < l}, which must be l |H|^{l-1}.
    CentralityReport centrality_check() const;

   private:
    TorsionTuple conj_step(TorsionTuple const& t) const;
    TorsionTuple conj_step_inverse(TorsionTuple const& t) const;

    MonoidInstance                            _inst;
    std::vector<PermutationGroup::index_type> _sigma;
  };

}  // namespace permrel

#endif  // PERMREL_FRACTIONS_HPP_
