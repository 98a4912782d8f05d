#ifndef PERMREL_PERMGROUP_HPP_
#define PERMREL_PERMGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permrel {

  // Points are 1-based throughout: a permutation of degree n acts on {1..n}.
  using point_type = std::uint32_t;

  class Permutation {
   public:
    Permutation() = default;

    // images[i - 1] = sigma(i).  Throws InvalidArgument naming the first
    // repeated, missing or out-of-range value.
    explicit Permutation(std::vector<point_type> images);

    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator()(point_type i) const {
      return _images[i - 1];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    Permutation inverse() const;
    bool        is_identity() const noexcept;

    // Cycle notation, fixed points omitted, "()" for the identity.
    std::string to_cycle_string() const;

    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<point_type> _images;
  };

  // (p * q)(i) = p(q(i)): q acts first.
  Permutation compose(Permutation const& p, Permutation const& q);

  // A finite permutation group stored by its full element list.  Elements
  // are sorted by image sequence, so the identity always has index 0.
  // Products, inverses and point images are tabulated by index.
  class PermutationGroup {
   public:
    using index_type = std::uint32_t;

    static constexpr std::size_t max_order = 4096;

    PermutationGroup() = default;

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }
    std::vector<Permutation> const& generators() const noexcept {
      return _generators;
    }
    Permutation const& element(index_type a) const {
      return _elements[a];
    }

    static constexpr index_type identity_index() noexcept {
      return 0;
    }

    std::optional<index_type> index_of(Permutation const& p) const;
    bool                      contains(Permutation const& p) const {
      return index_of(p).has_value();
    }

    // Index of element(a) composed with element(b), b acting first.
    index_type multiply(index_type a, index_type b) const {
      return _mult[a * order() + b];
    }
    index_type inverse(index_type a) const {
      return _inv[a];
    }
    point_type apply(index_type a, point_type i) const {
      return _img[a * _degree + (i - 1)];
    }
    std::uint64_t element_order(index_type a) const;

    // All elements mapping x to y, in index order.
    std::vector<index_type> transporters(point_type x, point_type y) const;

   private:
    friend PermutationGroup generate_closure(std::span<Permutation const>,
                                             std::size_t);

    std::size_t              _degree = 0;
    std::vector<Permutation> _elements;
    std::vector<Permutation> _generators;
    std::vector<index_type>  _mult;
    std::vector<index_type>  _inv;
    std::vector<point_type>  _img;
  };

  // Smallest subgroup of Sym_n containing the generators, built by
  // breadth-first multiplication.  Throws InvalidArgument on a degree
  // mismatch and BudgetExceeded beyond PermutationGroup::max_order.
  PermutationGroup generate_closure(std::span<Permutation const> generators,
                                    std::size_t                  n);

  struct GroupClassification {
    bool is_abelian     = false;
    bool is_semiregular = false;
    bool is_transitive  = false;
    bool is_regular     = false;
    // Orbits are sorted internally and listed by increasing minimum.
    std::vector<std::vector<point_type>> orbits;
    // Minimum of each orbit, ascending.
    std::vector<point_type> orbit_representatives;
    // orbit_of[i - 1] is the position of i's orbit in `orbits`.
    std::vector<std::size_t> orbit_of;
  };

  GroupClassification classify(PermutationGroup const& H);

  // For regular H: result[i - 1] is the index of the unique sigma_i with
  // sigma_i(i) = 1.  Throws PreconditionError otherwise.
  std::vector<PermutationGroup::index_type> sigma_map(PermutationGroup const& H);

}  // namespace permrel

#endif  // PERMREL_PERMGROUP_HPP_
