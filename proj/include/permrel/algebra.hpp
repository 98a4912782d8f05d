#ifndef PERMREL_ALGEBRA_HPP_
#define PERMREL_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permrel/fractions.hpp"
#include "permrel/rewriting.hpp"
#include "permrel/scalar.hpp"

namespace permrel {

  // An element of K[S_{n,l}(H)] keyed by canonical words.  Zero coefficients
  // are never stored.
  class AlgebraElement {
   public:
    explicit AlgebraElement(Field field = Field()) : _field(field) {}

    static AlgebraElement one(Field field);
    static AlgebraElement monomial(MonoidInstance const& inst,
                                   Field                 field,
                                   Word const&           w,
                                   Rational              coefficient = 1);

    Field const& field() const noexcept {
      return _field;
    }
    std::map<Word, Scalar> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    // All terms have the same word length (true for zero).
    bool is_homogeneous() const;

    // Adds c times the class of w.
    void add_term(MonoidInstance const& inst, Word const& w, Scalar const& c);

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }

    bool operator==(AlgebraElement const& other) const {
      return _field == other._field && _terms == other._terms;
    }

    // "2*x1x2 - x3 + 1"; "0" for zero.
    std::string to_string() const;

   private:
    friend AlgebraElement multiply_elements(MonoidInstance const&,
                                            AlgebraElement const&,
                                            AlgebraElement const&);
    friend std::map<std::size_t, AlgebraElement>
    homogeneous_components(AlgebraElement const&);

    void add_canonical(Word const& w, Scalar const& c);

    Field                  _field;
    std::map<Word, Scalar> _terms;
  };

  // Bilinear extension of concatenation followed by canonical_form.
  AlgebraElement multiply_elements(MonoidInstance const& inst,
                                   AlgebraElement const& a,
                                   AlgebraElement const& b);

  AlgebraElement power(MonoidInstance const& inst, AlgebraElement const& a, std::size_t k);

  struct NilpotencyReport {
    bool        nilpotent  = false;
    std::size_t exponent   = 0;  // first k with a^k = 0 when nilpotent
    std::size_t k_max      = 0;
    bool        homogeneous = false;
  };

  // Powers a up to a^k_max.  "Not nilpotent" only means not up to k_max.
  NilpotencyReport is_nilpotent(MonoidInstance const& inst,
                                AlgebraElement const& a,
                                std::size_t           k_max);

  std::map<std::size_t, AlgebraElement> homogeneous_components(AlgebraElement const& a);

  ////////////////////////////////////////////////////////////////////////
  // The group algebra K[T(G)]
  ////////////////////////////////////////////////////////////////////////

  using Vector = std::vector<Scalar>;

  struct FiniteDimAlgebra {
    Field                     field;
    std::vector<TorsionTuple> basis;
    // table[i][j] = index of basis[i] * basis[j].
    std::vector<std::vector<std::size_t>> table;
    std::size_t                           identity = 0;
    // Order of basis[i] as a group element.
    std::vector<std::uint64_t> element_orders;

    std::size_t dimension() const noexcept {
      return basis.size();
    }
    Vector zero() const;
    Vector basis_vector(std::size_t i) const;
  };

  // Basis: all |H|^{l-1} torsion tuples in GroupOfFractions index order.
  FiniteDimAlgebra torsion_group_algebra(GroupOfFractions const& G, Field field);

  Vector fd_multiply(FiniteDimAlgebra const& A, Vector const& u, Vector const& v);

  NilpotencyReport fd_is_nilpotent(FiniteDimAlgebra const& A,
                                   Vector const&           v,
                                   std::size_t             k_max);

  // |T| - |T| / |Syl_p(T)| over F_p, else 0.
  std::uint64_t radical_dimension_formula(FiniteDimAlgebra const& A);

  // A spanning set of J(K[T]) chosen from {(g - 1) h : g in Syl_p, h in T},
  // h taken in basis order, first the identity.  Throws InvalidArgument if
  // the table is not commutative, ConsistencyError if the span misses the
  // dimension formula.
  std::vector<Vector> radical_basis(FiniteDimAlgebra const& A);

  // Rank of a family of vectors by Gaussian elimination.
  std::size_t rank(std::vector<Vector> const& vectors);

  // True iff no probe outside span(radical) has a power inside it, i.e. the
  // quotient has no nonzero nilpotent among the probes.
  bool quotient_is_reduced(FiniteDimAlgebra const&    A,
                           std::vector<Vector> const& radical,
                           std::vector<Vector> const& probes);

  ////////////////////////////////////////////////////////////////////////
  // K[G]
  ////////////////////////////////////////////////////////////////////////

  struct GroupAlgebraElement {
    Field                             field;
    std::map<FractionElement, Scalar> terms;

    bool is_zero() const noexcept {
      return terms.empty();
    }
    void add_term(FractionElement const& g, Scalar const& c);
  };

  // Image of a in K[G] under w -> from_word(w).
  GroupAlgebraElement linearize(GroupOfFractions const& G, AlgebraElement const& a);

  GroupAlgebraElement multiply(GroupOfFractions const&    G,
                               GroupAlgebraElement const& a,
                               GroupAlgebraElement const& b);

  NilpotencyReport is_nilpotent(GroupOfFractions const&    G,
                                GroupAlgebraElement const& a,
                                std::size_t                k_max);

  // Coefficient of the identity of G.
  Scalar trace_deg_zero(GroupOfFractions const& G, GroupAlgebraElement const& a);

}  // namespace permrel

#endif  // PERMREL_ALGEBRA_HPP_
