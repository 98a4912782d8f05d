#include "permrel/algebra.hpp"

#include <numeric>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    std::string monomial_string(Word const& w) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto x : w) {
        out += "x" + std::to_string(x);
      }
      return out;
    }

    bool is_power_of(std::uint64_t x, std::uint64_t p) {
      while (x % p == 0) {
        x /= p;
      }
      return x == 1;
    }

    // Incremental row echelon form over a field.
    class Echelon {
     public:
      // Reduces v against the stored rows; returns the remainder.
      Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < _rows.size(); ++r) {
          auto const& c = v[_pivots[r]];
          if (!c.is_zero()) {
            Scalar const f = c;
            for (std::size_t i = 0; i < v.size(); ++i) {
              v[i] -= f * _rows[r][i];
            }
          }
        }
        return v;
      }

      // Adds v if it is independent; returns whether it was added.
      bool insert(Vector const& v) {
        Vector rem = reduce(v);
        for (std::size_t i = 0; i < rem.size(); ++i) {
          if (!rem[i].is_zero()) {
            Scalar const lead = rem[i];
            for (auto& x : rem) {
              x /= lead;
            }
            // keep earlier rows reduced at the new pivot
            for (auto& row : _rows) {
              Scalar const f = row[i];
              if (!f.is_zero()) {
                for (std::size_t k = 0; k < row.size(); ++k) {
                  row[k] -= f * rem[k];
                }
              }
            }
            _rows.push_back(std::move(rem));
            _pivots.push_back(i);
            return true;
          }
        }
        return false;
      }

      bool contains(Vector const& v) const {
        for (auto const& x : reduce(v)) {
          if (!x.is_zero()) {
            return false;
          }
        }
        return true;
      }

      std::size_t rank() const noexcept {
        return _rows.size();
      }

     private:
      std::vector<Vector>      _rows;
      std::vector<std::size_t> _pivots;
    };

    bool is_zero_vector(Vector const& v) {
      for (auto const& x : v) {
        if (!x.is_zero()) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement AlgebraElement::one(Field field) {
    AlgebraElement a(field);
    a._terms.emplace(Word{}, Scalar(field, 1));
    return a;
  }

  AlgebraElement AlgebraElement::monomial(MonoidInstance const& inst,
                                          Field                 field,
                                          Word const&           w,
                                          Rational              coefficient) {
    AlgebraElement a(field);
    a.add_term(inst, w, Scalar(field, std::move(coefficient)));
    return a;
  }

  bool AlgebraElement::is_homogeneous() const {
    if (_terms.empty()) {
      return true;
    }
    auto const len = _terms.begin()->first.size();
    for (auto const& [w, c] : _terms) {
      if (w.size() != len) {
        return false;
      }
    }
    return true;
  }

  void AlgebraElement::add_canonical(Word const& w, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto it = _terms.find(w);
    if (it == _terms.end()) {
      _terms.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) {
      _terms.erase(it);
    }
  }

  void AlgebraElement::add_term(MonoidInstance const& inst, Word const& w, Scalar const& c) {
    if (!(c.field() == _field)) {
      throw InvalidArgument("field mismatch: " + _field.name() + " vs "
                            + c.field().name());
    }
    add_canonical(canonical_form(inst, w), c);
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    if (!(other._field == _field)) {
      throw InvalidArgument("field mismatch: " + _field.name() + " vs "
                            + other._field.name());
    }
    for (auto const& [w, c] : other._terms) {
      add_canonical(w, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    if (!(other._field == _field)) {
      throw InvalidArgument("field mismatch: " + _field.name() + " vs "
                            + other._field.name());
    }
    for (auto const& [w, c] : other._terms) {
      add_canonical(w, -c);
    }
    return *this;
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [w, c] : _terms) {
      Rational v   = c.value();
      bool     neg = v < 0;
      if (neg) {
        v = -v;
      }
      if (!first) {
        out += neg ? " - " : " + ";
      } else if (neg) {
        out += "-";
      }
      first = false;
      if (v != 1 || w.empty()) {
        out += v.str();
        if (!w.empty()) {
          out += "*";
        }
      }
      if (!w.empty()) {
        out += monomial_string(w);
      }
    }
    return out;
  }

  AlgebraElement multiply_elements(MonoidInstance const& inst,
                                   AlgebraElement const& a,
                                   AlgebraElement const& b) {
    if (!(a.field() == b.field())) {
      throw InvalidArgument("field mismatch: " + a.field().name() + " vs "
                            + b.field().name());
    }
    AlgebraElement out(a.field());
    for (auto const& [u, cu] : a.terms()) {
      for (auto const& [v, cv] : b.terms()) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        out.add_canonical(canonical_form(inst, uv), cu * cv);
      }
    }
    return out;
  }

  AlgebraElement power(MonoidInstance const& inst, AlgebraElement const& a, std::size_t k) {
    AlgebraElement out = AlgebraElement::one(a.field());
    for (std::size_t i = 0; i < k; ++i) {
      out = multiply_elements(inst, out, a);
    }
    return out;
  }

  NilpotencyReport is_nilpotent(MonoidInstance const& inst,
                                AlgebraElement const& a,
                                std::size_t           k_max) {
    NilpotencyReport out;
    out.k_max       = k_max;
    out.homogeneous = a.is_homogeneous();
    AlgebraElement p = a;
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > 1) {
        p = multiply_elements(inst, p, a);
      }
      if (p.is_zero()) {
        out.nilpotent = true;
        out.exponent  = k;
        return out;
      }
    }
    return out;
  }

  std::map<std::size_t, AlgebraElement> homogeneous_components(AlgebraElement const& a) {
    std::map<std::size_t, AlgebraElement> out;
    for (auto const& [w, c] : a.terms()) {
      auto it = out.try_emplace(w.size(), a.field()).first;
      it->second.add_canonical(w, c);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // K[T(G)]
  ////////////////////////////////////////////////////////////////////////

  Vector FiniteDimAlgebra::zero() const {
    return Vector(dimension(), Scalar(field, 0));
  }

  Vector FiniteDimAlgebra::basis_vector(std::size_t i) const {
    Vector v = zero();
    v[i]     = Scalar(field, 1);
    return v;
  }

  FiniteDimAlgebra torsion_group_algebra(GroupOfFractions const& G, Field field) {
    FiniteDimAlgebra A;
    A.field = field;
    A.basis = G.torsion_elements();
    A.identity = G.torsion_index(G.torsion_identity());
    std::size_t const dim = A.basis.size();
    A.table.assign(dim, std::vector<std::size_t>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        A.table[i][j] = G.torsion_index(G.torsion_multiply(A.basis[i], A.basis[j]));
      }
      A.element_orders.push_back(*G.torsion_order(FractionElement{0, A.basis[i]}));
    }
    return A;
  }

  Vector fd_multiply(FiniteDimAlgebra const& A, Vector const& u, Vector const& v) {
    Vector out = A.zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
          out[A.table[i][j]] += u[i] * v[j];
        }
      }
    }
    return out;
  }

  NilpotencyReport fd_is_nilpotent(FiniteDimAlgebra const& A,
                                   Vector const&           v,
                                   std::size_t             k_max) {
    NilpotencyReport out;
    out.k_max       = k_max;
    out.homogeneous = true;
    Vector p        = v;
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > 1) {
        p = fd_multiply(A, p, v);
      }
      if (is_zero_vector(p)) {
        out.nilpotent = true;
        out.exponent  = k;
        return out;
      }
    }
    return out;
  }

  std::uint64_t radical_dimension_formula(FiniteDimAlgebra const& A) {
    std::uint64_t const p = A.field.characteristic();
    std::uint64_t const T = A.dimension();
    if (p == 0 || T % p != 0) {
      return 0;
    }
    std::uint64_t sylow = 1;
    for (std::uint64_t x = T; x % p == 0; x /= p) {
      sylow *= p;
    }
    return T - T / sylow;
  }

  std::vector<Vector> radical_basis(FiniteDimAlgebra const& A) {
    std::size_t const dim = A.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        if (A.table[i][j] != A.table[j][i]) {
          throw InvalidArgument("radical_basis needs a commutative algebra");
        }
      }
    }
    std::uint64_t const p = A.field.characteristic();
    if (p == 0 || dim % p != 0) {
      return {};
    }

    std::vector<std::size_t> sylow;
    for (std::size_t g = 0; g < dim; ++g) {
      if (g != A.identity && is_power_of(A.element_orders[g], p)) {
        sylow.push_back(g);
      }
    }
    // h = identity first, then the remaining basis elements in order.
    std::vector<std::size_t> hs{A.identity};
    for (std::size_t h = 0; h < dim; ++h) {
      if (h != A.identity) {
        hs.push_back(h);
      }
    }

    Scalar const        one(A.field, 1);
    Echelon             span;
    std::vector<Vector> out;
    for (auto h : hs) {
      for (auto g : sylow) {
        Vector v = A.zero();
        v[A.table[g][h]] += one;
        v[h] -= one;
        if (span.insert(v)) {
          out.push_back(std::move(v));
        }
      }
    }
    if (out.size() != radical_dimension_formula(A)) {
      throw ConsistencyError("radical span has dimension " + std::to_string(out.size())
                             + ", expected "
                             + std::to_string(radical_dimension_formula(A)));
    }
    return out;
  }

  std::size_t rank(std::vector<Vector> const& vectors) {
    Echelon e;
    for (auto const& v : vectors) {
      e.insert(v);
    }
    return e.rank();
  }

  bool quotient_is_reduced(FiniteDimAlgebra const&    A,
                           std::vector<Vector> const& radical,
                           std::vector<Vector> const& probes) {
    Echelon span;
    for (auto const& v : radical) {
      span.insert(v);
    }
    for (auto const& v : probes) {
      if (span.contains(v)) {
        continue;
      }
      Vector p = v;
      for (std::size_t k = 2; k <= A.dimension() + 1; ++k) {
        p = fd_multiply(A, p, v);
        if (span.contains(p)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // K[G]
  ////////////////////////////////////////////////////////////////////////

  void GroupAlgebraElement::add_term(FractionElement const& g, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto it = terms.find(g);
    if (it == terms.end()) {
      terms.emplace(g, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) {
      terms.erase(it);
    }
  }

  GroupAlgebraElement linearize(GroupOfFractions const& G, AlgebraElement const& a) {
    GroupAlgebraElement out{a.field(), {}};
    for (auto const& [w, c] : a.terms()) {
      out.add_term(G.from_word(w), c);
    }
    return out;
  }

  GroupAlgebraElement multiply(GroupOfFractions const&    G,
                               GroupAlgebraElement const& a,
                               GroupAlgebraElement const& b) {
    if (!(a.field == b.field)) {
      throw InvalidArgument("field mismatch: " + a.field.name() + " vs "
                            + b.field.name());
    }
    GroupAlgebraElement out{a.field, {}};
    for (auto const& [g, cg] : a.terms) {
      for (auto const& [h, ch] : b.terms) {
        out.add_term(G.multiply(g, h), cg * ch);
      }
    }
    return out;
  }

  NilpotencyReport is_nilpotent(GroupOfFractions const&    G,
                                GroupAlgebraElement const& a,
                                std::size_t                k_max) {
    NilpotencyReport out;
    out.k_max = k_max;
    out.homogeneous = true;
    if (!a.terms.empty()) {
      auto const k0 = a.terms.begin()->first.k;
      for (auto const& [g, c] : a.terms) {
        out.homogeneous = out.homogeneous && g.k == k0;
      }
    }
    GroupAlgebraElement p = a;
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (k > 1) {
        p = multiply(G, p, a);
      }
      if (p.is_zero()) {
        out.nilpotent = true;
        out.exponent  = k;
        return out;
      }
    }
    return out;
  }

  Scalar trace_deg_zero(GroupOfFractions const& G, GroupAlgebraElement const& a) {
    auto it = a.terms.find(G.identity());
    return it == a.terms.end() ? Scalar(a.field, 0) : it->second;
  }

}  // namespace permrel
