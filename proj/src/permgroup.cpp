#include "permrel/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    struct ImagesHash {
      std::size_t operator()(Permutation const& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : p.images()) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace

  Permutation::Permutation(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::size_t const n = _images.size();
    std::vector<bool> seen(n + 1, false);
    for (auto x : _images) {
      if (x < 1 || x > n) {
        throw InvalidArgument("value " + std::to_string(x)
                              + " out of range 1.." + std::to_string(n));
      }
      if (seen[x]) {
        throw InvalidArgument("value " + std::to_string(x) + " repeated");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<point_type> im(n);
    std::iota(im.begin(), im.end(), point_type(1));
    return Permutation(std::move(im));
  }

  Permutation Permutation::inverse() const {
    std::vector<point_type> im(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      im[_images[i] - 1] = static_cast<point_type>(i + 1);
    }
    return Permutation(std::move(im));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  std::string Permutation::to_cycle_string() const {
    std::string       out;
    std::vector<bool> done(_images.size() + 1, false);
    for (point_type i = 1; i <= _images.size(); ++i) {
      if (done[i] || (*this)(i) == i) {
        continue;
      }
      out += '(';
      for (point_type j = i; !done[j]; j = (*this)(j)) {
        done[j] = true;
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw InvalidArgument("degree mismatch: " + std::to_string(p.degree())
                            + " vs " + std::to_string(q.degree()));
    }
    std::vector<point_type> im(q.degree());
    for (point_type i = 1; i <= q.degree(); ++i) {
      im[i - 1] = p(q(i));
    }
    return Permutation(std::move(im));
  }

  ////////////////////////////////////////////////////////////////////////
  // PermutationGroup
  ////////////////////////////////////////////////////////////////////////

  std::optional<PermutationGroup::index_type>
  PermutationGroup::index_of(Permutation const& p) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<index_type>(it - _elements.begin());
  }

  std::uint64_t PermutationGroup::element_order(index_type a) const {
    std::uint64_t k = 1;
    for (index_type x = a; x != identity_index(); x = multiply(a, x)) {
      ++k;
    }
    return k;
  }

  std::vector<PermutationGroup::index_type>
  PermutationGroup::transporters(point_type x, point_type y) const {
    std::vector<index_type> out;
    for (index_type a = 0; a < order(); ++a) {
      if (apply(a, x) == y) {
        out.push_back(a);
      }
    }
    return out;
  }

  PermutationGroup generate_closure(std::span<Permutation const> generators,
                                    std::size_t                  n) {
    for (auto const& g : generators) {
      if (g.degree() != n) {
        throw InvalidArgument("generator " + g.to_cycle_string()
                              + " has degree " + std::to_string(g.degree())
                              + ", expected " + std::to_string(n));
      }
    }
    std::set<Permutation>    found{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto const& x : frontier) {
        for (auto const& g : generators) {
          auto y = compose(g, x);
          if (found.insert(y).second) {
            if (found.size() > PermutationGroup::max_order) {
              throw BudgetExceeded("group order exceeds "
                                   + std::to_string(PermutationGroup::max_order));
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }

    using index_type = PermutationGroup::index_type;
    PermutationGroup H;
    H._degree     = n;
    H._elements   = std::vector<Permutation>(found.begin(), found.end());
    H._generators = std::vector<Permutation>(generators.begin(), generators.end());

    std::size_t const N = H._elements.size();
    std::unordered_map<Permutation, index_type, ImagesHash> where;
    for (index_type a = 0; a < N; ++a) {
      where.emplace(H._elements[a], a);
    }
    H._mult.resize(N * N);
    H._inv.resize(N);
    H._img.resize(N * n);
    for (index_type a = 0; a < N; ++a) {
      auto const& pa = H._elements[a];
      for (index_type b = 0; b < N; ++b) {
        H._mult[a * N + b] = where.at(compose(pa, H._elements[b]));
      }
      H._inv[a] = where.at(pa.inverse());
      std::copy(pa.images().begin(), pa.images().end(), H._img.begin() + a * n);
    }
    return H;
  }

  GroupClassification classify(PermutationGroup const& H) {
    using index_type = PermutationGroup::index_type;
    GroupClassification out;
    std::size_t const   n = H.degree();
    std::size_t const   N = H.order();

    out.is_abelian = true;
    for (index_type a = 0; a < N && out.is_abelian; ++a) {
      for (index_type b = a + 1; b < N; ++b) {
        if (H.multiply(a, b) != H.multiply(b, a)) {
          out.is_abelian = false;
          break;
        }
      }
    }

    out.is_semiregular = true;
    for (index_type a = 1; a < N && out.is_semiregular; ++a) {
      for (point_type i = 1; i <= n; ++i) {
        if (H.apply(a, i) == i) {
          out.is_semiregular = false;
          break;
        }
      }
    }

    out.orbit_of.assign(n, static_cast<std::size_t>(-1));
    for (point_type i = 1; i <= n; ++i) {
      if (out.orbit_of[i - 1] != static_cast<std::size_t>(-1)) {
        continue;
      }
      std::set<point_type> orbit;
      for (index_type a = 0; a < N; ++a) {
        orbit.insert(H.apply(a, i));
      }
      for (auto j : orbit) {
        out.orbit_of[j - 1] = out.orbits.size();
      }
      out.orbits.emplace_back(orbit.begin(), orbit.end());
      out.orbit_representatives.push_back(i);
    }
    out.is_transitive = out.orbits.size() == 1;
    out.is_regular    = out.is_semiregular && out.is_transitive;
    return out;
  }

  std::vector<PermutationGroup::index_type> sigma_map(PermutationGroup const& H) {
    std::vector<PermutationGroup::index_type> out;
    for (point_type i = 1; i <= H.degree(); ++i) {
      auto t = H.transporters(i, 1);
      if (t.size() != 1) {
        throw PreconditionError(
            "sigma_map requires regular H: " + std::to_string(t.size())
            + " elements map " + std::to_string(i) + " to 1");
      }
      out.push_back(t.front());
    }
    return out;
  }

}  // namespace permrel
