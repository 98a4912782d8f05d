#ifndef PERMREL_TESTS_SUPPORT_HPP_
#define PERMREL_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permrel/permgroup.hpp"
#include "permrel/rewriting.hpp"

namespace permrel::test {

  inline Permutation perm(std::vector<point_type> images) {
    return Permutation(std::move(images));
  }

  inline PermutationGroup group(std::vector<std::vector<point_type>> gens, std::size_t n) {
    std::vector<Permutation> g;
    for (auto& x : gens) {
      g.emplace_back(std::move(x));
    }
    return generate_closure(g, n);
  }

  // The regular representation of Sym_3 on 6 points: permutations of {0,1,2}
  // listed lexicographically are the points 1..6, and g acts by h -> g h.
  inline PermutationGroup regular_sym3() {
    std::vector<std::vector<int>> elts;
    std::vector<int>              p{0, 1, 2};
    do {
      elts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](std::vector<int> const& q) {
      return static_cast<point_type>(
          std::find(elts.begin(), elts.end(), q) - elts.begin() + 1);
    };
    std::vector<Permutation> gens;
    for (auto const& g : elts) {
      std::vector<point_type> images;
      for (auto const& h : elts) {
        std::vector<int> gh(3);
        for (int i = 0; i < 3; ++i) {
          gh[i] = g[h[i]];
        }
        images.push_back(index(gh));
      }
      gens.emplace_back(std::move(images));
    }
    return generate_closure(gens, 6);
  }

  // The fixed instance suite.
  inline MonoidInstance inst_A() {  // Z_3 regular
    return MonoidInstance(2, group({{2, 3, 1}}, 3));
  }
  inline MonoidInstance inst_B() {  // Klein four, regular
    return MonoidInstance(2, group({{2, 1, 4, 3}, {3, 4, 1, 2}}, 4));
  }
  inline MonoidInstance inst_C() {  // Z_4 regular, l = 3
    return MonoidInstance(3, group({{2, 3, 4, 1}}, 4));
  }
  inline MonoidInstance inst_D() {  // semiregular, two orbits
    return MonoidInstance(2, group({{2, 1, 4, 3}}, 4));
  }
  inline MonoidInstance inst_E() {  // (12) fixes 3
    return MonoidInstance(2, group({{2, 1, 3}}, 3));
  }
  inline MonoidInstance inst_F() {  // regular Sym_3, nonabelian
    return MonoidInstance(2, regular_sym3());
  }
  inline MonoidInstance inst_G() {  // trivial group: free monoid
    return MonoidInstance(2, group({}, 2));
  }

  inline std::vector<Word> all_words(std::size_t n, std::size_t m) {
    std::vector<Word> out;
    Word              w(m, 1);
    while (true) {
      out.push_back(w);
      std::size_t i = m;
      while (i > 0 && w[i - 1] == n) {
        w[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++w[i - 1];
    }
    return out;
  }

  // Independent oracle: union-find over all n^m words joined by every single
  // rewrite.  Uses only Permutation::operator() and the element list.
  class BruteForcePartition {
   public:
    BruteForcePartition(MonoidInstance const& inst, std::size_t m)
        : _n(inst.n()), _words(all_words(inst.n(), m)) {
      _parent.resize(_words.size());
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      for (std::size_t i = 0; i < _words.size(); ++i) {
        for (std::size_t pos = 0; pos + inst.l() <= m; ++pos) {
          for (auto const& s : inst.group().elements()) {
            Word v = _words[i];
            for (std::size_t p = pos; p < pos + inst.l(); ++p) {
              v[p] = s(v[p]);
            }
            unite(i, code(v));
          }
        }
      }
    }

    std::size_t code(Word const& w) const {
      std::size_t c = 0;
      for (auto x : w) {
        c = c * _n + (x - 1);
      }
      return c;
    }

    bool same(Word const& u, Word const& v) {
      return find(code(u)) == find(code(v));
    }

    std::size_t num_classes() {
      std::size_t k = 0;
      for (std::size_t i = 0; i < _parent.size(); ++i) {
        k += find(i) == i;
      }
      return k;
    }

    std::vector<Word> const& words() const {
      return _words;
    }

   private:
    std::size_t find(std::size_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }
    void unite(std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        _parent[a] = b;
      }
    }

    std::size_t              _n;
    std::vector<Word>        _words;
    std::vector<std::size_t> _parent;
  };

  inline Word cat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline Word repeat(letter_type x, std::size_t k) {
    return Word(k, x);
  }

}  // namespace permrel::test

#endif  // PERMREL_TESTS_SUPPORT_HPP_
