#include "permrel/rewriting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    using index_type = PermutationGroup::index_type;

    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = w.size();
        for (auto x : w) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    // n^m, or nullopt once it passes cap.
    std::optional<std::uint64_t> checked_power(std::uint64_t n,
                                               std::size_t   m,
                                               std::uint64_t cap) {
      std::uint64_t result = 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (n != 0 && result > cap / n) {
          return std::nullopt;
        }
        result *= n;
      }
      if (result > cap) {
        return std::nullopt;
      }
      return result;
    }

    std::uint64_t ipow(std::uint64_t n, std::size_t m) {
      std::uint64_t r = 1;
      while (m-- > 0) {
        r *= n;
      }
      return r;
    }

    Word concat(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }  // namespace

  std::string to_string(Word const& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    return out + "]";
  }

  std::string to_string(GrowthType g) {
    return g == GrowthType::linear ? "linear" : "exponential";
  }

  std::string to_string(Side s) {
    return s == Side::left ? "left" : "right";
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidInstance
  ////////////////////////////////////////////////////////////////////////

  MonoidInstance::MonoidInstance(std::size_t l, PermutationGroup H, Budgets budgets)
      : _l(l),
        _group(std::move(H)),
        _classification(classify(_group)),
        _budgets(budgets) {
    if (l < 2) {
      throw InvalidArgument("l must be >= 2, got " + std::to_string(l));
    }
  }

  void MonoidInstance::validate(Word const& w) const {
    for (auto x : w) {
      if (x < 1 || x > n()) {
        throw InvalidArgument("letter " + std::to_string(x) + " outside 1.."
                              + std::to_string(n()));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting and classes
  ////////////////////////////////////////////////////////////////////////

  Word rewrite_step(MonoidInstance const& inst,
                    Word const&           w,
                    std::size_t           pos,
                    Permutation const&    sigma) {
    inst.validate(w);
    std::size_t const l = inst.l();
    if (pos < 1 || w.size() < l || pos > w.size() - l + 1) {
      throw InvalidArgument("position " + std::to_string(pos)
                            + " out of range for a word of length "
                            + std::to_string(w.size()) + " and l = "
                            + std::to_string(l));
    }
    if (!inst.group().contains(sigma)) {
      throw InvalidArgument("permutation " + sigma.to_cycle_string()
                            + " is not in H");
    }
    Word out = w;
    for (std::size_t p = pos - 1; p < pos - 1 + l; ++p) {
      out[p] = sigma(out[p]);
    }
    return out;
  }

  bool EquivalenceClass::contains(Word const& w) const {
    return std::binary_search(members.begin(), members.end(), w);
  }

  EquivalenceClass equivalence_class(MonoidInstance const& inst, Word const& w) {
    inst.validate(w);
    auto const&       H   = inst.group();
    std::size_t const l   = inst.l();
    std::size_t const cap = inst.budgets().class_cap;

    std::unordered_set<Word, WordHash> seen{w};
    std::vector<Word>                  queue{w};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Word const current = queue[head];
      if (current.size() < l) {
        break;
      }
      for (std::size_t pos = 0; pos + l <= current.size(); ++pos) {
        for (index_type a = 1; a < H.order(); ++a) {
          Word next = current;
          for (std::size_t p = pos; p < pos + l; ++p) {
            next[p] = H.apply(a, next[p]);
          }
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              throw BudgetExceeded("equivalence class of " + to_string(w)
                                   + " exceeds " + std::to_string(cap)
                                   + " members");
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return EquivalenceClass{std::move(queue)};
  }

  Word canonical_form(MonoidInstance const& inst, Word const& w) {
    return equivalence_class(inst, w).canonical();
  }

  bool words_equal_bfs(MonoidInstance const& inst, Word const& u, Word const& v) {
    inst.validate(v);
    if (u.size() != v.size()) {
      inst.validate(u);
      return false;
    }
    return equivalence_class(inst, u).contains(v);
  }

  bool words_equal_sweep(MonoidInstance const& inst, Word const& u, Word const& v) {
    if (!inst.classification().is_abelian) {
      throw PreconditionError("the sweep decision requires abelian H");
    }
    inst.validate(u);
    inst.validate(v);
    if (u.size() != v.size()) {
      return false;
    }
    std::size_t const l = inst.l();
    std::size_t const t = u.size();
    if (t < l) {
      return u == v;
    }
    auto const&       H       = inst.group();
    std::size_t const windows = t - l + 1;

    // A state is (position, tau of the l - 1 most recent windows).  Windows
    // that do not exist carry the identity.
    using State = std::vector<index_type>;
    State start(l, H.identity_index());
    start[0] = 0;  // position
    std::set<State>    visited{start};
    std::vector<State> stack{start};
    while (!stack.empty()) {
      State s = std::move(stack.back());
      stack.pop_back();
      std::size_t const p = s[0];
      if (p == t) {
        return true;
      }
      index_type rho = H.identity_index();
      for (std::size_t i = 1; i < l; ++i) {
        rho = H.multiply(s[i], rho);
      }
      point_type const exposed = H.apply(rho, u[p]);
      std::vector<index_type> choices;
      if (p < windows) {
        choices = H.transporters(exposed, v[p]);
      } else if (exposed == v[p]) {
        choices.push_back(H.identity_index());
      }
      for (auto tau : choices) {
        State next(l);
        next[0] = static_cast<index_type>(p + 1);
        for (std::size_t i = 1; i + 1 < l; ++i) {
          next[i] = s[i + 1];
        }
        next[l - 1] = tau;
        if (visited.insert(next).second) {
          stack.push_back(std::move(next));
        }
      }
    }
    return false;
  }

  bool words_equal(MonoidInstance const& inst, Word const& u, Word const& v) {
    if (inst.classification().is_abelian) {
      return words_equal_sweep(inst, u, v);
    }
    return words_equal_bfs(inst, u, v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms over orbit representatives
  ////////////////////////////////////////////////////////////////////////

  LemmaForm factorize_lemma_form(MonoidInstance const& inst, Word const& w) {
    inst.validate(w);
    std::size_t const l = inst.l();
    if (w.size() + 1 < l) {
      throw InvalidArgument("factorization needs |w| >= l - 1 = "
                            + std::to_string(l - 1) + ", got "
                            + std::to_string(w.size()));
    }
    auto const& H   = inst.group();
    auto const& cls = inst.classification();
    auto rep_of     = [&cls](point_type i) {
      return cls.orbit_representatives[cls.orbit_of[i - 1]];
    };

    LemmaForm out;
    // Left: push each new letter through the window, moving the boundary
    // letter onto its orbit representative.
    out.suffix.assign(w.begin(), w.begin() + (l - 1));
    for (std::size_t t = l - 1; t < w.size(); ++t) {
      Word window = out.suffix;
      window.push_back(w[t]);
      point_type const rep   = rep_of(window.front());
      index_type const sigma = H.transporters(window.front(), rep).front();
      out.w1.push_back(rep);
      for (std::size_t i = 1; i < l; ++i) {
        out.suffix[i - 1] = H.apply(sigma, window[i]);
      }
    }
    // Right: the mirror image, consuming letters from the end.
    out.prefix.assign(w.end() - (l - 1), w.end());
    Word w2_reversed;
    for (std::size_t t = w.size() - (l - 1); t-- > 0;) {
      Word window{w[t]};
      window.insert(window.end(), out.prefix.begin(), out.prefix.end());
      point_type const rep = rep_of(window.back());
      index_type const tau = H.transporters(window.back(), rep).front();
      w2_reversed.push_back(rep);
      for (std::size_t i = 0; i + 1 < l; ++i) {
        out.prefix[i] = H.apply(tau, window[i]);
      }
    }
    out.w2.assign(w2_reversed.rbegin(), w2_reversed.rend());

    if (!words_equal(inst, w, concat(out.w1, out.suffix))
        || !words_equal(inst, w, concat(out.prefix, out.w2))) {
      throw ConsistencyError("lemma form of " + to_string(w)
                             + " does not represent the same element");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  LengthPartition::LengthPartition(MonoidInstance const& inst, std::size_t m)
      : _n(inst.n()), _m(m) {
    auto total = checked_power(_n, m, inst.budgets().enumeration_cap);
    if (!total) {
      throw BudgetExceeded(std::to_string(_n) + "^" + std::to_string(m)
                           + " words exceed the enumeration cap of "
                           + std::to_string(inst.budgets().enumeration_cap));
    }
    constexpr auto unassigned = static_cast<std::uint32_t>(-1);
    _class_of.assign(*total, unassigned);
    for (std::uint64_t code = 0; code < *total; ++code) {
      if (_class_of[code] != unassigned) {
        continue;
      }
      auto const id = static_cast<std::uint32_t>(_canonical.size());
      auto       eq = equivalence_class(inst, decode(code));
      for (auto const& member : eq.members) {
        _class_of[encode(member)] = id;
      }
      _canonical.push_back(eq.canonical());
    }
  }

  std::uint64_t LengthPartition::encode(Word const& w) const {
    std::uint64_t code = 0;
    for (auto x : w) {
      code = code * _n + (x - 1);
    }
    return code;
  }

  Word LengthPartition::decode(std::uint64_t code) const {
    Word w(_m);
    for (std::size_t i = _m; i-- > 0;) {
      w[i] = static_cast<letter_type>(code % _n + 1);
      code /= _n;
    }
    return w;
  }

  std::uint64_t count_elements_of_length(MonoidInstance const& inst, std::size_t m) {
    return LengthPartition(inst, m).num_classes();
  }

  GrowthReport growth_classify(MonoidInstance const& inst, std::size_t m_max) {
    std::size_t const l = inst.l();
    if (m_max < l) {
      throw InvalidArgument("growth_classify needs m_max >= l = " + std::to_string(l));
    }
    auto const&  cls = inst.classification();
    GrowthReport out;
    out.type = cls.is_transitive ? GrowthType::linear : GrowthType::exponential;
    for (std::size_t m = 1; m <= m_max; ++m) {
      out.counts.push_back(count_elements_of_length(inst, m));
    }

    auto fail = [&](std::string const& what) {
      throw ConsistencyError("growth table contradicts "
                             + to_string(out.type) + " growth: " + what);
    };
    std::uint64_t const n = inst.n();
    if (cls.is_transitive) {
      // Every element of length m >= l - 1 is x_1^{m-l+1} times a word of
      // length l - 1, so right multiplication by x_1 is onto the next length.
      std::uint64_t const bound = ipow(n, l - 1);
      for (std::size_t m = std::max<std::size_t>(l - 1, 1); m <= m_max; ++m) {
        std::uint64_t const c = out.counts[m - 1];
        if (c > bound) {
          fail("count(" + std::to_string(m) + ") exceeds n^(l-1)");
        }
        if (m > l - 1 && m >= 2 && c > out.counts[m - 2]) {
          fail("count increases at m = " + std::to_string(m));
        }
        if (cls.is_regular && cls.is_abelian && c != bound) {
          fail("count(" + std::to_string(m) + ") != |H|^(l-1) for regular abelian H");
        }
      }
    } else {
      std::uint64_t const r    = cls.orbits.size();
      std::uint64_t       prev = 1;
      for (std::size_t m = 1; m <= m_max; ++m) {
        std::uint64_t const c = out.counts[m - 1];
        if (c <= prev) {
          fail("count does not increase at m = " + std::to_string(m));
        }
        if (c < ipow(r, m)) {
          fail("count(" + std::to_string(m) + ") below r^m");
        }
        prev = c;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellativity
  ////////////////////////////////////////////////////////////////////////

  std::optional<CancellativityWitness>
  cancellativity_witness(MonoidInstance const& inst, std::size_t L) {
    if (L < inst.l()) {
      throw InvalidArgument("cancellativity_witness needs L >= l = "
                            + std::to_string(inst.l()));
    }
    std::uint64_t const          n = inst.n();
    std::vector<LengthPartition> parts;
    for (std::size_t m = 0; m <= L; ++m) {
      parts.emplace_back(inst, m);
    }

    using Candidate = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
    for (std::size_t t = 2; t <= L; ++t) {
      auto const& whole = parts[t];
      std::vector<std::vector<std::uint64_t>> members(whole.num_classes());
      for (std::uint64_t code = 0; code < whole.num_words(); ++code) {
        members[whole.class_of_code(code)].push_back(code);
      }
      for (Side side : {Side::left, Side::right}) {
        for (std::size_t r = 1; r < t; ++r) {
          std::size_t const   m     = t - r;
          std::uint64_t const split = ipow(n, side == Side::left ? m : r);
          auto a_code = [&](std::uint64_t c) {
            return side == Side::left ? c / split : c % split;
          };
          auto b_code = [&](std::uint64_t c) {
            return side == Side::left ? c % split : c / split;
          };
          std::optional<Candidate> best;
          for (auto const& cls_members : members) {
            // Group the members of this class by the element their a-part
            // represents; a group whose b-parts span two classes is a witness.
            std::map<std::uint32_t, std::vector<std::uint64_t>> by_a;
            for (auto c : cls_members) {
              by_a[parts[r].class_of_code(a_code(c))].push_back(c);
            }
            for (auto const& [a_cls, group] : by_a) {
              std::map<std::uint32_t, std::uint64_t> min_b;
              for (auto c : group) {
                auto const b   = b_code(c);
                auto const bc  = parts[m].class_of_code(b);
                auto       it  = min_b.find(bc);
                if (it == min_b.end() || b < it->second) {
                  min_b[bc] = b;
                }
              }
              if (min_b.size() < 2) {
                continue;
              }
              for (auto c : group) {
                auto const b  = b_code(c);
                auto const bc = parts[m].class_of_code(b);
                std::optional<std::uint64_t> other;
                for (auto const& [cls2, b2] : min_b) {
                  if (cls2 != bc && (!other || b2 < *other)) {
                    other = b2;
                  }
                }
                Candidate cand{a_code(c), b, *other};
                if (!best || cand < *best) {
                  best = cand;
                }
              }
            }
          }
          if (best) {
            CancellativityWitness w{side,
                                    parts[r].decode(std::get<0>(*best)),
                                    parts[m].decode(std::get<1>(*best)),
                                    parts[m].decode(std::get<2>(*best))};
            Word const ab = side == Side::left ? concat(w.a, w.b) : concat(w.b, w.a);
            Word const ac = side == Side::left ? concat(w.a, w.c) : concat(w.c, w.a);
            if (!words_equal(inst, ab, ac)
                || canonical_form(inst, w.b) == canonical_form(inst, w.c)) {
              throw ConsistencyError("cancellativity witness failed verification");
            }
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace permrel
