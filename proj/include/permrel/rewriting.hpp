#ifndef PERMREL_REWRITING_HPP_
#define PERMREL_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permrel/permgroup.hpp"

namespace permrel {

  // Letter j stands for the generator x_j, 1 <= j <= n.
  using letter_type = point_type;
  using Word        = std::vector<letter_type>;

  std::string to_string(Word const& w);

  struct Budgets {
    // Largest equivalence class a BFS closure may build.
    std::size_t class_cap = 1'000'000;
    // Largest number of words an exhaustive length enumeration may visit.
    std::uint64_t enumeration_cap = 10'000'000;
  };

  // The monoid S_{n,l}(H) = < x_1..x_n | x_{i_1}..x_{i_l} = x_{s(i_1)}..x_{s(i_l)},
  // s in H >.
  class MonoidInstance {
   public:
    // Throws InvalidArgument if l < 2.
    MonoidInstance(std::size_t l, PermutationGroup H, Budgets budgets = {});

    std::size_t n() const noexcept {
      return _group.degree();
    }
    std::size_t l() const noexcept {
      return _l;
    }
    PermutationGroup const& group() const noexcept {
      return _group;
    }
    GroupClassification const& classification() const noexcept {
      return _classification;
    }
    Budgets const& budgets() const noexcept {
      return _budgets;
    }
    void set_budgets(Budgets b) noexcept {
      _budgets = b;
    }

    // Throws InvalidArgument if some letter is outside 1..n.
    void validate(Word const& w) const;

   private:
    std::size_t         _l;
    PermutationGroup    _group;
    GroupClassification _classification;
    Budgets             _budgets;
  };

  // Replace the l letters starting at 1-based position pos by their images
  // under sigma.
  Word rewrite_step(MonoidInstance const& inst,
                    Word const&           w,
                    std::size_t           pos,
                    Permutation const&    sigma);

  struct EquivalenceClass {
    // Sorted lexicographically; members.front() is the canonical form.
    std::vector<Word> members;

    Word const& canonical() const {
      return members.front();
    }
    std::size_t size() const noexcept {
      return members.size();
    }
    bool contains(Word const& w) const;
  };

  // The fibre of w under the projection from the free monoid, by BFS over
  // every window and every element of H.  Throws BudgetExceeded past
  // budgets().class_cap.
  EquivalenceClass equivalence_class(MonoidInstance const& inst, Word const& w);

  // Decides u = v in S_{n,l}(H).  Uses the windowed sweep when H is abelian
  // and BFS otherwise.
  bool words_equal(MonoidInstance const& inst, Word const& u, Word const& v);

  // Left-to-right sweep: the word obtained after the k-th window is rewritten
  // by tau_k must expose v's letters.  Backtracks when tau_k is not unique.
  // Only valid for abelian H (throws PreconditionError otherwise).
  bool words_equal_sweep(MonoidInstance const& inst, Word const& u, Word const& v);

  bool words_equal_bfs(MonoidInstance const& inst, Word const& u, Word const& v);

  // Lexicographically least member of the class of w.
  Word canonical_form(MonoidInstance const& inst, Word const& w);

  // w = w1 . suffix = prefix . w2 with w1, w2 over orbit representatives and
  // |suffix| = |prefix| = l - 1.
  struct LemmaForm {
    Word w1;
    Word suffix;
    Word prefix;
    Word w2;
  };

  // Throws InvalidArgument if |w| < l - 1.
  LemmaForm factorize_lemma_form(MonoidInstance const& inst, Word const& w);

  // All n^m words of length m split into classes.  Words are coded in base n
  // with the first letter most significant, so code order is lex order.
  class LengthPartition {
   public:
    LengthPartition(MonoidInstance const& inst, std::size_t m);

    std::size_t length() const noexcept {
      return _m;
    }
    std::size_t num_classes() const noexcept {
      return _canonical.size();
    }
    std::uint64_t num_words() const noexcept {
      return _class_of.size();
    }
    std::uint32_t class_of(Word const& w) const {
      return _class_of[encode(w)];
    }
    std::uint32_t class_of_code(std::uint64_t code) const {
      return _class_of[code];
    }
    // Classes are numbered in order of their canonical forms.
    Word const& canonical(std::uint32_t cls) const {
      return _canonical[cls];
    }
    std::uint64_t encode(Word const& w) const;
    Word          decode(std::uint64_t code) const;

   private:
    std::size_t                _n;
    std::size_t                _m;
    std::vector<std::uint32_t> _class_of;
    std::vector<Word>          _canonical;
  };

  // Number of elements of S_{n,l}(H) of length m.
  std::uint64_t count_elements_of_length(MonoidInstance const& inst, std::size_t m);

  enum class GrowthType { linear, exponential };

  std::string to_string(GrowthType g);

  struct GrowthReport {
    GrowthType type;
    // counts[m - 1] = count_elements_of_length(m), m = 1..m_max.
    std::vector<std::uint64_t> counts;
  };

  // Linear iff H is transitive.  The count table is checked against the
  // predicate; a mismatch throws ConsistencyError.
  GrowthReport growth_classify(MonoidInstance const& inst, std::size_t m_max);

  enum class Side { left, right };

  std::string to_string(Side s);

  // a b = a c (left) or b a = c a (right) with b != c.
  struct CancellativityWitness {
    Side side;
    Word a;
    Word b;
    Word c;
  };

  // Exhaustive search over |a| + |b| <= L, |a| >= 1.  Scan order: total
  // length, then left before right, then |a|, then the lexicographically
  // least (a, b, c).
  std::optional<CancellativityWitness>
  cancellativity_witness(MonoidInstance const& inst, std::size_t L);

}  // namespace permrel

#endif  // PERMREL_REWRITING_HPP_
