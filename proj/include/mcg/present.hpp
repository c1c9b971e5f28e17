#ifndef MCG_PRESENT_HPP
#define MCG_PRESENT_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mcg/groups.hpp"

namespace mcg {

/// A relator word: letters (generator index, exponent +-1).
using Word = std::vector<std::pair<int, int>>;

/// A finite presentation. Relators are freely reduced on construction;
/// letters must reference declared generators with exponent +-1.
class Presentation {
public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string> &generators() const { return generators_; }
  const std::vector<Word> &relators() const { return relators_; }

  std::size_t total_relator_length() const;

  friend bool operator==(const Presentation &, const Presentation &) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word invert_word(const Word &w);

/// Deterministic fixed-point simplification: drop empty relators, kill
/// generators trivialized by length-1 relators, then repeatedly eliminate a
/// generator that occurs exactly once in some relator, always picking the
/// elimination that minimizes (resulting total relator length, generator
/// index, relator index). Never adds generators, so it terminates.
Presentation tietze_simplify(const Presentation &p);

struct Abelianization {
  long long free_rank = 0;
  std::vector<long long> torsion; // elementary divisors > 1, divisibility chain

  friend bool operator==(const Abelianization &, const Abelianization &) = default;
};

/// Smith normal form of the relator exponent-sum matrix.
Abelianization abelianization(const Presentation &p);

/// Diagonal of the Smith normal form (nonzero entries, divisibility chain).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// Number of homomorphisms into a finite group: tuples of images satisfying
/// every relator. Relators that pin a generator image are propagated before
/// the residual brute-force search; throws BudgetExceeded past `node_budget`
/// search nodes.
long long count_homs(const Presentation &p, const FiniteGroup &target,
                     long long node_budget = 50'000'000);

struct EquivalenceReport {
  bool consistent = false;
  std::string distinguished_by; // empty when consistent
  // (target name, count for lhs, count for rhs)
  std::vector<std::tuple<std::string, long long, long long>> hom_counts;
  std::string caveat;
};

/// Compares abelianization and hom counts over the fixed target list (all
/// groups of order <= 12 and S4). Matching evidence is not a proof of
/// isomorphism; the report's caveat says so.
EquivalenceReport equivalence_evidence(const Presentation &p1, const Presentation &p2);

} // namespace mcg

#endif
