#pragma once

#include <vector>

#include "nrack/group.hpp"
#include "nrack/nrack.hpp"
#include "nrack/smith.hpp"

namespace nrack {

/// A word in a free group: generator i is written i+1, its inverse -(i+1).
using Word = std::vector<int>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;

  /// Checks indices and the absence of empty relators.
  void validate() const;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

enum class RelatorConvention {
  /// [x_1..x_n] * x_1..x_{n-1} x_n^-1 x_{n-1}^-1..x_1^-1, i.e. imposes
  /// [x_1..x_n] = x_1..x_{n-1} x_n x_{n-1}^-1..x_1^-1. Vanishes on conjugation n-racks.
  Conjugation,
  /// x_1^-1..x_{n-1}^-1 x_n^-1 x_{n-1}..x_1 * [x_1..x_n], the literal form.
  Literal,
};

/// Unreduced relator word for one argument tuple.
Word relator_word(const FiniteNRack& r, std::span<const Element> xs, RelatorConvention convention);

/// One generator per element, one relator per n-tuple; relators are freely
/// reduced, empty ones dropped, and the rest sorted and deduplicated.
GroupPresentation associated_group_presentation(
    const FiniteNRack& r, RelatorConvention convention = RelatorConvention::Conjugation);

/// Relators x generators matrix of exponent sums.
IntMatrix exponent_sum_matrix(const GroupPresentation& p);

/// Abelianization via the Smith form of the exponent-sum matrix.
AbelianGroupInvariants abelianization(const GroupPresentation& p);

/// Evaluates every relator of R's associated group in G through alpha and
/// checks that each one is trivial.
/// Throws AxiomViolation if alpha is not an n-rack morphism R -> conj(G, n).
bool check_relator_preservation(const FiniteNRack& r, const FiniteGroup& g,
                                std::span<const Element> alpha,
                                RelatorConvention convention = RelatorConvention::Conjugation);

}  // namespace nrack
