#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nrack/nrack.hpp"

namespace nrack {

enum class StructureFilter { NRack, WeakNQuandle, NQuandle, NKei };

std::string filter_name(StructureFilter f);
/// "nrack", "weak-n-quandle", "n-quandle", "n-kei".
StructureFilter parse_filter(const std::string& name);

/// Does the classification satisfy the filter?
bool passes_filter(const Classification& c, StructureFilter f);

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

struct EnumerationReport {
  int arity = 2;
  int size = 1;
  StructureFilter filter = StructureFilter::NRack;
  std::uint64_t count_total = 0;
  std::uint64_t count_up_to_iso = 0;
  /// Lexicographically least table of each isomorphism class, sorted.
  std::vector<FiniteNRack> representatives;
  std::uint64_t nodes_visited = 0;
};

/// Lexicographically least table among all relabelings of r (m! of them).
FiniteNRack canonical_form(const FiniteNRack& r);

/// All operation tables of the given arity and size passing the filter.
///
/// Backtracking fills the table in index order, pruning on repeated values in
/// a translation row, on the filter's forced entries, and on every instance of
/// left distributivity whose lookups are already assigned. Throws
/// BudgetExceeded once more than `budget` search nodes are visited; no
/// partial report is produced.
EnumerationReport enumerate_nracks(int arity, int size, StructureFilter filter,
                                   std::uint64_t budget = kDefaultSearchBudget);

}  // namespace nrack
