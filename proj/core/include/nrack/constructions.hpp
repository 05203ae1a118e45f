#pragma once

#include <optional>
#include <vector>

#include "nrack/group.hpp"
#include "nrack/nrack.hpp"

namespace nrack {

/// Binary rack candidate x∘y on {0..m-1}; the arity-2 case of FiniteNRack.
class FiniteRack {
 public:
  FiniteRack(int size, std::vector<Element> table, std::optional<Element> basepoint = std::nullopt);
  /// Requires arity 2.
  explicit FiniteRack(FiniteNRack r);

  int size() const noexcept { return nrack_.size(); }
  const std::optional<Element>& basepoint() const noexcept { return nrack_.basepoint(); }
  Element op(Element x, Element y) const { return nrack_.translate(x, y); }
  const FiniteNRack& as_nrack() const noexcept { return nrack_; }

  friend bool operator==(const FiniteRack&, const FiniteRack&) = default;

 private:
  FiniteNRack nrack_;
};

/// Left distributive, bijective left translations, pointed axioms when a
/// basepoint is declared.
bool is_rack(const FiniteRack& q);

/// [x_1..x_n] = 2x_1 + ... + 2x_{n-1} + x_n on Z/m. Z/m must be a Z/4-module,
/// i.e. m divides 4.
FiniteNRack build_z4_module_nrack(int arity, int modulus);

/// [x_1..x_n] = s x_1 + ... + s x_{n-1} + t x_n on Z/m.
/// Requires t a unit, s^2 + t s = s, and (n-2) s^2 = 0 mod m; the last one is
/// what left distributivity needs beyond the binary case.
FiniteNRack build_gamma_module_nrack(int arity, int modulus, int t, int s);

/// [x_1..x_n] = x_1 ... x_{n-1} x_n x_{n-1}^-1 ... x_1^-1, pointed at the identity.
FiniteNRack build_conjugation_nrack(const FiniteGroup& g, int arity);

/// [x_1..x_n] = x_1∘(x_2∘(...(x_{n-1}∘x_n)...)); keeps the basepoint.
FiniteNRack lift_rack_to_nrack(const FiniteRack& q, int arity);

/// Binary rack on R^(n-1):
/// (x_1..x_{n-1})∘(y_1..y_{n-1}) = ([x,y_1], ..., [x,y_{n-1}]).
/// Tuples are indexed lexicographically, x_1 most significant. A pointed input
/// yields the rack pointed at (b..b).
FiniteRack reduce_nrack_to_rack(const FiniteNRack& r);

/// Index of (x_1..x_k) in the lexicographic order of R^k.
std::size_t tuple_to_index(std::span<const Element> t, std::size_t m);
Tuple index_to_tuple(std::size_t index, std::size_t m, std::size_t length);

/// Data for the V x H construction: a group H with an n-ary operation {..},
/// and a finite abelian group V on which H acts by automorphisms.
struct ModuleGroupData {
  int arity = 2;
  FiniteGroup h;
  /// {A_1..A_n}, row-major over H^n.
  std::vector<Element> bracket;
  FiniteGroup v;
  /// action[a * |V| + u] = a·u
  std::vector<Element> action;
};

struct ModuleGroupResult {
  FiniteNRack rack;
  Classification classification;
  Verdict distributive;
  Verdict bijective;
};

/// Checks {..} swaps to its inverse under every adjacent transposition.
/// Witness is the failing argument tuple.
Verdict check_bracket_antisymmetric(const FiniteGroup& h, int arity, std::span<const Element> bracket);

/// [(u_1,A_1)..(u_n,A_n)] = ({A_1..A_n}·u_n, A_1..A_{n-1} A_n A_{n-1}^-1..A_1^-1)
/// on V x H, element (u, A) at index u*|H| + A, pointed at (0, 1).
/// The axioms are checked, not assumed: the verdict is part of the result.
/// Throws InvalidArgument if V is not abelian, the action is not an action by
/// automorphisms, or the bracket is not antisymmetric.
ModuleGroupResult build_module_group_nrack(const ModuleGroupData& data);

}  // namespace nrack
