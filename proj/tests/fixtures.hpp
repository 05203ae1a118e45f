#pragma once

#include <vector>

#include "nrack/constructions.hpp"
#include "nrack/group.hpp"
#include "nrack/nrack.hpp"

namespace nrack::testing {

inline FiniteNRack z4_3rack() { return build_z4_module_nrack(3, 4); }

inline FiniteNRack one_element(int arity) { return trivial_nrack(arity, 1); }

/// x∘y = x + y mod 2: bijective translations, not left distributive.
inline FiniteNRack mod2_addition() { return FiniteNRack(2, 2, {0, 1, 1, 0}); }

/// x∘y = 2x - y mod 3, the dihedral quandle on Z/3.
inline FiniteRack dihedral_z3() {
  std::vector<Element> t(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) t[x * 3 + y] = static_cast<Element>(((2 * x - y) % 3 + 3) % 3);
  return FiniteRack(3, std::move(t));
}

/// x∘y = y + 1 mod 2.
inline FiniteRack shift_rack_z2() { return FiniteRack(2, {1, 0, 1, 0}); }

inline FiniteNRack conj_s3(int arity = 3) { return build_conjugation_nrack(symmetric_group(3), arity); }

}  // namespace nrack::testing
