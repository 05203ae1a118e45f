#pragma once

#include <span>
#include <string>
#include <vector>

#include "nrack/nrack.hpp"

namespace nrack {

/// Finite group given by its Cayley table on {0..k-1}.
/// The constructor verifies closure, associativity, identity and inverses.
class FiniteGroup {
 public:
  FiniteGroup(int size, std::vector<Element> cayley, Element identity);

  int size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }
  std::span<const Element> cayley() const noexcept { return cayley_; }

  Element mul(Element a, Element b) const { return cayley_[a * size_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// Product of a word of elements, left to right.
  Element product(std::span<const Element> word) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  int size_;
  std::vector<Element> cayley_;
  Element identity_;
  std::vector<Element> inverse_;
};

/// Z/k under addition.
FiniteGroup cyclic_group(int k);
/// S_k, elements are permutations of {0..k-1} in lexicographic order
/// (index 0 is the identity); (g h)(i) = g(h(i)).
FiniteGroup symmetric_group(int k);
/// Dihedral group of order 2k: rotations 0..k-1, reflections k..2k-1.
FiniteGroup dihedral_group(int k);

/// "Z<k>", "S<k>" or "D<k>" (dihedral of order 2k).
FiniteGroup named_group(const std::string& name);

}  // namespace nrack
