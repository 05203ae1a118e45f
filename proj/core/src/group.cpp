#include "nrack/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nrack/error.hpp"

namespace nrack {

FiniteGroup::FiniteGroup(int size, std::vector<Element> cayley, Element identity)
    : size_(size), cayley_(std::move(cayley)), identity_(identity) {
  if (size_ < 1) throw InvalidArgument("group must be nonempty");
  const auto k = static_cast<std::size_t>(size_);
  if (cayley_.size() != k * k) throw InvalidArgument("Cayley table must have size^2 entries");
  if (identity_ >= k) throw InvalidArgument("identity outside the group");
  for (auto v : cayley_) {
    if (v >= k) throw InvalidArgument("Cayley table entry outside the group");
  }
  for (Element a = 0; a < k; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw InvalidArgument("declared identity is not a two-sided identity");
    }
  }
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < k; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw InvalidArgument("Cayley table is not associative");
        }
  inverse_.assign(k, 0);
  for (Element a = 0; a < k; ++a) {
    Element b = 0;
    while (b < k && mul(a, b) != identity_) ++b;
    if (b == k || mul(b, a) != identity_) throw InvalidArgument("element without inverse");
    inverse_[a] = b;
  }
}

Element FiniteGroup::product(std::span<const Element> word) const {
  Element acc = identity_;
  for (auto w : word) acc = mul(acc, w);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < static_cast<Element>(size_); ++a)
    for (Element b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Element> t(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = static_cast<Element>((a + b) % k);
  return FiniteGroup(k, std::move(t), 0);
}

FiniteGroup symmetric_group(int k) {
  if (k < 1 || k > 6) throw InvalidArgument("symmetric group degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto order = static_cast<int>(perms.size());
  std::vector<Element> t(static_cast<std::size_t>(order) * order);
  std::vector<int> gh(k);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < k; ++i) gh[i] = perms[a][perms[b][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), gh);
      t[a * order + b] = static_cast<Element>(it - perms.begin());
    }
  }
  return FiniteGroup(order, std::move(t), 0);
}

FiniteGroup dihedral_group(int k) {
  if (k < 1) throw InvalidArgument("dihedral parameter must be positive");
  const int order = 2 * k;
  std::vector<Element> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      int v;
      if (x < k && y < k) v = (x + y) % k;
      else if (x < k) v = (y - k + x) % k + k;
      else if (y < k) v = ((x - k) - y + k) % k + k;
      else v = ((x - k) - (y - k) + k) % k;
      t[x * order + y] = static_cast<Element>(v);
    }
  }
  return FiniteGroup(order, std::move(t), 0);
}

FiniteGroup named_group(const std::string& name) {
  if (name.size() < 2 || !std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    throw InvalidArgument("unknown group name '" + name + "' (expected Z<k>, S<k> or D<k>)");
  }
  const int k = std::stoi(name.substr(1));
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'Z': return cyclic_group(k);
    case 'S': return symmetric_group(k);
    case 'D': return dihedral_group(k);
    default: throw InvalidArgument("unknown group name '" + name + "'");
  }
}

}  // namespace nrack
