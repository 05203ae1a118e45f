#include "nrack/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nrack/constructions.hpp"
#include "nrack/error.hpp"

namespace nrack {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) letter = -letter;
  return out;
}

void GroupPresentation::validate() const {
  if (generators < 0) throw InvalidArgument("negative generator count");
  for (const auto& rel : relators) {
    if (rel.empty()) throw InvalidArgument("empty relator");
    for (int letter : rel) {
      if (letter == 0 || std::abs(letter) > generators) {
        throw InvalidArgument("relator letter " + std::to_string(letter) + " out of range");
      }
    }
  }
}

Word relator_word(const FiniteNRack& r, std::span<const Element> xs, RelatorConvention convention) {
  auto gen = [](Element x) { return static_cast<int>(x) + 1; };
  const auto n = xs.size();
  const int value = gen(r(xs));
  Word w;
  w.reserve(2 * n + 1);
  if (convention == RelatorConvention::Conjugation) {
    w.push_back(value);
    for (std::size_t i = 0; i + 1 < n; ++i) w.push_back(gen(xs[i]));
    w.push_back(-gen(xs[n - 1]));
    for (std::size_t i = n - 1; i-- > 0;) w.push_back(-gen(xs[i]));
  } else {
    for (std::size_t i = 0; i < n; ++i) w.push_back(-gen(xs[i]));
    for (std::size_t i = n - 1; i-- > 0;) w.push_back(gen(xs[i]));
    w.push_back(value);
  }
  return w;
}

GroupPresentation associated_group_presentation(const FiniteNRack& r, RelatorConvention convention) {
  GroupPresentation p;
  p.generators = r.size();
  Tuple xs(r.arity(), 0);
  do {
    auto w = free_reduce(relator_word(r, xs, convention));
    if (!w.empty()) p.relators.push_back(std::move(w));
  } while (next_tuple(xs, static_cast<Element>(r.size())));
  std::sort(p.relators.begin(), p.relators.end());
  p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());
  return p;
}

IntMatrix exponent_sum_matrix(const GroupPresentation& p) {
  p.validate();
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int letter : p.relators[i]) {
      m(i, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

AbelianGroupInvariants abelianization(const GroupPresentation& p) {
  // Z^g / row space: the cokernel of the transpose.
  return cokernel(exponent_sum_matrix(p).transpose());
}

bool check_relator_preservation(const FiniteNRack& r, const FiniteGroup& g,
                                std::span<const Element> alpha, RelatorConvention convention) {
  const auto target = build_conjugation_nrack(g, r.arity());
  if (!is_homomorphism(alpha, r, target)) {
    throw AxiomViolation("alpha is not an n-rack morphism into the conjugation n-rack of G");
  }
  Tuple xs(r.arity(), 0);
  do {
    Element acc = g.identity();
    for (int letter : relator_word(r, xs, convention)) {
      const auto x = alpha[std::abs(letter) - 1];
      acc = g.mul(acc, letter > 0 ? x : g.inv(x));
    }
    if (acc != g.identity()) return false;
  } while (next_tuple(xs, static_cast<Element>(r.size())));
  return true;
}

}  // namespace nrack
