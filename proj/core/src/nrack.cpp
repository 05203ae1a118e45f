#include "nrack/nrack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "nrack/error.hpp"

namespace nrack {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      throw InvalidArgument("size overflow computing " + std::to_string(base) + "^" +
                            std::to_string(exp));
    }
    result *= base;
  }
  return result;
}

bool next_tuple(std::span<Element> t, Element m) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < m) return true;
    t[i] = 0;
  }
  return false;
}

FiniteNRack::FiniteNRack(int arity, int size, std::vector<Element> table,
                         std::optional<Element> basepoint)
    : arity_(arity), size_(size), table_(std::move(table)), basepoint_(basepoint) {
  if (arity_ < 2) throw InvalidArgument("arity must be at least 2");
  if (size_ < 1) throw InvalidArgument("size must be at least 1");
  const auto expected = checked_pow(static_cast<std::size_t>(size_), static_cast<std::size_t>(arity_));
  if (table_.size() != expected) {
    throw InvalidArgument("table has " + std::to_string(table_.size()) + " entries, expected " +
                          std::to_string(expected));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= static_cast<Element>(size_)) {
      throw InvalidArgument("table entry " + std::to_string(i) + " = " + std::to_string(table_[i]) +
                            " is outside the carrier");
    }
  }
  if (basepoint_ && *basepoint_ >= static_cast<Element>(size_)) {
    throw InvalidArgument("basepoint outside the carrier");
  }
}

std::size_t FiniteNRack::index(std::span<const Element> args) const {
  if (args.size() != static_cast<std::size_t>(arity_)) {
    throw InvalidArgument("expected " + std::to_string(arity_) + " arguments");
  }
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= static_cast<Element>(size_)) throw InvalidArgument("argument outside the carrier");
    idx = idx * size_ + a;
  }
  return idx;
}

FiniteNRack FiniteNRack::with_basepoint(std::optional<Element> b) const {
  return FiniteNRack(arity_, size_, table_, b);
}

FiniteNRack trivial_nrack(int arity, int size) {
  if (size < 1) throw InvalidArgument("size must be at least 1");
  std::vector<Element> table(checked_pow(size, arity));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Element>(i % size);
  return FiniteNRack(arity, size, std::move(table));
}

namespace {

// Index of a prefix (a_1..a_{n-1}) among the m^(n-1) prefixes.
std::size_t prefix_index(std::span<const Element> prefix, std::size_t m) {
  std::size_t idx = 0;
  for (auto a : prefix) idx = idx * m + a;
  return idx;
}

}  // namespace

Verdict check_left_distributive(const FiniteNRack& r) {
  const auto n = static_cast<std::size_t>(r.arity());
  const auto m = static_cast<Element>(r.size());
  const auto table = r.table();
  // xs = (x_1..x_{n-1}, y_1..y_n), enumerated lexicographically
  Tuple xs(2 * n - 1, 0);
  Tuple inner(n);
  do {
    const auto px = prefix_index(std::span(xs).first(n - 1), m);
    std::size_t y_idx = 0;
    std::size_t rhs_idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto y = xs[n - 1 + i];
      y_idx = y_idx * m + y;
      rhs_idx = rhs_idx * m + table[px * m + y];
    }
    const auto lhs = table[px * m + table[y_idx]];
    if (lhs != table[rhs_idx]) return {false, xs};
  } while (next_tuple(xs, m));
  return {};
}

Verdict check_translation_bijective(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  std::vector<char> seen(m);
  Tuple prefix(r.arity() - 1, 0);
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < m; ++y) {
      auto& s = seen[r.translate(p, static_cast<Element>(y))];
      if (s) return {false, prefix};
      s = 1;
    }
    next_tuple(prefix, static_cast<Element>(m));
  }
  return {};
}

bool check_pointed(const FiniteNRack& r) {
  if (!r.basepoint()) throw InvalidArgument("no basepoint declared");
  const auto b = *r.basepoint();
  const auto m = static_cast<std::size_t>(r.size());
  Tuple all_b(r.arity() - 1, b);
  const auto pb = prefix_index(all_b, m);
  for (std::size_t y = 0; y < m; ++y) {
    if (r.translate(pb, static_cast<Element>(y)) != y) return false;
  }
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    if (r.translate(p, b) != b) return false;
  }
  return true;
}

Verdict check_diagonal_idempotent(const FiniteNRack& r) {
  const auto m = static_cast<Element>(r.size());
  for (Element x = 0; x < m; ++x) {
    Tuple diag(r.arity(), x);
    if (r(diag) != x) return {false, {x}};
  }
  return {};
}

Verdict check_quandle_condition(const FiniteNRack& r) {
  const auto m = static_cast<Element>(r.size());
  Tuple xs(r.arity(), 0);
  do {
    const auto y = xs.back();
    const bool hit = std::find(xs.begin(), xs.end() - 1, y) != xs.end() - 1;
    if (hit && r(xs) != y) return {false, xs};
  } while (next_tuple(xs, m));
  return {};
}

Verdict check_involutive(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  Tuple xs(r.arity(), 0);
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    for (std::size_t y = 0; y < m; ++y) {
      if (r.translate(p, r.translate(p, static_cast<Element>(y))) != y) {
        xs.back() = static_cast<Element>(y);
        return {false, xs};
      }
    }
    xs.back() = 0;
    next_tuple(std::span(xs).first(xs.size() - 1), static_cast<Element>(m));
  }
  return {};
}

bool is_nrack(const FiniteNRack& r) {
  return check_translation_bijective(r).holds && check_left_distributive(r).holds;
}

Classification classify(const FiniteNRack& r) {
  Classification c;
  c.is_nrack = is_nrack(r);
  if (r.basepoint()) c.is_pointed = c.is_nrack && check_pointed(r);
  if (!c.is_nrack) return c;
  const bool involutive = check_involutive(r).holds;
  c.is_weak_nquandle = check_diagonal_idempotent(r).holds;
  c.is_nquandle = c.is_weak_nquandle && check_quandle_condition(r).holds;
  c.is_weak_nkei = c.is_weak_nquandle && involutive;
  c.is_nkei = c.is_nquandle && involutive;
  return c;
}

bool is_homomorphism(std::span<const Element> f, const FiniteNRack& r, const FiniteNRack& s,
                     bool pointed) {
  if (r.arity() != s.arity()) throw InvalidArgument("arity mismatch");
  if (f.size() != static_cast<std::size_t>(r.size())) {
    throw InvalidArgument("map must be defined on every element of the source");
  }
  for (auto v : f) {
    if (v >= static_cast<Element>(s.size())) throw InvalidArgument("map leaves the target carrier");
  }
  if (pointed) {
    if (!r.basepoint() || !s.basepoint()) throw InvalidArgument("pointed check needs basepoints");
    if (f[*r.basepoint()] != *s.basepoint()) return false;
  }
  const auto m = static_cast<Element>(r.size());
  Tuple xs(r.arity(), 0);
  Tuple image(r.arity());
  do {
    for (std::size_t i = 0; i < xs.size(); ++i) image[i] = f[xs[i]];
    if (f[r(xs)] != s(image)) return false;
  } while (next_tuple(xs, m));
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

bool is_permutation(std::span<const Element> p) {
  std::vector<char> seen(p.size());
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace {

// Sorted list of per-translation cycle types; an isomorphism invariant of
// n-racks (conjugating a translation by f gives the image translation).
std::vector<std::vector<std::size_t>> translation_profile(const FiniteNRack& r) {
  std::vector<std::vector<std::size_t>> profile;
  profile.reserve(r.prefix_count());
  Permutation perm(r.size());
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    for (Element y = 0; y < static_cast<Element>(r.size()); ++y) perm[y] = r.translate(p, y);
    profile.push_back(cycle_type(perm));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

struct ElementSignature {
  std::size_t fixing_prefixes = 0;
  std::size_t preimages = 0;
  bool idempotent = false;

  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> element_signatures(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  std::vector<ElementSignature> sig(m);
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto v = r.translate(p, static_cast<Element>(y));
      if (v == y) ++sig[y].fixing_prefixes;
      ++sig[v].preimages;
    }
  }
  for (Element x = 0; x < m; ++x) sig[x].idempotent = r(Tuple(r.arity(), x)) == x;
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteNRack& r, const FiniteNRack& s)
      : r_(r), s_(s), sig_r_(element_signatures(r)), sig_s_(element_signatures(s)),
        map_(r.size()), used_(r.size()) {}

  bool run() { return extend(0); }
  Permutation result() const { return map_; }

 private:
  // Checks every tuple over {0..k} that mentions k and whose value is also mapped.
  bool consistent(Element k) const {
    const auto n = static_cast<std::size_t>(r_.arity());
    Tuple xs(n, 0);
    Tuple image(n);
    do {
      if (std::find(xs.begin(), xs.end(), k) == xs.end()) continue;
      const auto v = r_(xs);
      if (v > k) continue;
      for (std::size_t i = 0; i < n; ++i) image[i] = map_[xs[i]];
      if (map_[v] != s_(image)) return false;
    } while (next_tuple(xs, k + 1));
    return true;
  }

  bool extend(Element k) {
    if (k == static_cast<Element>(r_.size())) return true;
    for (Element c = 0; c < static_cast<Element>(s_.size()); ++c) {
      if (used_[c] || !(sig_r_[k] == sig_s_[c])) continue;
      map_[k] = c;
      used_[c] = 1;
      if (consistent(k) && extend(k + 1)) return true;
      used_[c] = 0;
    }
    return false;
  }

  const FiniteNRack& r_;
  const FiniteNRack& s_;
  std::vector<ElementSignature> sig_r_;
  std::vector<ElementSignature> sig_s_;
  Permutation map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Permutation> find_isomorphism(const FiniteNRack& r, const FiniteNRack& s) {
  if (r.arity() != s.arity() || r.size() != s.size()) return std::nullopt;
  if (check_translation_bijective(r).holds != check_translation_bijective(s).holds) {
    return std::nullopt;
  }
  if (check_translation_bijective(r).holds && translation_profile(r) != translation_profile(s)) {
    return std::nullopt;
  }
  IsomorphismSearch search(r, s);
  if (!search.run()) return std::nullopt;
  return search.result();
}

InnerMap inner_map(const FiniteNRack& r, std::span<const Element> args) {
  if (args.size() != static_cast<std::size_t>(r.arity() - 1)) {
    throw InvalidArgument("inner map needs " + std::to_string(r.arity() - 1) + " arguments");
  }
  for (auto a : args) {
    if (a >= static_cast<Element>(r.size())) {
      throw InvalidArgument("inner map argument " + std::to_string(a) + " outside the carrier");
    }
  }
  const auto p = prefix_index(args, r.size());
  InnerMap phi{Tuple(args.begin(), args.end()), Permutation(r.size())};
  for (Element y = 0; y < static_cast<Element>(r.size()); ++y) phi.permutation[y] = r.translate(p, y);
  return phi;
}

Verdict check_inner_is_automorphism(const FiniteNRack& r, std::span<const Element> args) {
  const auto phi = inner_map(r, args).permutation;
  if (!is_permutation(phi)) return {false, Tuple(args.begin(), args.end())};
  const auto m = static_cast<Element>(r.size());
  Tuple ys(r.arity(), 0);
  Tuple image(r.arity());
  do {
    for (std::size_t i = 0; i < ys.size(); ++i) image[i] = phi[ys[i]];
    if (phi[r(ys)] != r(image)) return {false, ys};
  } while (next_tuple(ys, m));
  return {};
}

std::vector<std::vector<Element>> orbits(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t p = 0; p < r.prefix_count(); ++p) {
    for (std::size_t y = 0; y < m; ++y) {
      auto a = find(y);
      auto b = find(r.translate(p, static_cast<Element>(y)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t y = 0; y < m; ++y) {
    const auto root = find(y);
    if (slot[root] == m) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(static_cast<Element>(y));
  }
  return out;
}

}  // namespace nrack
