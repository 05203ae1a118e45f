#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nrack {

/// Carrier elements are always 0..m-1.
using Element = std::uint32_t;
using Tuple = std::vector<Element>;
/// A bijection of {0..m-1}, stored as its image list.
using Permutation = std::vector<Element>;

/// base^exp, throwing InvalidArgument if the result does not fit in size_t.
std::size_t checked_pow(std::size_t base, std::size_t exp);

/// Advance `t` to the lexicographically next tuple over {0..m-1}, last entry
/// fastest. Returns false (and leaves `t` all zero) after the last tuple.
bool next_tuple(std::span<Element> t, Element m);

/// Finite n-rack candidate: an n-ary operation table on {0..m-1}.
///
/// Construction only checks that the table is total and in range. The axioms
/// are checked separately (check_left_distributive, classify, ...), so a
/// FiniteNRack may well describe an operation that is not an n-rack.
///
/// Row-major layout: index(x_1..x_n) = x_1*m^(n-1) + ... + x_n.
class FiniteNRack {
 public:
  FiniteNRack(int arity, int size, std::vector<Element> table,
              std::optional<Element> basepoint = std::nullopt);

  int arity() const noexcept { return arity_; }
  int size() const noexcept { return size_; }
  const std::optional<Element>& basepoint() const noexcept { return basepoint_; }
  std::span<const Element> table() const noexcept { return table_; }

  /// m^n
  std::size_t tuple_count() const noexcept { return table_.size(); }
  /// m^(n-1), the number of translation prefixes (a_1..a_{n-1}).
  std::size_t prefix_count() const noexcept { return table_.size() / size_; }

  std::size_t index(std::span<const Element> args) const;
  Element operator()(std::span<const Element> args) const { return table_[index(args)]; }
  Element operator()(std::initializer_list<Element> args) const {
    return (*this)(std::span<const Element>(args.begin(), args.size()));
  }
  /// [prefix..., y] where prefix_index enumerates (a_1..a_{n-1}) lexicographically.
  Element translate(std::size_t prefix_index, Element y) const {
    return table_[prefix_index * size_ + y];
  }

  FiniteNRack with_basepoint(std::optional<Element> b) const;

  friend bool operator==(const FiniteNRack&, const FiniteNRack&) = default;

 private:
  int arity_;
  int size_;
  std::vector<Element> table_;
  std::optional<Element> basepoint_;
};

/// [x_1..x_n] = x_n on m elements.
FiniteNRack trivial_nrack(int arity, int size);

/// Outcome of an exhaustive check. When `holds` is false, `witness` is the
/// lexicographically first failing argument tuple.
struct Verdict {
  bool holds = true;
  Tuple witness;

  explicit operator bool() const noexcept { return holds; }
};

/// [x,[y_1..y_n]] == [[x,y_1],..,[x,y_n]] for all x in R^(n-1), y in R^n.
/// Witness is the concatenation (x_1..x_{n-1}, y_1..y_n).
Verdict check_left_distributive(const FiniteNRack& r);

/// Each translation x -> [a_1..a_{n-1}, x] is a bijection. Witness is the prefix.
Verdict check_translation_bijective(const FiniteNRack& r);

/// Both pointedness equations for the declared basepoint.
/// Throws InvalidArgument if no basepoint is declared.
bool check_pointed(const FiniteNRack& r);

/// [x..x] == x. Witness is (x).
Verdict check_diagonal_idempotent(const FiniteNRack& r);
/// [x_1..x_{n-1}, y] == y whenever some x_i == y. Witness is (x_1..x_{n-1}, y).
Verdict check_quandle_condition(const FiniteNRack& r);
/// [x, [x, y]] == y. Witness is (x_1..x_{n-1}, y).
Verdict check_involutive(const FiniteNRack& r);

struct Classification {
  bool is_nrack = false;
  /// Empty when the rack declares no basepoint.
  std::optional<bool> is_pointed;
  bool is_weak_nquandle = false;
  bool is_nquandle = false;
  bool is_weak_nkei = false;
  bool is_nkei = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const FiniteNRack& r);

/// Left distributive with bijective translations.
bool is_nrack(const FiniteNRack& r);

/// f([x_1..x_n]_R) == [f(x_1)..f(x_n)]_S for every tuple; with `pointed`,
/// additionally f(basepoint_R) == basepoint_S.
bool is_homomorphism(std::span<const Element> f, const FiniteNRack& r, const FiniteNRack& s,
                     bool pointed = false);

/// Some bijective homomorphism R -> S, if one exists.
std::optional<Permutation> find_isomorphism(const FiniteNRack& r, const FiniteNRack& s);

/// phi(a_1..a_{n-1}): y -> [a_1..a_{n-1}, y].
struct InnerMap {
  Tuple arguments;
  Permutation permutation;
};

InnerMap inner_map(const FiniteNRack& r, std::span<const Element> args);

/// phi(args) commutes with the bracket. Witness is the failing (y_1..y_n).
Verdict check_inner_is_automorphism(const FiniteNRack& r, std::span<const Element> args);

/// Orbits of the group generated by all inner maps, each sorted, ordered by
/// smallest element.
std::vector<std::vector<Element>> orbits(const FiniteNRack& r);

/// (p . q)(y) = p(q(y))
Permutation compose(const Permutation& p, const Permutation& q);
bool is_permutation(std::span<const Element> p);
/// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const Permutation& p);

}  // namespace nrack
