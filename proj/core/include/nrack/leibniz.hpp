#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nrack {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Index = std::vector<std::size_t>;

/// n-linear bracket on Q^d given by structure constants
/// [e_{i_1}, ..., e_{i_n}] = Σ_j c[i_1..i_n; j] e_j.
class LeibnizNAlgebra {
 public:
  /// All-zero bracket.
  LeibnizNAlgebra(std::size_t dimension, int arity);

  std::size_t dimension() const noexcept { return dim_; }
  int arity() const noexcept { return arity_; }

  const Rational& constant(std::span<const std::size_t> args, std::size_t out) const;
  void set_constant(std::span<const std::size_t> args, std::size_t out, const Rational& value);

  /// [e_{i_1}, ..., e_{i_n}]
  std::span<const Rational> basis_bracket(std::span<const std::size_t> args) const;
  /// Multilinear extension.
  Vector bracket(std::span<const Vector> args) const;

  friend bool operator==(const LeibnizNAlgebra&, const LeibnizNAlgebra&) = default;

 private:
  std::size_t offset(std::span<const std::size_t> args) const;

  std::size_t dim_;
  int arity_;
  std::vector<Rational> constants_;  // d^n blocks of d
};

/// Square matrix over Q; column j is the image of e_j.
class LinearOperator {
 public:
  explicit LinearOperator(std::size_t dimension) : dim_(dimension), entries_(dimension * dimension) {}
  static LinearOperator identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Vector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

Vector basis_vector(std::size_t dimension, std::size_t i);

/// A basis instance where two sides of an identity differ.
struct IdentityWitness {
  Index x;  ///< (x_1..x_{n-1}); empty for derivation checks
  Index y;  ///< (y_1..y_n)
  Vector lhs;
  Vector rhs;
};

/// [x_1..x_{n-1}, [y_1..y_n]] = Σ_i [y_1..[x_1..x_{n-1}, y_i]..y_n] on every
/// basis tuple; returns the lexicographically first failure in (x, y).
std::optional<IdentityWitness> find_fundamental_identity_violation(const LeibnizNAlgebra& l);
bool check_fundamental_identity(const LeibnizNAlgebra& l);

/// Swapping any two argument slots negates the bracket on basis tuples.
bool is_alternating(const LeibnizNAlgebra& l);
/// Fundamental identity plus alternation.
bool check_filippov(const LeibnizNAlgebra& l);

/// D[y_1..y_n] = Σ_i [y_1..D y_i..y_n] on every basis tuple.
std::optional<IdentityWitness> find_derivation_violation(const LeibnizNAlgebra& l, const LinearOperator& d);
bool check_derivation(const LeibnizNAlgebra& l, const LinearOperator& d);

/// Matrix of Y -> [x_1..x_{n-1}, Y].
LinearOperator adjoint(const LeibnizNAlgebra& l, std::span<const Vector> xs);

/// Every adjoint of basis vectors is a derivation. Must agree with
/// check_fundamental_identity, which says the same thing tuple by tuple.
bool check_self_derivation(const LeibnizNAlgebra& l);

/// [e_i, e_j, e_k] = ε_{ijkl} e_l on Q^4.
LeibnizNAlgebra nambu_bracket_4d();

}  // namespace nrack
