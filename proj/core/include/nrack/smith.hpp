#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nrack {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// S = U * M * V with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_rank,
/// all d_i > 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::vector<Integer> diagonal;  ///< the nonzero diagonal entries d_1..d_rank

  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Same diagonal as smith_normal_form, without accumulating U and V.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k, every d_i >= 2.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Canonical form of Z^free_rank + sum of Z/o for the given orders
  /// (orders of 1 are dropped; 0 is not allowed).
  static AbelianGroupInvariants from_cyclic_orders(std::size_t free_rank,
                                                   const std::vector<Integer>& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Product of torsion orders; meaningful only when free_rank == 0.
  Integer torsion_order() const;
  /// e.g. "Z^2 + Z/2 + Z/4", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Cokernel Z^rows / im(M), read off the Smith form.
AbelianGroupInvariants cokernel(const IntMatrix& m);

}  // namespace nrack
