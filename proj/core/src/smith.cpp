#include "nrack/smith.hpp"

#include <algorithm>
#include <utility>

#include "nrack/error.hpp"

namespace nrack {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
    : IntMatrix(rows, cols) {
  if (row_major.size() != rows * cols) throw InvalidArgument("matrix data has wrong length");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = static_cast<long>(row_major[i]);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not match for product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// In-place Smith reduction; U and V are tracked only when non-null.
class SmithReducer {
 public:
  SmithReducer(IntMatrix& s, IntMatrix* u, IntMatrix* v) : s_(s), u_(u), v_(v) {}

  std::vector<Integer> run() {
    const auto limit = std::min(s_.rows(), s_.cols());
    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      reduce_at(t);
      if (s_(t, t) < 0) negate_row(t);
      diagonal.push_back(s_(t, t));
    }
    return diagonal;
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < s_.rows(); ++i)
      for (std::size_t j = t; j < s_.cols(); ++j) {
        const auto& x = s_(i, j);
        if (x != 0 && (!found || abs(x) < abs(s_(bi, bj)))) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row and column t. Whenever a remainder survives, the pivot is
  // re-chosen as the smallest entry of the whole trailing block; this keeps
  // coefficient growth in check and strictly shrinks |pivot|, so it terminates.
  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (s_(i, t) == 0) continue;
        add_row(i, t, -nearest_quotient(s_(i, t), s_(t, t)));
        clean = clean && s_(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j) == 0) continue;
        add_col(j, t, -nearest_quotient(s_(t, j), s_(t, t)));
        clean = clean && s_(t, j) == 0;
      }
      if (clean) {
        bool divisible = true;
        for (std::size_t i = t + 1; i < s_.rows() && divisible; ++i)
          for (std::size_t j = t + 1; j < s_.cols(); ++j)
            if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) return;
      }
      place_pivot(t);
    }
  }

  // q with |a - q*b| <= |b|/2.
  static Integer nearest_quotient(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += sgn(b) == sgn(r) ? 1 : -1;
    return q;
  }

  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& q) {
    for (std::size_t j = 0; j < s_.cols(); ++j)
      if (s_(k, j) != 0) s_(i, j) += q * s_(k, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j)
        if ((*u_)(k, j) != 0) (*u_)(i, j) += q * (*u_)(k, j);
  }

  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t i = 0; i < s_.rows(); ++i)
      if (s_(i, k) != 0) s_(i, j) += q * s_(i, k);
    if (v_)
      for (std::size_t i = 0; i < v_->rows(); ++i)
        if ((*v_)(i, k) != 0) (*v_)(i, j) += q * (*v_)(i, k);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s_.cols(); ++j) swap(s_(a, j), s_(b, j));
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) swap((*u_)(a, j), (*u_)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s_.rows(); ++i) swap(s_(i, a), s_(i, b));
    if (v_)
      for (std::size_t i = 0; i < v_->rows(); ++i) swap((*v_)(i, a), (*v_)(i, b));
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < s_.cols(); ++j) s_(t, j) = -s_(t, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) (*u_)(t, j) = -(*u_)(t, j);
  }

  IntMatrix& s_;
  IntMatrix* u_;
  IntMatrix* v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), {}};
  f.diagonal = SmithReducer(f.s, &f.u, &f.v).run();
  return f;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix s = m;
  return SmithReducer(s, nullptr, nullptr).run();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const auto n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(std::size_t free_rank,
                                                                  const std::vector<Integer>& orders) {
  AbelianGroupInvariants g;
  g.free_rank = free_rank;
  std::vector<Integer> nontrivial;
  for (const auto& o : orders) {
    if (o == 0) throw InvalidArgument("cyclic order 0 is a free summand, not torsion");
    if (abs(o) != 1) nontrivial.push_back(abs(o));
  }
  IntMatrix diag(nontrivial.size(), nontrivial.size());
  for (std::size_t i = 0; i < nontrivial.size(); ++i) diag(i, i) = nontrivial[i];
  for (auto& d : invariant_factors(diag)) {
    if (d != 1) g.torsion.push_back(d);
  }
  return g;
}

Integer AbelianGroupInvariants::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroupInvariants::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

AbelianGroupInvariants cokernel(const IntMatrix& m) {
  const auto d = invariant_factors(m);
  AbelianGroupInvariants g;
  g.free_rank = m.rows() - d.size();
  for (const auto& x : d) {
    if (x != 1) g.torsion.push_back(x);
  }
  return g;
}

}  // namespace nrack
