#include "nrack/leibniz.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "nrack/error.hpp"
#include "nrack/nrack.hpp"

namespace nrack {

namespace {

// Odometer over {0..d-1}^k; false after the last tuple.
bool next_index(Index& t, std::size_t d) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < d) return true;
    t[i] = 0;
  }
  return false;
}

void add_scaled(Vector& acc, std::span<const Rational> v, const Rational& s) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (v[i] != 0) acc[i] += s * v[i];
}

}  // namespace

LeibnizNAlgebra::LeibnizNAlgebra(std::size_t dimension, int arity) : dim_(dimension), arity_(arity) {
  if (dimension < 1) throw InvalidArgument("dimension must be positive");
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  constants_.resize(checked_pow(dimension, arity + 1));
}

std::size_t LeibnizNAlgebra::offset(std::span<const std::size_t> args) const {
  if (args.size() != static_cast<std::size_t>(arity_)) throw InvalidArgument("wrong number of arguments");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= dim_) throw InvalidArgument("basis index out of range");
    idx = idx * dim_ + a;
  }
  return idx * dim_;
}

const Rational& LeibnizNAlgebra::constant(std::span<const std::size_t> args, std::size_t out) const {
  if (out >= dim_) throw InvalidArgument("basis index out of range");
  return constants_[offset(args) + out];
}

void LeibnizNAlgebra::set_constant(std::span<const std::size_t> args, std::size_t out,
                                   const Rational& value) {
  if (out >= dim_) throw InvalidArgument("basis index out of range");
  auto& slot = constants_[offset(args) + out];
  slot = value;
  slot.canonicalize();
}

std::span<const Rational> LeibnizNAlgebra::basis_bracket(std::span<const std::size_t> args) const {
  return std::span<const Rational>(constants_).subspan(offset(args), dim_);
}

Vector LeibnizNAlgebra::bracket(std::span<const Vector> args) const {
  if (args.size() != static_cast<std::size_t>(arity_)) throw InvalidArgument("wrong number of arguments");
  for (const auto& v : args) {
    if (v.size() != dim_) throw InvalidArgument("vector dimension mismatch");
  }
  Vector out(dim_);
  Index idx(arity_, 0);
  do {
    Rational coeff = 1;
    for (std::size_t s = 0; s < idx.size() && coeff != 0; ++s) coeff *= args[s][idx[s]];
    if (coeff != 0) add_scaled(out, basis_bracket(idx), coeff);
  } while (next_index(idx, dim_));
  return out;
}

LinearOperator LinearOperator::identity(std::size_t dimension) {
  LinearOperator id(dimension);
  for (std::size_t i = 0; i < dimension; ++i) id(i, i) = 1;
  return id;
}

Vector LinearOperator::apply(std::span<const Rational> v) const {
  if (v.size() != dim_) throw InvalidArgument("vector dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool LinearOperator::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

Vector basis_vector(std::size_t dimension, std::size_t i) {
  Vector v(dimension);
  v.at(i) = 1;
  return v;
}

namespace {

// [y_1 .. y_{slot-1}, v, y_{slot+1} .. y_n] for basis y and arbitrary v.
Vector bracket_with_slot(const LeibnizNAlgebra& l, Index y, std::size_t slot, const Vector& v) {
  Vector out(l.dimension());
  for (std::size_t j = 0; j < l.dimension(); ++j) {
    if (v[j] == 0) continue;
    y[slot] = j;
    add_scaled(out, l.basis_bracket(y), v[j]);
  }
  return out;
}

}  // namespace

std::optional<IdentityWitness> find_fundamental_identity_violation(const LeibnizNAlgebra& l) {
  const auto d = l.dimension();
  const auto n = static_cast<std::size_t>(l.arity());
  Index x(n - 1, 0);
  Index xy(n);  // (x_1..x_{n-1}, slot)
  do {
    std::copy(x.begin(), x.end(), xy.begin());
    Index y(n, 0);
    do {
      // [x, [y]]
      Vector inner(l.basis_bracket(y).begin(), l.basis_bracket(y).end());
      auto lhs = bracket_with_slot(l, xy, n - 1, inner);
      // Σ_i [y_1..[x, y_i]..y_n]
      Vector rhs(d);
      for (std::size_t i = 0; i < n; ++i) {
        xy[n - 1] = y[i];
        const Vector moved(l.basis_bracket(xy).begin(), l.basis_bracket(xy).end());
        add_scaled(rhs, bracket_with_slot(l, y, i, moved), 1);
      }
      if (lhs != rhs) return IdentityWitness{x, y, std::move(lhs), std::move(rhs)};
    } while (next_index(y, d));
  } while (next_index(x, d));
  return std::nullopt;
}

bool check_fundamental_identity(const LeibnizNAlgebra& l) {
  return !find_fundamental_identity_violation(l).has_value();
}

bool is_alternating(const LeibnizNAlgebra& l) {
  const auto d = l.dimension();
  const auto n = static_cast<std::size_t>(l.arity());
  Index y(n, 0);
  do {
    const auto v = l.basis_bracket(y);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Index swapped = y;
        std::swap(swapped[i], swapped[j]);
        const auto w = l.basis_bracket(swapped);
        for (std::size_t k = 0; k < d; ++k)
          if (w[k] != -v[k]) return false;
      }
    }
  } while (next_index(y, d));
  return true;
}

bool check_filippov(const LeibnizNAlgebra& l) {
  return is_alternating(l) && check_fundamental_identity(l);
}

std::optional<IdentityWitness> find_derivation_violation(const LeibnizNAlgebra& l,
                                                        const LinearOperator& op) {
  if (op.dimension() != l.dimension()) throw InvalidArgument("operator dimension mismatch");
  const auto d = l.dimension();
  Index y(l.arity(), 0);
  do {
    auto lhs = op.apply(l.basis_bracket(y));
    Vector rhs(d);
    for (std::size_t i = 0; i < y.size(); ++i) {
      add_scaled(rhs, bracket_with_slot(l, y, i, op.apply(basis_vector(d, y[i]))), 1);
    }
    if (lhs != rhs) return IdentityWitness{{}, y, std::move(lhs), std::move(rhs)};
  } while (next_index(y, d));
  return std::nullopt;
}

bool check_derivation(const LeibnizNAlgebra& l, const LinearOperator& d) {
  return !find_derivation_violation(l, d).has_value();
}

LinearOperator adjoint(const LeibnizNAlgebra& l, std::span<const Vector> xs) {
  const auto d = l.dimension();
  if (xs.size() != static_cast<std::size_t>(l.arity() - 1)) {
    throw InvalidArgument("adjoint needs n-1 arguments");
  }
  LinearOperator ad(d);
  std::vector<Vector> args(xs.begin(), xs.end());
  args.push_back(Vector(d));
  for (std::size_t j = 0; j < d; ++j) {
    args.back() = basis_vector(d, j);
    const auto col = l.bracket(args);
    for (std::size_t i = 0; i < d; ++i) ad(i, j) = col[i];
  }
  return ad;
}

bool check_self_derivation(const LeibnizNAlgebra& l) {
  const auto d = l.dimension();
  Index x(l.arity() - 1, 0);
  do {
    std::vector<Vector> xs;
    for (auto i : x) xs.push_back(basis_vector(d, i));
    if (!check_derivation(l, adjoint(l, xs))) return false;
  } while (next_index(x, d));
  return true;
}

LeibnizNAlgebra nambu_bracket_4d() {
  LeibnizNAlgebra l(4, 3);
  std::array<std::size_t, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    const Index args{p[0], p[1], p[2]};
    l.set_constant(args, p[3], inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return l;
}

}  // namespace nrack
