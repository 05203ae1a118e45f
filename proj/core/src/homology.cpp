#include "nrack/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nrack/error.hpp"

namespace nrack {

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const Column& c) { return c.empty(); });
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix d(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) d(i, j) = static_cast<long>(v);
  return d;
}

SparseIntMatrix::Column SparseIntMatrix::normalize(Column c) {
  std::sort(c.begin(), c.end());
  Column out;
  for (const auto& [i, v] : c) {
    if (!out.empty() && out.back().first == i) out.back().second += v;
    else out.emplace_back(i, v);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix shapes do not match for product");
  SparseIntMatrix c(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    SparseIntMatrix::Column acc;
    for (const auto& [k, bv] : b.columns[j]) {
      for (const auto& [i, av] : a.columns[k]) {
        long long prod;
        if (__builtin_mul_overflow(av, bv, &prod)) throw std::overflow_error("sparse product overflow");
        acc.emplace_back(i, prod);
      }
    }
    c.columns[j] = SparseIntMatrix::normalize(std::move(acc));
  }
  return c;
}

void write_triplets(std::ostream& out, const SparseIntMatrix& m) {
  out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j]) out << i << ' ' << j << ' ' << v << '\n';
}

char variant_code(Variant v) {
  switch (v) {
    case Variant::Rack: return 'R';
    case Variant::Degenerate: return 'D';
    case Variant::Quandle: return 'Q';
  }
  return '?';
}

Variant parse_variant(const std::string& code) {
  if (code == "R") return Variant::Rack;
  if (code == "D") return Variant::Degenerate;
  if (code == "Q") return Variant::Quandle;
  throw InvalidArgument("variant must be R, D or Q, got '" + code + "'");
}

namespace {

std::size_t saturating_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    r *= base;
  }
  return r;
}

void check_budget(std::size_t base, int max_degree, std::size_t budget) {
  if (max_degree < 0) throw InvalidArgument("max degree must be nonnegative");
  const auto top = saturating_pow(base, max_degree);
  if (top > budget) {
    throw BudgetExceeded("chain rank " + std::to_string(top) + " in degree " +
                             std::to_string(max_degree) + " exceeds the budget of " +
                             std::to_string(budget) + " columns",
                         top, budget);
  }
}

bool has_consecutive_repeat(std::size_t index, std::size_t base, int length) {
  std::size_t prev = std::numeric_limits<std::size_t>::max();
  for (int i = 0; i < length; ++i) {
    const auto digit = index % base;
    if (digit == prev) return true;
    prev = digit;
    index /= base;
  }
  return false;
}

// Position of each basis label in a sorted basis, or npos.
class BasisLookup {
 public:
  explicit BasisLookup(const std::vector<std::size_t>& basis) : basis_(basis) {}
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t find(std::size_t label) const {
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), label);
    return it != basis_.end() && *it == label ? static_cast<std::size_t>(it - basis_.begin()) : npos;
  }

 private:
  const std::vector<std::size_t>& basis_;
};

}  // namespace

ChainComplex rack_chain_complex(const FiniteRack& q, int max_degree, std::size_t budget) {
  const auto base = static_cast<std::size_t>(q.size());
  check_budget(base, max_degree, budget);
  ChainComplex c;
  c.variant = Variant::Rack;
  c.base_size = base;
  c.max_degree = max_degree;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<std::size_t> b(saturating_pow(base, k));
    std::iota(b.begin(), b.end(), 0);
    c.basis.push_back(std::move(b));
  }
  c.boundaries.emplace_back(0, 1);
  for (int k = 1; k <= max_degree; ++k) {
    SparseIntMatrix d(c.rank(k - 1), c.rank(k));
    if (k >= 2) {
      Tuple face;
      for (std::size_t col = 0; col < d.cols; ++col) {
        const auto xs = index_to_tuple(col, base, k);
        SparseIntMatrix::Column entries;
        for (int i = 2; i <= k; ++i) {
          const long long sign = i % 2 == 0 ? 1 : -1;
          const auto xi = xs[i - 1];
          face.assign(xs.begin(), xs.end());
          face.erase(face.begin() + (i - 1));
          entries.emplace_back(tuple_to_index(face, base), sign);
          for (int j = 0; j < i - 1; ++j) face[j] = q.op(xi, xs[j]);
          entries.emplace_back(tuple_to_index(face, base), -sign);
        }
        d.columns[col] = SparseIntMatrix::normalize(std::move(entries));
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

ChainComplex rack_chain_complex(const FiniteNRack& x, int max_degree, std::size_t budget) {
  const auto base = saturating_pow(static_cast<std::size_t>(x.size()), x.arity() - 1);
  check_budget(base, max_degree, budget);
  return rack_chain_complex(reduce_nrack_to_rack(x), max_degree, budget);
}

namespace {

// Restricts c to the given basis positions per degree. Rows outside the kept
// positions are dropped when `project`, and rejected otherwise.
ChainComplex restrict_complex(const ChainComplex& c, Variant variant,
                              const std::vector<std::vector<std::size_t>>& keep, bool project) {
  ChainComplex out;
  out.variant = variant;
  out.base_size = c.base_size;
  out.max_degree = c.max_degree;
  for (int k = 0; k <= c.max_degree; ++k) {
    std::vector<std::size_t> labels;
    labels.reserve(keep[k].size());
    for (auto pos : keep[k]) labels.push_back(c.basis[k][pos]);
    out.basis.push_back(std::move(labels));
  }
  out.boundaries.emplace_back(0, out.rank(0));
  for (int k = 1; k <= c.max_degree; ++k) {
    std::vector<std::size_t> row_map(c.rank(k - 1), BasisLookup::npos);
    for (std::size_t i = 0; i < keep[k - 1].size(); ++i) row_map[keep[k - 1][i]] = i;
    SparseIntMatrix d(out.rank(k - 1), out.rank(k));
    for (std::size_t j = 0; j < keep[k].size(); ++j) {
      for (const auto& [row, v] : c.boundaries[k].columns[keep[k][j]]) {
        if (row_map[row] != BasisLookup::npos) {
          d.columns[j].emplace_back(row_map[row], v);
        } else if (!project) {
          throw AxiomViolation("degenerate span is not closed under the boundary in degree " +
                               std::to_string(k));
        }
      }
    }
    out.boundaries.push_back(std::move(d));
  }
  return out;
}

}  // namespace

ChainComplex degenerate_subcomplex(const FiniteNRack& x, const ChainComplex& c) {
  if (!classify(x).is_nquandle) {
    throw AxiomViolation("degenerate and quandle homology need an n-quandle");
  }
  const auto reduced = reduce_nrack_to_rack(x);
  if (c.variant != Variant::Rack || c.base_size != static_cast<std::size_t>(reduced.size())) {
    throw InvalidArgument("complex is not the rack complex of this n-rack");
  }
  for (Element t = 0; t < static_cast<Element>(reduced.size()); ++t) {
    if (reduced.op(t, t) != t) throw AxiomViolation("reduction of the n-quandle is not a quandle");
  }
  std::vector<std::vector<std::size_t>> keep(c.max_degree + 1);
  for (int k = 0; k <= c.max_degree; ++k)
    for (std::size_t pos = 0; pos < c.rank(k); ++pos)
      if (has_consecutive_repeat(c.basis[k][pos], c.base_size, k)) keep[k].push_back(pos);
  return restrict_complex(c, Variant::Degenerate, keep, false);
}

ChainComplex quandle_quotient_complex(const ChainComplex& c, const ChainComplex& d) {
  if (c.base_size != d.base_size || c.max_degree != d.max_degree) {
    throw InvalidArgument("sub-complex does not match the complex");
  }
  std::vector<std::vector<std::size_t>> complement(c.max_degree + 1);
  for (int k = 0; k <= c.max_degree; ++k) {
    std::vector<char> in_sub(c.rank(k));
    BasisLookup lookup(c.basis[k]);
    for (auto label : d.basis[k]) {
      const auto pos = lookup.find(label);
      if (pos == BasisLookup::npos) throw AxiomViolation("sub-complex basis is not part of the complex");
      in_sub[pos] = 1;
    }
    if (k >= 1) {
      BasisLookup lower(d.basis[k - 1]);
      for (std::size_t pos = 0; pos < c.rank(k); ++pos) {
        if (!in_sub[pos]) continue;
        for (const auto& [row, v] : c.boundaries[k].columns[pos]) {
          if (lower.find(c.basis[k - 1][row]) == BasisLookup::npos) {
            throw AxiomViolation("sub-complex is not closed under the boundary in degree " +
                                 std::to_string(k));
          }
        }
      }
    }
    for (std::size_t pos = 0; pos < c.rank(k); ++pos)
      if (!in_sub[pos]) complement[k].push_back(pos);
  }
  return restrict_complex(c, Variant::Quandle, complement, true);
}

ChainComplex chain_complex(const FiniteNRack& x, Variant variant, int max_degree, std::size_t budget) {
  if (variant != Variant::Rack && !classify(x).is_nquandle) {
    throw AxiomViolation("degenerate and quandle homology need an n-quandle");
  }
  auto c = rack_chain_complex(x, max_degree, budget);
  if (variant == Variant::Rack) return c;
  auto d = degenerate_subcomplex(x, c);
  if (variant == Variant::Degenerate) return d;
  return quandle_quotient_complex(c, d);
}

std::optional<int> find_nonzero_boundary_square(const ChainComplex& c) {
  for (int k = 1; k <= c.max_degree; ++k) {
    if (!multiply(c.boundaries[k - 1], c.boundaries[k]).is_zero()) return k;
  }
  return std::nullopt;
}

Coefficients Coefficients::cyclic(long d) {
  if (d < 2) throw InvalidArgument("cyclic coefficients need d >= 2");
  return Coefficients(d);
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text.rfind("Z/", 0) == 0 && text.size() > 2 &&
      std::all_of(text.begin() + 2, text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
      text.size() <= 12) {
    return cyclic(std::stol(text.substr(2)));
  }
  throw InvalidArgument("coefficients must be Z or Z/d, got '" + text + "'");
}

std::string Coefficients::to_string() const {
  return is_integral() ? "Z" : "Z/" + modulus_.get_str();
}

AbelianGroupInvariants subquotient(const IntMatrix& out, const IntMatrix& in, std::size_t r,
                                   const Coefficients& a) {
  if (out.cols() != r || in.rows() != r) throw InvalidArgument("complex shapes do not match");
  if (a.is_integral()) {
    const auto rank_out = invariant_factors(out).size();
    const auto factors_in = invariant_factors(in);
    AbelianGroupInvariants g;
    g.free_rank = r - rank_out - factors_in.size();
    for (const auto& f : factors_in)
      if (f != 1) g.torsion.push_back(f);
    return g;
  }
  if (r == 0) return {};
  const Integer& d = a.modulus();
  const auto p = out.rows();

  // L = {x in Z^r : out x = 0 mod d}: project the kernel of [out | d I] to Z^r.
  IntMatrix lattice = IntMatrix::identity(r);
  if (p > 0) {
    IntMatrix stacked(p, r + p);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < r; ++j) stacked(i, j) = out(i, j);
      stacked(i, r + i) = d;
    }
    const auto sf = smith_normal_form(stacked);
    const auto rho = sf.rank();
    if (rho != p) throw std::logic_error("unexpected rank in kernel computation");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) lattice(i, j) = sf.v(i, rho + j);
  }

  // Generators of im(in) + dZ^r, in coordinates of the lattice basis.
  IntMatrix gens(r, in.cols() + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < in.cols(); ++j) gens(i, j) = in(i, j);
    gens(i, in.cols() + i) = d;
  }
  const auto lf = smith_normal_form(lattice);
  if (lf.rank() != r) throw std::logic_error("kernel lattice is not of full rank");
  IntMatrix w = lf.u * gens;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (!mpz_divisible_p(w(i, j).get_mpz_t(), lf.diagonal[i].get_mpz_t())) {
        throw std::logic_error("image is not contained in the kernel lattice");
      }
      mpz_divexact(w(i, j).get_mpz_t(), w(i, j).get_mpz_t(), lf.diagonal[i].get_mpz_t());
    }
  }
  return cokernel(lf.v * w);
}

namespace {

void check_degree(const ChainComplex& c, int k) {
  if (k < 0 || k >= c.max_degree) {
    throw InvalidArgument("degree " + std::to_string(k) + " needs a complex built to degree " +
                          std::to_string(k + 1) + " (have " + std::to_string(c.max_degree) + ")");
  }
}

}  // namespace

HomologyResult homology(const ChainComplex& c, int k, const Coefficients& a) {
  check_degree(c, k);
  HomologyResult h{c.variant, k, a, {}};
  h.group = subquotient(c.boundaries[k].to_dense(), c.boundaries[k + 1].to_dense(), c.rank(k), a);
  return h;
}

HomologyResult cohomology(const ChainComplex& c, int k, const Coefficients& a) {
  check_degree(c, k);
  HomologyResult h{c.variant, k, a, {}};
  h.group = subquotient(c.boundaries[k + 1].to_dense().transpose(),
                        c.boundaries[k].to_dense().transpose(), c.rank(k), a);
  return h;
}

namespace {

// A ⊗ Z/d contributes Z/d per free summand and Z/gcd(t, d) per Z/t;
// Tor(A, Z/d) contributes Z/gcd(t, d) per Z/t.
AbelianGroupInvariants tensor_plus_tor(const AbelianGroupInvariants& tensored,
                                       const AbelianGroupInvariants& tor, long d) {
  const Integer dd = d;
  std::vector<Integer> orders(tensored.free_rank, dd);
  for (const auto& t : tensored.torsion) orders.push_back(gcd(t, dd));
  for (const auto& t : tor.torsion) orders.push_back(gcd(t, dd));
  return AbelianGroupInvariants::from_cyclic_orders(0, orders);
}

}  // namespace

AbelianGroupInvariants homology_by_universal_coefficients(const ChainComplex& c, int k, long d) {
  const auto z = Coefficients::integers();
  const auto hk = homology(c, k, z).group;
  const auto below = k >= 1 ? homology(c, k - 1, z).group : AbelianGroupInvariants{};
  return tensor_plus_tor(hk, below, d);
}

AbelianGroupInvariants cohomology_by_universal_coefficients(const ChainComplex& c, int k, long d) {
  const auto z = Coefficients::integers();
  return tensor_plus_tor(cohomology(c, k, z).group, cohomology(c, k + 1, z).group, d);
}

}  // namespace nrack
