#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrack/constructions.hpp"
#include "nrack/nrack.hpp"
#include "nrack/smith.hpp"

namespace nrack {

/// Integer matrix stored by columns; each column holds (row, value) pairs
/// sorted by row with no zero values.
struct SparseIntMatrix {
  using Column = std::vector<std::pair<std::size_t, long long>>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  bool is_zero() const;
  std::size_t nonzeros() const;
  IntMatrix to_dense() const;
  /// Sorts and merges (row, value) pairs; drops zeros.
  static Column normalize(Column c);
};

/// a * b, exact in 64-bit arithmetic (throws on overflow).
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// "rows cols nnz" header, then one "row col value" line per nonzero entry,
/// column-major, 0-based.
void write_triplets(std::ostream& out, const SparseIntMatrix& m);

enum class Variant { Rack, Degenerate, Quandle };

char variant_code(Variant v);
Variant parse_variant(const std::string& code);

inline constexpr std::size_t kDefaultColumnBudget = 20000;

/// Free chain complex on tuples of the binary rack X^(n-1).
///
/// Degree k has basis the k-tuples of X^(n-1) (a subset of them for D and Q),
/// recorded as their lexicographic index in (X^(n-1))^k. Degree 0 is Z on the
/// empty tuple. boundaries[k] is ∂_k : C_k -> C_{k-1}; boundaries[0] maps to 0.
struct ChainComplex {
  Variant variant = Variant::Rack;
  /// Size of the binary rack X^(n-1) whose tuples form the basis.
  std::size_t base_size = 0;
  int max_degree = 0;
  std::vector<std::vector<std::size_t>> basis;
  std::vector<SparseIntMatrix> boundaries;

  std::size_t rank(int k) const { return basis.at(k).size(); }
};

/// Rack complex of a binary rack.
///
/// ∂_k(x_1..x_k) = Σ_{i=2..k} (-1)^i [ (x_1..x̂_i..x_k)
///                                     - (x_i∘x_1, .., x_i∘x_{i-1}, x_{i+1}..x_k) ]
/// where x_i∘x_j is x_i acting on x_j by left translation.
/// Throws BudgetExceeded when the top rank exceeds `budget` columns.
ChainComplex rack_chain_complex(const FiniteRack& q, int max_degree,
                                std::size_t budget = kDefaultColumnBudget);

/// Rack complex of an n-rack, built on its reduction X^(n-1).
ChainComplex rack_chain_complex(const FiniteNRack& x, int max_degree,
                                std::size_t budget = kDefaultColumnBudget);

/// Sub-complex on tuples with two equal consecutive entries. Requires `x` to
/// be an n-quandle (AxiomViolation otherwise) and `c` its rack complex.
/// Closure under ∂ is verified; a failure throws AxiomViolation.
ChainComplex degenerate_subcomplex(const FiniteNRack& x, const ChainComplex& c);

/// C/D on the complementary basis. Verifies D is a sub-complex of C.
ChainComplex quandle_quotient_complex(const ChainComplex& c, const ChainComplex& d);

/// Builds the R, D or Q complex of `x` up to `max_degree`.
ChainComplex chain_complex(const FiniteNRack& x, Variant variant, int max_degree,
                           std::size_t budget = kDefaultColumnBudget);

/// First degree k with ∂_{k-1} ∂_k != 0, if any.
std::optional<int> find_nonzero_boundary_square(const ChainComplex& c);

/// Z (modulus 0) or Z/d, d >= 2.
class Coefficients {
 public:
  static Coefficients integers() { return Coefficients(0); }
  static Coefficients cyclic(long d);
  /// "Z" or "Z/d".
  static Coefficients parse(const std::string& text);

  bool is_integral() const noexcept { return modulus_ == 0; }
  const Integer& modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(long d) : modulus_(d) {}
  Integer modulus_;
};

struct HomologyResult {
  Variant variant = Variant::Rack;
  int degree = 0;
  Coefficients coefficients = Coefficients::integers();
  /// With Z/d coefficients the group is a Z/d-module; it is reported in the
  /// same canonical abelian-group form (free_rank is then always 0).
  AbelianGroupInvariants group;
};

/// H_k = ker ∂_k / im ∂_{k+1} over the coefficients. Needs 0 <= k < max_degree.
///
/// For Z/d the group is computed directly as L / (im ∂_{k+1} + dZ^r) with
/// L = {x : ∂_k x = 0 mod d}, through Smith forms of integer matrices. It does
/// not go through universal coefficients; that route is kept separately below.
HomologyResult homology(const ChainComplex& c, int k, const Coefficients& a);

/// H^k of the dual complex: ker ∂_{k+1}^T / im ∂_k^T. Needs 0 <= k < max_degree.
HomologyResult cohomology(const ChainComplex& c, int k, const Coefficients& a);

/// H_k(C; Z/d) = H_k(C) ⊗ Z/d + Tor(H_{k-1}(C), Z/d).
AbelianGroupInvariants homology_by_universal_coefficients(const ChainComplex& c, int k, long d);
/// H^k(C; Z/d) = H^k(C) ⊗ Z/d + Tor(H^{k+1}(C), Z/d). Needs k + 1 < max_degree.
AbelianGroupInvariants cohomology_by_universal_coefficients(const ChainComplex& c, int k, long d);

/// Homology of a two-step complex  Z^q --in--> Z^r --out--> Z^p  at the middle.
AbelianGroupInvariants subquotient(const IntMatrix& out, const IntMatrix& in, std::size_t r,
                                   const Coefficients& a);

}  // namespace nrack
