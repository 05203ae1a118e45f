#include <doctest.h>

#include <sstream>

#include "../fixtures.hpp"
#include "../oracles/classical_homology.hpp"
#include "nrack/enumerate.hpp"
#include "nrack/error.hpp"
#include "nrack/homology.hpp"

using namespace nrack;
using namespace nrack::testing;

namespace {

AbelianGroupInvariants group(std::size_t free_rank, std::vector<Integer> torsion = {}) {
  return AbelianGroupInvariants{free_rank, std::move(torsion)};
}

std::vector<long long> prime_powers_of(const AbelianGroupInvariants& g) {
  std::vector<oracle::BigInt> orders;
  for (const auto& d : g.torsion) orders.emplace_back(d.get_str());
  return oracle::prime_powers(orders);
}

oracle::Kind kind_of(Variant v) {
  switch (v) {
    case Variant::Rack: return oracle::Kind::Rack;
    case Variant::Degenerate: return oracle::Kind::Degenerate;
    default: return oracle::Kind::Quandle;
  }
}

std::size_t rank_over_q(const SparseIntMatrix& m) { return invariant_factors(m.to_dense()).size(); }

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("sparse matrices") {
  SparseIntMatrix a(2, 2);
  a.columns[0] = {{0, 1}, {1, 2}};
  a.columns[1] = {{1, -1}};
  CHECK(a.nonzeros() == 3);
  CHECK(a.to_dense() == IntMatrix(2, 2, {1, 0, 2, -1}));
  CHECK(multiply(a, a).to_dense() == IntMatrix(2, 2, {1, 0, 0, 1}));
  CHECK(SparseIntMatrix::normalize({{2, 1}, {0, 3}, {2, -1}}) == SparseIntMatrix::Column{{0, 3}});
  std::ostringstream out;
  write_triplets(out, a);
  CHECK(out.str() == "2 2 3\n0 0 1\n1 0 2\n1 1 -1\n");
}

TEST_CASE("variant and coefficient parsing") {
  CHECK(parse_variant("Q") == Variant::Quandle);
  CHECK(variant_code(Variant::Degenerate) == 'D');
  CHECK_THROWS_AS(parse_variant("X"), InvalidArgument);
  CHECK(Coefficients::parse("Z").is_integral());
  CHECK(Coefficients::parse("Z/3") == Coefficients::cyclic(3));
  CHECK(Coefficients::cyclic(5).to_string() == "Z/5");
  CHECK_THROWS_AS(Coefficients::parse("Z/1"), InvalidArgument);
  CHECK_THROWS_AS(Coefficients::parse("Q"), InvalidArgument);
}

TEST_CASE("one-element rack") {
  const auto c = rack_chain_complex(one_element(2), 4);
  for (int k = 0; k <= 4; ++k) CHECK(c.rank(k) == 1);
  for (int k = 0; k <= 4; ++k) CHECK(c.boundaries[k].is_zero());
  for (int k = 1; k <= 3; ++k) {
    CHECK(homology(c, k, Coefficients::integers()).group == group(1));
    CHECK(cohomology(c, k, Coefficients::integers()).group == group(1));
  }
  CHECK(homology(c, 0, Coefficients::integers()).group == group(1));
  CHECK_THROWS_AS(homology(c, 4, Coefficients::integers()), InvalidArgument);

  const auto d = chain_complex(one_element(3), Variant::Degenerate, 3);
  CHECK(d.rank(1) == 0);
  CHECK(d.rank(2) == 1);
  CHECK(d.rank(3) == 1);
  const auto q = chain_complex(one_element(3), Variant::Quandle, 3);
  CHECK(q.rank(1) == 1);
  CHECK(q.rank(2) == 0);
  CHECK(q.rank(3) == 0);
}

TEST_CASE("trivial racks") {
  for (int m = 1; m <= 3; ++m) {
    const auto c = rack_chain_complex(trivial_nrack(2, m), 4);
    std::size_t expect = 1;
    for (int k = 1; k <= 3; ++k) {
      expect *= m;
      CHECK(c.rank(k) == expect);
      CHECK(c.boundaries[k].is_zero());
      CHECK(homology(c, k, Coefficients::integers()).group == group(expect));
    }
  }
  const auto c = rack_chain_complex(trivial_nrack(2, 2), 3);
  CHECK(cohomology(c, 2, Coefficients::integers()).group == group(4));
  CHECK(chain_complex(trivial_nrack(2, 2), Variant::Degenerate, 2).rank(2) == 2);
  CHECK(chain_complex(trivial_nrack(2, 2), Variant::Quandle, 2).rank(2) == 2);
}

TEST_CASE("dihedral quandle on Z/3") {
  const auto x = dihedral_z3().as_nrack();
  const auto c = rack_chain_complex(x, 4);
  const auto d2 = c.boundaries[2].to_dense();
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 9);
  // ∂(a, b) = (a) - (b∘a)
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      IntMatrix col(3, 1);
      col(a, 0) += 1;
      col(dihedral_z3().op(b, a), 0) -= 1;
      for (std::size_t i = 0; i < 3; ++i) CHECK(d2(i, a * 3 + b) == col(i, 0));
    }
  CHECK_FALSE(find_nonzero_boundary_square(c));

  const auto d = chain_complex(x, Variant::Degenerate, 3);
  CHECK(d.rank(2) == 3);
  CHECK(d.rank(3) == 15);
  const auto q = chain_complex(x, Variant::Quandle, 4);
  CHECK(q.rank(3) == 12);
  CHECK(homology(q, 2, Coefficients::integers()).group == group(0));
  CHECK(homology(q, 3, Coefficients::integers()).group == group(0, {3}));
  CHECK(homology(q, 1, Coefficients::integers()).group == group(1));
  CHECK(cohomology(q, 2, Coefficients::cyclic(3)).group == group(0));
  CHECK(cohomology(q, 3, Coefficients::cyclic(3)).group == group(0, {3}));
  CHECK(homology(q, 3, Coefficients::cyclic(3)).group == group(0, {3}));
}

TEST_CASE("degenerate and quandle variants need an n-quandle") {
  CHECK_THROWS_AS(chain_complex(z4_3rack(), Variant::Degenerate, 2), AxiomViolation);
  CHECK_THROWS_AS(chain_complex(shift_rack_z2().as_nrack(), Variant::Quandle, 2), AxiomViolation);
  CHECK_NOTHROW(chain_complex(z4_3rack(), Variant::Rack, 2));
}

TEST_CASE("column budget") {
  try {
    rack_chain_complex(z4_3rack(), 4, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.requested() == 65536);
    CHECK(e.cap() == 1000);
  }
  CHECK_NOTHROW(rack_chain_complex(z4_3rack(), 3));
}

TEST_CASE("boundary squares vanish and ranks add up") {
  std::vector<FiniteNRack> xs{z4_3rack(), conj_s3(2), dihedral_z3().as_nrack(), shift_rack_z2().as_nrack(),
                              lift_rack_to_nrack(dihedral_z3(), 3), build_conjugation_nrack(cyclic_group(2), 3)};
  for (const auto& r : enumerate_nracks(2, 3, StructureFilter::NRack).representatives) xs.push_back(r);
  for (const auto& x : xs) {
    std::size_t base = 1;
    for (int i = 1; i < x.arity(); ++i) base *= x.size();
    const int top = base <= 3 ? 4 : base <= 9 ? 3 : 2;
    // the square check itself is sparse and cheap, so it always goes to degree 4 where the budget allows
    if (base <= 11) CHECK_FALSE(find_nonzero_boundary_square(rack_chain_complex(x, 4)));
    for (auto v : {Variant::Rack, Variant::Degenerate, Variant::Quandle}) {
      if (v != Variant::Rack && !classify(x).is_nquandle) continue;
      const auto c = chain_complex(x, v, top);
      CHECK_FALSE(find_nonzero_boundary_square(c));
      for (int k = 1; k <= top; ++k) {
        if (k >= 1) CHECK(multiply(c.boundaries[k - 1], c.boundaries[k]).is_zero());
        // rank-nullity over Q: dim ker + dim im = r_k, and H_k free rank matches
        if (k < top) {
          const auto h = homology(c, k, Coefficients::integers());
          const auto out = rank_over_q(c.boundaries[k]);
          const auto in = rank_over_q(c.boundaries[k + 1]);
          CHECK(h.group.free_rank + out + in == c.rank(k));
        }
      }
    }
  }
}

TEST_CASE("cyclic coefficients agree with universal coefficients") {
  std::vector<FiniteNRack> xs{dihedral_z3().as_nrack(), shift_rack_z2().as_nrack(), conj_s3(2),
                              build_z4_module_nrack(2, 4), lift_rack_to_nrack(dihedral_z3(), 3)};
  for (const auto& x : xs)
    for (auto v : {Variant::Rack, Variant::Quandle}) {
      if (v != Variant::Rack && !classify(x).is_nquandle) continue;
      const int top = x.size() <= 4 && x.arity() == 2 ? 4 : 3;
      const auto c = chain_complex(x, v, top);
      for (long d : {2L, 3L, 4L, 6L}) {
        for (int k = 0; k < top; ++k) {
          CAPTURE(k);
          CAPTURE(d);
          CHECK(homology(c, k, Coefficients::cyclic(d)).group == homology_by_universal_coefficients(c, k, d));
          if (k + 1 < top)
            CHECK(cohomology(c, k, Coefficients::cyclic(d)).group == cohomology_by_universal_coefficients(c, k, d));
        }
      }
    }
}

TEST_CASE("n = 2 agrees with the classical right-action oracle") {
  std::vector<FiniteNRack> racks;
  for (int m = 1; m <= 3; ++m)
    for (const auto& r : enumerate_nracks(2, m, StructureFilter::NRack).representatives) racks.push_back(r);
  for (const auto& r : racks) {
    const FiniteRack q(r);
    const oracle::ClassicalRack classical{q.size(), [q](int x, int y) { return static_cast<int>(q.op(x, y)); }};
    for (auto v : {Variant::Rack, Variant::Degenerate, Variant::Quandle}) {
      if (v != Variant::Rack && !classify(r).is_nquandle) continue;
      const auto c = chain_complex(r, v, 4);
      for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        const auto h = homology(c, k, Coefficients::integers()).group;
        const auto want = oracle::integral_homology(classical, k, kind_of(v));
        CHECK(h.free_rank == want.free_rank);
        CHECK(prime_powers_of(h) == want.prime_power_torsion);
        for (int p : {2, 3}) {
          const auto hp = homology(c, k, Coefficients::cyclic(p)).group;
          CHECK(hp.free_rank == 0);
          CHECK(hp.torsion.size() == oracle::mod_p_betti(classical, k, kind_of(v), p));
          for (const auto& t : hp.torsion) CHECK(t == p);
        }
      }
    }
  }
}

TEST_CASE("subquotient on a hand complex") {
  // Z --2--> Z --0--> 0
  const IntMatrix out(0, 1), in(1, 1, {2});
  CHECK(subquotient(out, in, 1, Coefficients::integers()).to_string() == "Z/2");
  CHECK(subquotient(out, in, 1, Coefficients::cyclic(2)).to_string() == "Z/2");
  CHECK(subquotient(out, in, 1, Coefficients::cyclic(3)).to_string() == "0");
  // Z --0--> Z --2--> Z
  const IntMatrix out2(1, 1, {2}), in2(1, 1);
  CHECK(subquotient(out2, in2, 1, Coefficients::integers()).to_string() == "0");
  CHECK(subquotient(out2, in2, 1, Coefficients::cyclic(2)).to_string() == "Z/2");
  CHECK(subquotient(out2, in2, 1, Coefficients::cyclic(4)).to_string() == "Z/2");
}

}  // TEST_SUITE
