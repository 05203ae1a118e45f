#include <doctest.h>

#include <numeric>

#include "../fixtures.hpp"
#include "nrack/constructions.hpp"
#include "nrack/enumerate.hpp"
#include "nrack/error.hpp"

using namespace nrack;
using namespace nrack::testing;

namespace {

bool validated(const FiniteNRack& r) {
  const auto c = classify(r);
  return c.is_nrack && c.is_pointed.value_or(true);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("groups") {
  const auto s3 = symmetric_group(3);
  CHECK(s3.size() == 6);
  CHECK(s3.identity() == 0);
  CHECK_FALSE(s3.is_abelian());
  CHECK(cyclic_group(4).is_abelian());
  CHECK(dihedral_group(4).size() == 8);
  CHECK_FALSE(dihedral_group(4).is_abelian());
  CHECK(named_group("D4") == dihedral_group(4));
  CHECK(named_group("Z2") == cyclic_group(2));
  CHECK_THROWS_AS(named_group("Q8"), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}, 0), InvalidArgument);
  for (Element a = 0; a < 6; ++a) CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
}

TEST_CASE("Z4-module n-racks") {
  const auto r2 = build_z4_module_nrack(2, 4);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(r2({x, y}) == (2 * x + y) % 4);
  for (int n = 2; n <= 4; ++n) CHECK(validated(build_z4_module_nrack(n, 4)));
  CHECK(validated(build_z4_module_nrack(3, 2)));
  CHECK(classify(build_z4_module_nrack(3, 4)).is_weak_nkei);
  CHECK(classify(build_z4_module_nrack(5, 4)).is_weak_nkei);
  CHECK_FALSE(classify(build_z4_module_nrack(4, 4)).is_weak_nkei);
  CHECK_THROWS_AS(build_z4_module_nrack(3, 8), InvalidArgument);
  CHECK_THROWS_AS(build_z4_module_nrack(1, 4), InvalidArgument);
}

TEST_CASE("Gamma-module n-racks") {
  for (int n = 2; n <= 4; ++n) CHECK(build_gamma_module_nrack(n, 4, 1, 2) == build_z4_module_nrack(n, 4));
  const auto alex = build_gamma_module_nrack(2, 5, 3, 3);
  CHECK(validated(alex));
  CHECK(classify(alex).is_nquandle);
  CHECK_THROWS_AS(build_gamma_module_nrack(3, 5, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(build_gamma_module_nrack(2, 4, 2, 1), InvalidArgument);
  // satisfies s^2 + ts = s but not the arity-3 condition; the table really fails
  CHECK_THROWS_AS(build_gamma_module_nrack(3, 5, 3, 3), InvalidArgument);
  std::vector<Element> t(125);
  Tuple xs(3, 0);
  do t[xs[0] * 25 + xs[1] * 5 + xs[2]] = (3 * xs[0] + 3 * xs[1] + 3 * xs[2]) % 5;
  while (next_tuple(xs, 5));
  CHECK_FALSE(check_left_distributive(FiniteNRack(3, 5, t)));
}

TEST_CASE("accepted Gamma parameters always give n-racks") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 8; ++m)
      for (int t = 0; t < m; ++t)
        for (int s = 0; s < m; ++s) {
          std::optional<FiniteNRack> r;
          try {
            r = build_gamma_module_nrack(n, m, t, s);
          } catch (const InvalidArgument&) {
            continue;
          }
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(t);
          CAPTURE(s);
          CHECK(validated(*r));
        }
}

TEST_CASE("conjugation n-racks") {
  const auto s3 = symmetric_group(3);
  const auto r = build_conjugation_nrack(s3, 3);
  CHECK(r.size() == 6);
  const auto c = classify(r);
  CHECK(c.is_nrack);
  CHECK(c.is_pointed == true);
  CHECK(c.is_weak_nquandle);

  const auto z2 = classify(build_conjugation_nrack(cyclic_group(2), 3));
  CHECK(z2.is_nquandle);
  CHECK(z2.is_nkei);
  CHECK(build_conjugation_nrack(cyclic_group(2), 3) == trivial_nrack(3, 2).with_basepoint(0));

  const auto r2 = build_conjugation_nrack(s3, 2);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK(r2({x, y}) == s3.mul(s3.mul(x, y), s3.inv(x)));
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      for (Element y = 0; y < 6; ++y) {
        const Element w[] = {a, b, y, s3.inv(b), s3.inv(a)};
        CHECK(r({a, b, y}) == s3.product(w));
      }

  for (const auto& name : {"Z2", "Z4", "S3", "D4"})
    for (int n = 2; n <= 3; ++n) CHECK(validated(build_conjugation_nrack(named_group(name), n)));
}

TEST_CASE("lift") {
  const auto triv = lift_rack_to_nrack(FiniteRack(trivial_nrack(2, 3)), 3);
  CHECK(triv == trivial_nrack(3, 3));

  const auto d = lift_rack_to_nrack(dihedral_z3(), 3);
  CHECK(validated(d));
  Tuple xs(3, 0);
  do CHECK(d(xs) == (2 * xs[0] + 4 * xs[1] + xs[2]) % 3);
  while (next_tuple(xs, 3));

  CHECK(lift_rack_to_nrack(FiniteRack(build_z4_module_nrack(2, 4)), 3) == build_z4_module_nrack(3, 4));
  CHECK(lift_rack_to_nrack(dihedral_z3(), 2) == dihedral_z3().as_nrack());
}

TEST_CASE("lift is functorial on small racks") {
  const auto racks = enumerate_nracks(2, 3, StructureFilter::NRack).representatives;
  const auto small = enumerate_nracks(2, 2, StructureFilter::NRack).representatives;
  auto all = racks;
  all.insert(all.end(), small.begin(), small.end());
  for (const auto& q : all)
    for (const auto& p : all) {
      std::vector<Element> f(q.size(), 0);
      do {
        if (!is_homomorphism(f, q, p)) continue;
        for (int n = 3; n <= 4; ++n)
          CHECK(is_homomorphism(f, lift_rack_to_nrack(FiniteRack(q), n), lift_rack_to_nrack(FiniteRack(p), n)));
      } while (next_tuple(f, p.size()));
    }
}

TEST_CASE("lift and reduce preserve the axioms") {
  for (const auto& q : enumerate_nracks(2, 3, StructureFilter::NRack).representatives)
    for (int n = 2; n <= 4; ++n) {
      const auto lifted = lift_rack_to_nrack(FiniteRack(q), n);
      CHECK(is_nrack(lifted));
      CHECK(is_rack(reduce_nrack_to_rack(lifted)));
    }
}

TEST_CASE("reduce") {
  CHECK(reduce_nrack_to_rack(one_element(4)).size() == 1);
  const auto z = reduce_nrack_to_rack(z4_3rack());
  CHECK(z.size() == 16);
  CHECK(is_rack(z));
  CHECK(reduce_nrack_to_rack(dihedral_z3().as_nrack()) == dihedral_z3());

  // (x1,x2)∘(y1,y2) = ([x1,x2,y1], [x1,x2,y2]) with x1 most significant
  const auto r = z4_3rack();
  for (Element a = 0; a < 16; ++a)
    for (Element b = 0; b < 16; ++b) {
      const Element x1 = a / 4, x2 = a % 4, y1 = b / 4, y2 = b % 4;
      CHECK(z.op(a, b) == r({x1, x2, y1}) * 4 + r({x1, x2, y2}));
    }

  const auto pointed = reduce_nrack_to_rack(conj_s3());
  CHECK(pointed.basepoint() == Element{0});
  CHECK(is_rack(pointed));
}

TEST_CASE("reduce of an n-quandle is a quandle") {
  for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
    for (const auto& r : enumerate_nracks(n, m, StructureFilter::NQuandle).representatives) {
      const auto q = reduce_nrack_to_rack(r);
      for (Element x = 0; x < static_cast<Element>(q.size()); ++x) CHECK(q.op(x, x) == x);
    }
  }
  const auto q = reduce_nrack_to_rack(build_conjugation_nrack(cyclic_group(4), 3));
  for (Element x = 0; x < 16; ++x) CHECK(q.op(x, x) == x);
}

TEST_CASE("tuple indexing") {
  CHECK(tuple_to_index(Tuple{1, 2, 3}, 4) == 27);
  CHECK(index_to_tuple(27, 4, 3) == Tuple{1, 2, 3});
  for (std::size_t i = 0; i < 125; ++i) CHECK(tuple_to_index(index_to_tuple(i, 5, 3), 5) == i);
}

TEST_CASE("antisymmetric brackets") {
  const auto h = cyclic_group(4);
  // {A, B} = A - B on Z4 is antisymmetric; A + B is not
  std::vector<Element> diff(16), sum(16);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) {
      diff[a * 4 + b] = (a + 4 - b) % 4;
      sum[a * 4 + b] = (a + b) % 4;
    }
  CHECK(check_bracket_antisymmetric(h, 2, diff));
  const auto v = check_bracket_antisymmetric(h, 2, sum);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == Tuple{0, 1});
}

TEST_CASE("module-group construction") {
  SUBCASE("abelian H, trivial action") {
    const auto h = cyclic_group(2);
    const auto v = cyclic_group(3);
    ModuleGroupData d{2, h, std::vector<Element>(4, 0), v, {0, 1, 2, 0, 1, 2}};
    const auto res = build_module_group_nrack(d);
    CHECK(res.rack.size() == 6);
    CHECK(res.classification.is_nrack);
    CHECK(res.classification.is_pointed == true);
    CHECK(res.rack.basepoint() == Element{0});
  }
  SUBCASE("S3 with the constant identity bracket") {
    const auto h = symmetric_group(3);
    const auto v = cyclic_group(3);
    std::vector<Element> act(18);
    for (Element a = 0; a < 6; ++a)
      for (Element u = 0; u < 3; ++u) act[a * 3 + u] = u;
    ModuleGroupData d{3, h, std::vector<Element>(216, 0), v, act};
    const auto res = build_module_group_nrack(d);
    CHECK(res.classification.is_nrack);
    const auto conj = build_conjugation_nrack(h, 3);
    Tuple xs(3, 0);
    do {
      const Element got = res.rack(xs);
      const Tuple as{xs[0] % 6, xs[1] % 6, xs[2] % 6};
      CHECK(got / 6 == xs[2] / 6);
      CHECK(got % 6 == conj(as));
    } while (next_tuple(xs, 18));
  }
  SUBCASE("Z4 acting on Z5 with a nonzero bracket: verdict is reported") {
    const auto h = cyclic_group(4);
    const auto v = cyclic_group(5);
    std::vector<Element> act(20), bracket(16);
    Element g = 1;
    for (Element a = 0; a < 4; ++a) {
      for (Element u = 0; u < 5; ++u) act[a * 5 + u] = (g * u) % 5;
      g = (g * 2) % 5;
    }
    for (Element a = 0; a < 4; ++a)
      for (Element b = 0; b < 4; ++b) bracket[a * 4 + b] = (a + 4 - b) % 4;
    const auto res = build_module_group_nrack(ModuleGroupData{2, h, bracket, v, act});
    CHECK(res.rack.size() == 20);
    CHECK(res.classification.is_nrack == (res.distributive.holds && res.bijective.holds));
    CHECK(res.bijective.holds);
    if (!res.distributive.holds) CHECK(res.distributive.witness.size() == 3);
  }
  SUBCASE("bad data is rejected") {
    const auto h = cyclic_group(2);
    const auto v = cyclic_group(3);
    CHECK_THROWS_AS(build_module_group_nrack({2, h, {0, 1, 0, 1}, v, {0, 1, 2, 0, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(build_module_group_nrack({2, h, {0, 0, 0, 0}, v, {0, 1, 2, 0, 0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(build_module_group_nrack({2, h, {0, 0, 0, 0}, symmetric_group(3), std::vector<Element>(12, 0)}),
                    InvalidArgument);
  }
}

}  // TEST_SUITE
