#include <doctest.h>

#include "quandlekit/builders.hpp"

using namespace quandlekit;
using namespace quandlekit::builders;

TEST_CASE("finite fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    auto const& F = field(q);
    CHECK(F.order() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 3) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
      CHECK(F.frobenius(a) == F.power(a, F.characteristic()));
    }
    // The primitive element has multiplicative order q - 1.
    auto const w = F.primitive_element();
    for (std::uint32_t k = 1; k + 1 < q; ++k) {
      CHECK(F.power(w, k) != 1);
    }
    CHECK(F.power(w, q - 1) == 1);
    CHECK(&field(q) == &F);
  }
}

TEST_CASE("projective groups") {
  CHECK(PermGroup(psl2(7).generators).order() == 168);
  CHECK(PermGroup(pgl2(7).generators).order() == 336);
  CHECK(PermGroup(psl2(9).generators).order() == 360);
  CHECK(PermGroup(pgammal2(9).generators).order() == 1440);
  CHECK(PermGroup(psigmal2(9).generators).order() == 720);
  CHECK(PermGroup(pgl2(8).generators).order() == 504);
  CHECK(PermGroup(pgammal2(8).generators).order() == 1512);
  for (auto const& g : {psl2(11), pgl2(13), pgammal2(27)}) {
    PermGroup const G(g.generators);
    CHECK(G.order() == g.order);
    CHECK(is_primitive(G));
  }
}

TEST_CASE("M10 is neither S6 nor PGL(2,9)") {
  PermGroup const m(m10().generators);
  PermGroup const s(psigmal2(9).generators);
  PermGroup const p(pgl2(9).generators);
  CHECK(m.order() == 720);
  CHECK(is_primitive(m));
  // M10 has no elements of order 6 or 10, its point stabilizer is not
  // abelian, and its derived subgroup is A6.
  bool order6 = false;
  m.for_each_element([&](Permutation const& g) { order6 |= g.order() == 6; });
  CHECK_FALSE(order6);
  CHECK(derived_subgroup(m).order() == 360);
  CHECK_FALSE(m == s);
  CHECK_FALSE(m == p);
}

TEST_CASE("actions on sets and classes") {
  PermGroup const s5(symmetric_generators(5));
  auto const pairs = action_on_pairs(s5.generators());
  CHECK(pairs[0].degree() == 10);
  CHECK(PermGroup(pairs).order() == 120);
  auto const conj = action_on_conjugates(s5, Permutation::from_cycles(5, "(1,2)"));
  CHECK(conj[0].degree() == 10);
  auto const cyc = action_on_cyclic_subgroups(s5, Permutation::from_cycles(5, "(1,2,3,4,5)"));
  CHECK(cyc[0].degree() == 6);
  CHECK(PermGroup(cyc).order() == 120);
  auto const reduced = reduce_generators(s5.elements());
  CHECK(PermGroup(reduced).order() == 120);
  CHECK(reduced.size() <= 3);
  CHECK(find_element(s5, [](Permutation const& g) { return g.order() == 6; }).order() == 6);
  CHECK_THROWS(find_element(s5, [](Permutation const& g) { return g.order() == 7; }));
}
