#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandlekit/builders.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/perm_group.hpp"

using namespace quandlekit;

namespace {

std::vector<oracle::Perm> to_oracle(std::vector<Permutation> const& gens) {
  std::vector<oracle::Perm> out;
  for (auto const& g : gens) {
    out.push_back(oracle::from_lib(g));
  }
  return out;
}

std::set<oracle::Perm> to_oracle_set(std::vector<Permutation> const& elems) {
  std::set<oracle::Perm> out;
  for (auto const& g : elems) {
    out.insert(oracle::from_lib(g));
  }
  return out;
}

// Random groups of degree <= 7 with 1-3 generators, some transitive.
std::vector<std::vector<Permutation>> random_groups(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<std::vector<Permutation>> out;
  for (int i = 0; i < count; ++i) {
    std::size_t const n = 2 + rng() % 6;
    std::size_t const k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t j = 0; j < k; ++j) {
      auto p = oracle::random_perm(n, rng);
      // Sparse elements keep some groups small.
      if (rng() % 2) {
        p = oracle::identity(n);
        std::swap(p[rng() % n], p[rng() % n]);
      }
      gens.push_back(oracle::to_lib(p));
    }
    out.push_back(gens);
  }
  return out;
}

}  // namespace

TEST_CASE("orders of standard groups") {
  CHECK(PermGroup(builders::symmetric_generators(5)).order() == 120);
  CHECK(PermGroup(builders::alternating_generators(5)).order() == 60);
  CHECK(PermGroup(builders::alternating_generators(6)).order() == 360);
  CHECK(PermGroup(builders::symmetric_generators(10)).order() == 3628800);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK(PermGroup::trivial(4).is_trivial());
  CHECK(PermGroup(builders::symmetric_generators(30)).order().str()
        == "265252859812191058636308480000000");
  CHECK_THROWS_AS(PermGroup(std::vector<Permutation>{}), InvalidArgument);
  CHECK_THROWS_AS(PermGroup({Permutation(2), Permutation(3)}), InvalidArgument);
}

TEST_CASE("chain agrees with brute-force closure") {
  for (auto const& gens : random_groups(11, 60)) {
    PermGroup const G(gens);
    auto const brute = oracle::closure(to_oracle(gens));
    REQUIRE(G.order() == brute.size());
    CHECK(to_oracle_set(G.elements()) == brute);
    std::uint64_t i = 0;
    G.for_each_element([&](Permutation const& g) {
      CHECK(G.element_index(g) == i);
      CHECK(G.element_at(i) == g);
      ++i;
    });
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
      auto const p = oracle::random_perm(G.degree(), rng);
      CHECK(G.contains(oracle::to_lib(p)) == (brute.count(p) > 0));
    }
  }
}

TEST_CASE("with_base_prefix keeps the group") {
  auto const gens = builders::alternating_generators(6);
  auto const G = PermGroup::with_base_prefix(gens, {4, 2});
  CHECK(G.base()[0] == 4);
  CHECK(G.base()[1] == 2);
  CHECK(G.order() == 360);
  CHECK(G == PermGroup(gens));
}

TEST_CASE("orbits, stabilizers, centre, derived subgroup") {
  for (auto const& gens : random_groups(5, 40)) {
    PermGroup const G(gens);
    auto const brute = oracle::closure(to_oracle(gens));
    auto const orbs = oracle::orbits(to_oracle(gens), G.degree());
    CHECK(orbits(G).size() == orbs.size());
    CHECK(is_transitive(G) == (orbs.size() == 1));

    auto const S = stabilizer(G, 1);
    CHECK(to_oracle_set(S.elements()) == oracle::stabilizer(brute, 0));
    CHECK(G.order() == S.order() * orbit(G, 1).size());

    CHECK(to_oracle_set(center_elements(G)) == oracle::center(brute));
    CHECK(to_oracle_set(derived_subgroup(G).elements()) == oracle::derived(brute));
    CHECK(conjugacy_class_representatives(G).size() == oracle::class_count(brute));

    auto const x = gens.front();
    CHECK(to_oracle_set(normal_closure(G, {x}).elements())
          == oracle::normal_closure(brute, {oracle::from_lib(x)}));
    CHECK(is_normal(G, normal_closure(G, {x})));
    CHECK(is_subgroup(S, G));
  }
}

TEST_CASE("centre of groups with interchangeable orbits") {
  // <(1,2)(3,4)> x <(1,3)(2,4)> acting on two copies: the centre swaps them.
  auto const a = Permutation::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)");
  auto const b = Permutation::from_cycles(8, "(1,3)(2,4)(5,7)(6,8)");
  auto const s = Permutation::from_cycles(8, "(1,5)(2,6)(3,7)(4,8)");
  PermGroup const G({a, b, s});
  auto const brute = oracle::closure(to_oracle({a, b, s}));
  CHECK(to_oracle_set(center_elements(G)) == oracle::center(brute));
  CHECK(center(G).order() == 8);
}

TEST_CASE("block systems and primitivity against all partitions") {
  for (auto const& gens : random_groups(23, 60)) {
    PermGroup const G(gens);
    if (!is_transitive(G)) {
      continue;
    }
    auto const og = to_oracle(gens);
    CHECK(block_systems(G).size() == oracle::invariant_partition_count(og, G.degree()));
    CHECK(is_primitive(G) == oracle::primitive(og, G.degree()));
    CHECK(is_quasiprimitive(G)
          == oracle::quasiprimitive(oracle::closure(og), G.degree()));
  }
  // Transitive groups of degree 8 with known structure.
  std::vector<std::vector<Permutation>> named{
      {Permutation::from_cycles(8, "(1,2,3,4,5,6,7,8)")},
      {Permutation::from_cycles(8, "(1,2,3,4,5,6,7,8)"),
       Permutation::from_cycles(8, "(2,8)(3,7)(4,6)")},
      builders::pgl2(7).generators,
      builders::psl2(7).generators,
      // A5 x C2 ... not transitive; S4 on 8 cosets of C3
      {Permutation::from_cycles(8, "(1,2)(3,4)(5,6)(7,8)"),
       Permutation::from_cycles(8, "(1,3,5,7)(2,4,6,8)")}};
  for (auto const& gens : named) {
    PermGroup const G(gens);
    if (!is_transitive(G)) {
      continue;
    }
    auto const og = to_oracle(gens);
    CHECK(is_primitive(G) == oracle::primitive(og, 8));
    CHECK(is_quasiprimitive(G) == oracle::quasiprimitive(oracle::closure(og), 8));
    CHECK(block_systems(G).size() == oracle::invariant_partition_count(og, 8));
  }
}

TEST_CASE("primitivity conventions and examples") {
  CHECK(is_primitive(PermGroup::trivial(1)));
  CHECK(is_primitive(PermGroup(builders::symmetric_generators(2))));
  // V4 regular: transitive, imprimitive, not quasiprimitive
  PermGroup const V4({Permutation::from_cycles(4, "(1,2)(3,4)"),
                      Permutation::from_cycles(4, "(1,3)(2,4)")});
  CHECK(is_transitive(V4));
  CHECK_FALSE(is_primitive(V4));
  CHECK_FALSE(is_quasiprimitive(V4));
  CHECK(quasiprimitivity_witness(V4).has_value());
  // A5 on 12 cosets of C5: quasiprimitive, imprimitive
  PermGroup const A5(builders::alternating_generators(5));
  PermGroup const C5({Permutation::from_cycles(5, "(1,2,3,4,5)")});
  auto const a = coset_action(A5, C5);
  CHECK(a.image.degree() == 12);
  CHECK(a.faithful);
  CHECK(is_quasiprimitive(a.image));
  CHECK_FALSE(is_primitive(a.image));
  auto const blocks = minimal_block_system(a.image, 1, 2);
  CHECK(blocks.degree() == 12);
}

TEST_CASE("coset action") {
  PermGroup const S5(builders::symmetric_generators(5));
  auto const a = coset_action(S5, stabilizer(S5, 1));
  CHECK(a.image.degree() == 5);
  CHECK(a.faithful);
  CHECK(a.image.order() == 120);
  CHECK(is_transitive(a.image));
  for (std::size_t i = 0; i < a.representatives.size(); ++i) {
    // representatives[i] maps coset 1 to coset i + 1.
    CHECK(a.representatives[i].degree() == 5);
  }
  // Unfaithful: S4 on the cosets of V4 x ... (A4 has index 2, kernel A4).
  PermGroup const S4(builders::symmetric_generators(4));
  PermGroup const A4(builders::alternating_generators(4));
  auto const b = coset_action(S4, A4);
  CHECK(b.image.degree() == 2);
  CHECK_FALSE(b.faithful);
  CHECK_THROWS_AS(coset_action(A4, S4), InvalidArgument);
}

TEST_CASE("quotient_is_cyclic") {
  PermGroup const S5(builders::symmetric_generators(5));
  PermGroup const A5(builders::alternating_generators(5));
  CHECK(quotient_is_cyclic(S5, A5));
  CHECK(quotient_is_cyclic(S5, S5));
  PermGroup const S4(builders::symmetric_generators(4));
  PermGroup const V4({Permutation::from_cycles(4, "(1,2)(3,4)"),
                      Permutation::from_cycles(4, "(1,3)(2,4)")});
  CHECK_FALSE(quotient_is_cyclic(S4, V4));  // S4/V4 = S3
  PermGroup const C4({Permutation::from_cycles(4, "(1,2,3,4)")});
  CHECK(quotient_is_cyclic(C4, PermGroup::trivial(4)));
  CHECK_THROWS_AS(quotient_is_cyclic(S4, PermGroup({Permutation::from_cycles(4, "(1,2)")})),
                  InvalidArgument);
}

TEST_CASE("element enumeration respects the bound") {
  PermGroup const S10(builders::symmetric_generators(10));
  CHECK_THROWS_AS(S10.elements(), BoundExceeded);
  CHECK_THROWS_AS(S10.elements(1000), BoundExceeded);
  CHECK(PermGroup(builders::symmetric_generators(5)).elements(120).size() == 120);
}
