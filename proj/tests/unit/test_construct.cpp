#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandlekit/builders.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/oracle.hpp"

using namespace quandlekit;

namespace {

std::vector<Quandle> connected_small() {
  std::vector<Quandle> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& q : brute_force_enumerate(n)) {
      if (is_connected(q)) {
        out.push_back(q);
      }
    }
  }
  return out;
}

Matrix random_matrix(std::uint32_t p, std::size_t k, std::mt19937& rng) {
  Matrix m(k, std::vector<std::uint32_t>(k));
  for (auto& row : m) {
    for (auto& x : row) {
      x = rng() % p;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("pe then pq recovers the quandle") {
  for (auto const& q : connected_small()) {
    for (Point e = 1; e <= q.order(); ++e) {
      auto const env = pe(q, e);
      CHECK(env.class_generates);
      CHECK(env.group == inner_group(q));
      CHECK(env.rho == q.right_translation(e));
      auto const r = pq(env);
      CHECK(are_isomorphic(q, r).has_value());
      CHECK(coset_quandle(env).order() == q.order());
      CHECK(are_isomorphic(q, coset_quandle(env)).has_value());
    }
  }
}

TEST_CASE("pq after pe is exact") {
  // R_(a(e)) = a R_e a⁻¹ for a in Inn, whichever transversal is used.
  for (auto const& q : connected_small()) {
    for (Point e = 1; e <= q.order(); ++e) {
      CHECK(pq(pe(q, e)) == q);
    }
  }
}

TEST_CASE("pe rejects disconnected quandles") {
  CHECK_THROWS_AS(pe(trivial_quandle(3), 1), InvalidArgument);
  CHECK_THROWS_AS(pe(dihedral_quandle(4), 1), InvalidArgument);
}

TEST_CASE("make_envelope preconditions") {
  PermGroup const s3({Permutation::from_cycles(3, "(1,2,3)"),
                      Permutation::from_cycles(3, "(1,2)")});
  auto const env = make_envelope(s3, 3, Permutation::from_cycles(3, "(1,2)"));
  CHECK(env.class_generates);
  CHECK(are_isomorphic(pq(env), dihedral_quandle(3)).has_value());

  // A folder: the regular Z3 has trivial point stabilizers.
  PermGroup const z3({Permutation::from_cycles(3, "(1,2,3)")});
  auto const folder = make_envelope(z3, 1, Permutation::from_cycles(3, "()"));
  CHECK_FALSE(folder.class_generates);
  CHECK_THROWS_AS(pq(folder), InvalidArgument);

  PermGroup const intrans({Permutation::from_cycles(3, "(1,2)")});
  CHECK_THROWS_AS(make_envelope(intrans, 3, Permutation::from_cycles(3, "(1,2)")),
                  InvalidArgument);
  // Moves the base point.
  CHECK_THROWS_AS(make_envelope(s3, 1, Permutation::from_cycles(3, "(1,2)")),
                  InvalidArgument);
  // Not in G.
  CHECK_THROWS_AS(make_envelope(z3, 3, Permutation::from_cycles(3, "(1,2)")),
                  InvalidArgument);
  // In G_e but not central there: S4 with e = 4, rho = (1,2).
  PermGroup const s4({Permutation::from_cycles(4, "(1,2,3,4)"),
                      Permutation::from_cycles(4, "(1,2)")});
  CHECK_THROWS_AS(make_envelope(s4, 4, Permutation::from_cycles(4, "(1,2)")),
                  InvalidArgument);
}

TEST_CASE("conjugation quandles agree with the oracle") {
  std::vector<PermGroup> groups{
      PermGroup(builders::symmetric_generators(4)),
      PermGroup(builders::alternating_generators(5)),
      PermGroup(builders::psl2(7).generators),
      PermGroup({Permutation::from_cycles(6, "(1,2,3,4,5,6)"),
                 Permutation::from_cycles(6, "(1,6)(2,5)(3,4)")}),
  };
  for (auto const& G : groups) {
    auto const elems = G.elements();
    std::set<oracle::Perm> oset;
    for (auto const& g : elems) {
      oset.insert(oracle::from_lib(g));
    }
    for (auto const& g : conjugacy_class_representatives(G)) {
      if (g.is_identity()) {
        continue;
      }
      auto const cq = conj_quandle(G, g);
      auto const [table, members] = oracle::conjugation(oset, oracle::from_lib(g));
      REQUIRE(cq.elements.size() == members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        CHECK(oracle::from_lib(cq.elements[i]) == members[i]);
      }
      CHECK(oracle::table_of(cq.quandle) == table);
    }
  }
}

TEST_CASE("right translations land in the conjugation quandle of Inn") {
  // x -> R_x is a homomorphism Q -> Conj(Inn(Q)).
  for (auto const& q : connected_small()) {
    for (Point x = 1; x <= q.order(); ++x) {
      for (Point y = 1; y <= q.order(); ++y) {
        CHECK(q.right_translation(q(x, y)) ==
              conjugate(q.right_translation(x), q.right_translation(y)));
      }
    }
  }
}

TEST_CASE("affine quandles agree with the oracle") {
  std::mt19937 rng(3);
  std::vector<std::pair<std::uint32_t, std::size_t>> const shapes{
      {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {2, 4}, {7, 1}};
  int built = 0;
  for (auto [p, k] : shapes) {
    for (int t = 0; t < 40; ++t) {
      auto const psi = random_matrix(p, k, rng);
      try {
        auto const q = affine_quandle(p, k, psi);
        CHECK(oracle::table_of(q) == oracle::affine(p, k, psi));
        ++built;
      } catch (InvalidArgument const&) {
        // psi or psi - 1 singular
      }
    }
  }
  CHECK(built > 50);
  CHECK_THROWS_AS(affine_quandle(4, 1, {{3}}), InvalidArgument);
  CHECK_THROWS_AS(affine_quandle(3, 1, {{1}}), InvalidArgument);
  CHECK_THROWS_AS(affine_quandle(3, 1, {{0}}), InvalidArgument);
  CHECK_THROWS_AS(affine_quandle(3, 2, {{1, 0}}), InvalidArgument);
}

TEST_CASE("irreducibility agrees with listing every subspace") {
  std::mt19937 rng(4);
  std::vector<std::pair<std::uint32_t, std::size_t>> const shapes{
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}};
  for (auto [p, k] : shapes) {
    for (int t = 0; t < 60; ++t) {
      auto const psi = random_matrix(p, k, rng);
      CHECK(is_irreducible(p, k, psi) == oracle::irreducible(p, k, psi));
    }
  }
  CHECK_THROWS_AS(is_irreducible(2, 9, Matrix(9, std::vector<std::uint32_t>(9))),
                  BoundExceeded);
}

TEST_CASE("an affine quandle is simple exactly when psi is irreducible") {
  std::mt19937 rng(6);
  // Orders up to 9, where every partition can be tried.
  std::vector<std::pair<std::uint32_t, std::size_t>> const shapes{
      {2, 2}, {2, 3}, {3, 2}};
  int simple = 0;
  int not_simple = 0;
  for (auto [p, k] : shapes) {
    for (int t = 0; t < 30; ++t) {
      auto const psi = random_matrix(p, k, rng);
      Quandle q = trivial_quandle(1);
      try {
        q = affine_quandle(p, k, psi);
      } catch (InvalidArgument const&) {
        continue;
      }
      bool const s = oracle::simple(oracle::table_of(q));
      CHECK(is_simple(q) == s);
      CHECK(s == oracle::irreducible(p, k, psi));
      (s ? simple : not_simple)++;
    }
  }
  CHECK(simple > 0);
  CHECK(not_simple > 0);
  // Order 16 through the library's congruence search only.
  for (int t = 0; t < 30; ++t) {
    auto const psi = random_matrix(2, 4, rng);
    Quandle q = trivial_quandle(1);
    try {
      q = affine_quandle(2, 4, psi);
    } catch (InvalidArgument const&) {
      continue;
    }
    CHECK(is_simple(q) == oracle::irreducible(2, 4, psi));
  }
}

TEST_CASE("transport conjugates the envelope") {
  auto const q = affine_quandle(2, 2, {{0, 1}, {1, 1}});
  auto const env = pe(q, 1);
  auto const phi = Permutation::from_cycles(4, "(2,3,4)");
  auto const moved = transport(env, phi);
  CHECK(moved.base_point == 1);
  CHECK(moved.rho == conjugate(env.rho, phi));
  CHECK(moved.group.order() == env.group.order());
  CHECK(moved.group.contains(moved.rho));
  CHECK(are_isomorphic(pq(moved), pq(env)).has_value());
  CHECK_THROWS_AS(transport(env, Permutation::from_cycles(4, "(1,2)")),
                  InvalidArgument);
}
