#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/oracle.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

bool is_isomorphism(Quandle const& a, Quandle const& b, Permutation const& f) {
  for (Point x = 1; x <= a.order(); ++x) {
    for (Point y = 1; y <= a.order(); ++y) {
      if (f(a(x, y)) != b(f(x), f(y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("isomorphism search on relabelled copies") {
  std::mt19937 rng(5);
  std::vector<Quandle> qs;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto& q : brute_force_enumerate(n)) {
      qs.push_back(q);
    }
  }
  qs.push_back(affine_quandle(3, 2, {{0, 1}, {1, 1}}));
  qs.push_back(affine_quandle(2, 3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
  for (auto const& q : qs) {
    for (int t = 0; t < 3; ++t) {
      auto const f = oracle::to_lib(oracle::random_perm(q.order(), rng));
      auto const r = relabel(q, f);
      auto const g = are_isomorphic(q, r);
      REQUIRE(g.has_value());
      CHECK(is_isomorphism(q, r, *g));
    }
  }
}

TEST_CASE("isomorphism decisions agree with exhaustive search") {
  std::vector<Quandle> qs;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (auto& q : brute_force_enumerate(n)) {
      qs.push_back(q);
    }
  }
  std::mt19937 rng(9);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (qs[i].order() != qs[j].order()) {
        continue;
      }
      // Scramble the second so the identity is rarely a witness.
      auto const f = oracle::random_perm(qs[j].order(), rng);
      auto const b = relabel(qs[j], oracle::to_lib(f));
      auto const expected = oracle::isomorphism(oracle::table_of(qs[i]), oracle::table_of(b));
      auto const got = are_isomorphic(qs[i], b);
      CHECK(got.has_value() == expected.has_value());
      if (got) {
        CHECK(is_isomorphism(qs[i], b, *got));
      }
    }
  }
}

TEST_CASE("identity witness for equal quandles") {
  auto const q = dihedral_quandle(7);
  auto const f = are_isomorphic(q, q);
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(q, q, *f));
  CHECK_FALSE(are_isomorphic(q, dihedral_quandle(5)).has_value());
  CHECK_FALSE(are_isomorphic(dihedral_quandle(4), trivial_quandle(4)).has_value());
}

TEST_CASE("generators close to the whole quandle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& q : brute_force_enumerate(n)) {
      auto const gens = quandle_generators(q);
      std::set<Point> closed(gens.begin(), gens.end());
      bool grew = true;
      while (grew) {
        grew = false;
        for (Point x : std::vector<Point>(closed.begin(), closed.end())) {
          for (Point y : std::vector<Point>(closed.begin(), closed.end())) {
            grew |= closed.insert(q(x, y)).second;
            grew |= closed.insert(q.left_divide(x, y)).second;
          }
        }
      }
      CHECK(closed.size() == n);
    }
  }
}
