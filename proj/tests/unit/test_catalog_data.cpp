#include <doctest.h>

#include <map>

#include "quandlekit/catalog.hpp"

using namespace quandlekit;

TEST_CASE("bundled catalogs parse and verify") {
  auto const prim = load_catalog(QUANDLEKIT_DATA_DIR "/catalogs/primitive.cat");
  auto const qp = load_catalog(QUANDLEKIT_DATA_DIR "/catalogs/quasiprimitive.cat");
  std::map<std::size_t, int> per_degree;
  for (auto const& r : prim) {
    CHECK(r.has_flag("primitive"));
    CHECK(r.label.find('@') != std::string::npos);
    per_degree[r.degree]++;
  }
  // Non-affine primitive groups per degree (degree 4 holds A4 and S4).
  std::map<std::size_t, int> const expected{{4, 2},   {10, 9},  {12, 6},
                                            {15, 6},  {21, 9},  {28, 14},
                                            {36, 22}, {40, 8},  {45, 9},
                                            {63, 1}};
  CHECK(per_degree == expected);
  for (auto const& r : qp) {
    CHECK(r.has_flag("quasiprimitive"));
  }
  CHECK(qp.size() == 33);
}

TEST_CASE("bundled catalog records satisfy their flags") {
  for (auto const* name : {"/catalogs/primitive.cat", "/catalogs/quasiprimitive.cat"}) {
    for (auto const& r : load_catalog(std::string(QUANDLEKIT_DATA_DIR) + name)) {
      CAPTURE(r.label);
      CHECK_NOTHROW(verify_record(r));
    }
  }
}
