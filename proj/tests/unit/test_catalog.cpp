#include <doctest.h>

#include "quandlekit/catalog.hpp"
#include "quandlekit/errors.hpp"

using namespace quandlekit;

namespace {

std::string const sample = R"(# two groups
group S3@3
degree 3
gen (1,2)
gen (1, 2, 3)
flags quasiprimitive,transitive,primitive
provenance natural action
end

group V4@4
degree 4
gen (1,2)(3,4)
gen (1,3)(2,4)
flags transitive
provenance regular Klein group
end
)";

int error_line(std::string const& text) {
  try {
    parse_catalog(text);
  } catch (ParseError const& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("catalog round trip") {
  auto const records = parse_catalog(sample);
  REQUIRE(records.size() == 2);
  CHECK(records[0].label == "S3@3");
  CHECK(records[0].generators[1] == "(1,2,3)");
  CHECK(records[0].flags ==
        std::vector<std::string>{"transitive", "primitive", "quasiprimitive"});
  CHECK(records[1].has_flag("transitive"));
  CHECK_FALSE(records[1].has_flag("primitive"));
  CHECK(records[0].group().order() == 6);
  auto const text = write_catalog(records);
  CHECK(parse_catalog(text) == records);
  CHECK(write_catalog(parse_catalog(text)) == text);
  CHECK(catalog_digest(records) == catalog_digest(parse_catalog(text)));
  CHECK(catalog_digest(records).size() == 16);
  auto changed = records;
  changed[1].provenance = "x";
  CHECK(catalog_digest(changed) != catalog_digest(records));
  CHECK(find_record(records, "V4@4").degree == 4);
  CHECK_THROWS_AS(find_record(records, "nope"), InvalidArgument);
}

TEST_CASE("catalog parse errors carry line numbers") {
  CHECK(error_line("group A\ndegree 3\ngen (1,4)\nflags transitive\nprovenance x\nend\n") == 3);
  CHECK(error_line("group A\ndegree 3\ngen (1,2)\nflags shiny\nprovenance x\nend\n") == 4);
  CHECK(error_line("group A\ndegree 3\ngen (1,2)\nprovenance x\n") > 0);
  CHECK(error_line("degree 3\n") == 1);
  CHECK(error_line("group A\ndegree x\n") == 2);
  auto const dup = "group A\ndegree 2\ngen (1,2)\nflags transitive\nprovenance x\nend\n"
                   "group A\ndegree 2\ngen (1,2)\nflags transitive\nprovenance y\nend\n";
  CHECK(error_line(dup) == 7);
  CHECK(error_line("group A\ndegree 2\nflags transitive\nprovenance x\nend\n") > 0);
}

TEST_CASE("verify_record checks declared flags") {
  auto records = parse_catalog(sample);
  CHECK_NOTHROW(verify_record(records[0]));
  CHECK_NOTHROW(verify_record(records[1]));
  records[1].flags.push_back("primitive");
  CHECK_THROWS_AS(verify_record(records[1]), VerificationError);
  records[1].flags = {"transitive", "quasiprimitive"};
  CHECK_THROWS_AS(verify_record(records[1]), VerificationError);
  auto intrans = parse_catalog(
      "group B\ndegree 3\ngen (1,2)\nflags transitive\nprovenance x\nend\n");
  CHECK_THROWS_AS(verify_record(intrans[0]), VerificationError);
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.cat"), Error);
}
