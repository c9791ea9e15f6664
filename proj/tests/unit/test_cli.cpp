#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quandlekit/cli.hpp"
#include "quandlekit/quandle_file.hpp"

using namespace quandlekit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "quandlekit");
  std::vector<char const*> argv;
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  int const code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string const data = QUANDLEKIT_DATA_DIR;
std::string const example = data + "/examples/example4.qnd";
std::string const primitive = data + "/catalogs/primitive.cat";

}  // namespace

TEST_CASE("analyze and validate") {
  auto const a = run({"analyze", example});
  CHECK(a.code == exit_ok);
  CHECK(a.out.find("order=4 inn=12 dis=4 connected=yes") != std::string::npos);
  CHECK(a.out.find("simple=yes primitive=yes") != std::string::npos);
  CHECK(a.out.find("affine=yes") != std::string::npos);
  auto const v = run({"validate", example});
  CHECK(v.code == exit_ok);
  CHECK(v.out == "kind=quandle order=4 valid=yes\n");
  auto const c = run({"validate", primitive});
  CHECK(c.code == exit_ok);
  CHECK(c.out.find("kind=catalog records=86") == 0);
}

TEST_CASE("iso and affine") {
  auto const dir = std::filesystem::temp_directory_path() / "quandlekit_cli_test";
  std::filesystem::create_directories(dir);
  auto const out = (dir / "a.qnd").string();
  auto const r = run({"affine", "--p", "2", "--k", "2", "--psi", "0,1;1,1", "--out", out});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("irreducible=yes") != std::string::npos);
  auto const yes = run({"iso", example, out});
  CHECK(yes.code == exit_ok);
  CHECK(yes.out.find("isomorphic=yes witness=") == 0);
  save_quandle(dihedral_quandle(4), (dir / "d.qnd").string());
  auto const no = run({"iso", example, (dir / "d.qnd").string()});
  CHECK(no.code == exit_negative);
  CHECK(no.out == "isomorphic=no\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumerate and oracle") {
  auto const e = run({"enumerate", "--degree", "10", "--catalog", primitive, "--mode",
                       "primitive"});
  CHECK(e.code == exit_ok);
  CHECK(e.out.find("raw=1 filtered=1") != std::string::npos);
  CHECK(e.out.find("src=S5@10") != std::string::npos);
  auto const o = run({"oracle", "--max-order", "5"});
  CHECK(o.code == exit_ok);
  CHECK(o.out.find("counts=1,1,3,7,22 simple=0,1,1,1,3") != std::string::npos);
}

TEST_CASE("conj") {
  auto const r = run({"conj", "--catalog", primitive, "--group", "S5@10", "--rep",
                      "(1,2)"});
  // The representative must be an element of the group; transpositions of
  // degree 10 are not in S5 acting on pairs.
  CHECK(r.code != exit_ok);
  auto const s = run({"conj", "--catalog", primitive, "--group", "A4@4", "--rep",
                      "(1,2,3)"});
  CHECK(s.code == exit_ok);
  CHECK(s.out.find("order=4") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"enumerate", "--degree", "10", "--catalog", primitive}).code == exit_usage);
  CHECK(run({"enumerate", "--degree", "10", "--catalog", primitive, "--mode", "primitive",
             "--jobs", "0"}).code
        == exit_usage);
  CHECK(run({"enumerate", "--degree", "10", "--catalog", primitive, "--mode", "x"}).code
        == exit_usage);
  CHECK(run({"oracle", "--max-order", "7"}).code == exit_bound);
  CHECK(run({"analyze", "/nonexistent.qnd"}).code == exit_invalid);
  CHECK(run({"affine", "--p", "2", "--k", "1", "--psi", "1"}).code == exit_usage);
  auto const dir = std::filesystem::temp_directory_path() / "quandlekit_cli_bad";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.qnd") << "quandle 2\n2 2\n1 1\n";
  CHECK(run({"validate", (dir / "bad.qnd").string()}).code == exit_invalid);
  std::filesystem::remove_all(dir);
  CHECK(run({"--help"}).code == exit_ok);
}
