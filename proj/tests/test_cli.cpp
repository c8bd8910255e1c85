#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "satake/cli.hpp"
#include "satake/datum_io.hpp"
#include "satake/errors.hpp"
#include "satake/spherical.hpp"
#include "test_support.hpp"

using namespace satake;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SATAKE_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("satake_cli_test_" + name);
}

}  // namespace

TEST_CASE("inverse-satake golden output") {
  Run r = run({"inverse-satake", "--preset", "group:gl2", "--rep", "std", "--truncate", "10"});
  CHECK(r.status == 0);
  CHECK(r.out == golden("inverse_satake_group_gl2_std_10.tsv"));
  CHECK(r.out.find("\n1,2\tq^-1\tq^-3/2\n") != std::string::npos);
  CHECK(run({"inverse-satake", "--preset", "group:gl2", "--truncate", "10"}).out == r.out);
}

TEST_CASE("inverse-satake edge cases") {
  Run zero = run({"inverse-satake", "--preset", "group:gl2", "--truncate", "0"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "lambda\tseries\thecke\n0,0\t1\t1\n");

  Run span = run({"inverse-satake", "--preset", "group:gl2", "--lowest-weight", "-1,1"});
  CHECK(span.status == 3);
  CHECK(span.err.find("RhoInConeSpan") != std::string::npos);

  Run dominant = run({"inverse-satake", "--preset", "group:gl2", "--lowest-weight", "1,0"});
  CHECK(dominant.status == 2);
  CHECK(dominant.err.find("antidominant") != std::string::npos);

  CHECK(run({"inverse-satake", "--preset", "group:gl2", "--truncate", "-3"}).status == 2);
  CHECK(run({"inverse-satake", "--preset", "nope:gl2"}).status == 2);
  CHECK(run({"inverse-satake", "--preset", "group:gl2", "--rep", "adjoint"}).status == 2);
  CHECK(run({"inverse-satake", "--preset", "group:gl2", "--format", "xml"}).status == 2);
  CHECK(run({"inverse-satake"}).status == 2);
  CHECK(run({}).status == 2);

  Run records = run({"inverse-satake", "--preset", "group:gl2", "--truncate", "1", "--format", "records"});
  CHECK(records.out == "{\"lambda\": [0,0], \"series\": \"1\", \"hecke\": \"1\"}\n"
                       "{\"lambda\": [0,1], \"series\": \"1\", \"hecke\": \"q^-1/2\"}\n");
}

TEST_CASE("basic golden output") {
  CHECK(run({"basic", "--preset", "group:gl2", "--truncate", "3"}).out == golden("basic_group_gl2_3.tsv"));
  CHECK(run({"basic", "--preset", "whittaker:gl2", "--truncate", "3"}).out == "lambda\tcoefficient\n0,0\t1\n1,-1\t-1\n");
  CHECK(run({"basic", "--preset", "sp2n_gl2n:2", "--truncate", "3"}).out == golden("basic_sp2n_gl2n_2_3.tsv"));
}

TEST_CASE("macdonald and char") {
  CHECK(run({"macdonald", "--preset", "group:gl2"}).out == "lambda\tcoefficient\n0,0\tq^-1 + 1\n");
  CHECK(run({"macdonald", "--preset", "whittaker:gl2", "--lambda", "0,1"}).out == "lambda\tcoefficient\n0,1\t1\n1,0\t1\n");
  CHECK(run({"macdonald", "--preset", "group:gl2", "--lambda", "0,1,2"}).status == 2);
  CHECK(run({"char", "--preset", "group:gl3", "--rep", "sym2"}).out ==
        "weight\tmultiplicity\n0,0,2\t1\n0,1,1\t1\n0,2,0\t1\n1,0,1\t1\n1,1,0\t1\n2,0,0\t1\n");
  CHECK(run({"char", "--preset", "group:sp4"}).out ==
        "weight\tmultiplicity\n-1,0\t1\n0,-1\t1\n0,0\t1\n0,1\t1\n1,0\t1\n");
}

TEST_CASE("verify suites") {
  for (const char* suite : {"li", "denominator"}) CHECK(run({"verify", "--preset", "group:gl2", "--suite", suite}).status == 0);
  CHECK(run({"verify", "--preset", "group:gl3", "--suite", "denominator"}).out == "suite: denominator\nstatus: pass\nchecked: 1\n");
  CHECK(run({"verify", "--preset", "sp2n_gl2n:2", "--suite", "orthogonality"}).status == 0);
  CHECK(run({"verify", "--preset", "sp2n_gl2n:2", "--suite", "basic-pairing"}).status == 0);
  CHECK(run({"verify", "--preset", "whittaker:gl3", "--suite", "whittaker-schur"}).status == 0);
  CHECK(run({"verify", "--preset", "group:gl3", "--suite", "whittaker-schur"}).status == 2);
  CHECK(run({"verify", "--preset", "sp2n_gl2n:2", "--suite", "li"}).status == 2);
  CHECK(run({"verify", "--preset", "group:gl2", "--suite", "bogus"}).status == 2);
}

TEST_CASE("datum round trip") {
  for (const char* name : {"group:gl2", "whittaker:gl3", "sp2n_gl2n:2", "group:sp4", "group:sl2"}) {
    SphericalDatum d = preset(name);
    std::string text = datum_to_json(d);
    CHECK(datum_from_json(text) == d);
    CHECK(datum_to_json(datum_from_json(text)) == text);
  }
  Run emitted = run({"datum", "--preset", "group:gl2"});
  CHECK(emitted.out == golden("datum_group_gl2.json"));

  auto path = temp_file("datum.json");
  CHECK(run({"datum", "--preset", "sp2n_gl2n:2", "--out", path.string()}).status == 0);
  Run from_file = run({"basic", "--datum-file", path.string(), "--truncate", "3"});
  CHECK(from_file.out == run({"basic", "--preset", "sp2n_gl2n:2", "--truncate", "3"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("datum file errors name the datum") {
  CHECK_ERROR_KIND(datum_from_json("{"), ErrorKind::Parse);
  CHECK_ERROR_KIND(datum_from_json("{\"rank\": 2}"), ErrorKind::Parse);
  std::string bad_theta = R"({"rank": 2, "reflections": [{"root": [1, -1], "coroot": [1, -1]}],
    "theta_plus": [{"theta": [-1, 1], "sigma": 1, "r": "1"}], "rho_px": ["1/2", "-1/2"], "cone": [[1, -1]]})";
  try {
    datum_from_json(bad_theta);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameters);
    CHECK(std::string(e.what()).find("Theta+") != std::string::npos);
  }
  auto path = temp_file("bad.json");
  std::ofstream(path) << bad_theta;
  CHECK(run({"basic", "--datum-file", path.string()}).status == 2);
  std::filesystem::remove(path);
  CHECK(run({"basic", "--datum-file", "/nonexistent/datum.json"}).status == 2);
  CHECK(run({"basic", "--preset", "group:gl2", "--datum-file", "x.json"}).status == 2);
}
