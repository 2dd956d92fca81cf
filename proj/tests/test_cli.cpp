#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "tracecert/serialize.hpp"
#include "tracecert/trace_oracle.hpp"

using namespace tracecert;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tracecert");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build U at n = 1") {
  const Result r = run_cli({"build", "--n", "1", "--object", "U"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["entries"] == nlohmann::json::parse(R"([["15"]])"));
  CHECK(run_cli({"build", "--n", "1", "--object", "U", "--format", "text"}).out == "15\n");
}

TEST_CASE("exported objects re-parse to equal objects") {
  for (const char* object : {"U", "R"}) {
    const Result r = run_cli({"build", "--n", "3", "--object", object});
    REQUIRE(r.code == 0);
    const ExactMatrix m = io::matrix_from_json(nlohmann::json::parse(r.out));
    const ExactMatrix built = std::string(object) == "U" ? build_U(3) : build_R(3);
    CHECK(m == built);
    CHECK(m.row_labels() == built.row_labels());
  }
  const Result y = run_cli({"build", "--n", "3", "--object", "y"});
  const LabeledMonomialVector yv = io::vector_from_json(nlohmann::json::parse(y.out));
  CHECK(yv.entries == build_y(3).entries);
  CHECK(yv.labels == build_y(3).labels);
  const Result z = run_cli({"build", "--n", "4", "--object", "z", "--pair", "2,4"});
  CHECK(io::vector_from_json(nlohmann::json::parse(z.out)).entries == build_z(4, 2, 4).entries);

  const Result o = run_cli({"oracle", "--n", "3"});
  REQUIRE(o.code == 0);
  CHECK(io::polynomial_from_json(nlohmann::json::parse(o.out)) == coefficient_polynomial(3, 6, 2));

  ExactMatrix q = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  q(0, 1) = Rational(-2, 3);
  CHECK(io::matrix_from_json(io::to_json(q)) == q);
}

TEST_CASE("csv export has a header row of column labels") {
  const Result r = run_cli({"build", "--n", "2", "--object", "U", "--format", "csv"});
  REQUIRE(r.code == 0);
  const std::string header = r.out.substr(0, r.out.find('\n'));
  CHECK(header.rfind("label,", 0) == 0);
  CHECK(header.find("\"(1,2)\"") != std::string::npos);
}

TEST_CASE("verification exit codes") {
  CHECK(run_cli({"verify", "identity", "--n", "3"}).code == 0);
  CHECK(run_cli({"verify", "psd-r", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "series"}).code == 0);
  const Result powers = run_cli({"verify", "powers", "--n", "4"});
  CHECK(powers.code == 1);
  const auto j = nlohmann::json::parse(powers.out);
  CHECK(j["status"] == "failed");
  CHECK(j["reports"][0]["witness"]["by_power"][0]["witness"].contains("unclassified"));
  CHECK(run_cli({"golden", "--n", "4"}).code == 0);
  CHECK(run_cli({"accounting", "--n", "3", "--format", "csv"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"verify", "nothing"}).code == 2);
  CHECK(run_cli({"build", "--n", "3", "--object", "U", "--bogus"}).code == 2);
  CHECK(run_cli({"build", "--n", "0", "--object", "U"}).code == 2);
  CHECK(run_cli({"golden", "--n", "5"}).code == 2);
  CHECK(run_cli({"verify", "spectrum", "--n", "1"}).code == 2);
  CHECK(run_cli({"build", "--n", "3", "--object", "z", "--pair", "2,2"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const Result a = run_cli({"verify", "random", "--n", "3", "--samples", "5", "--seed", "9"});
  const Result b = run_cli({"verify", "random", "--n", "3", "--samples", "5", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
