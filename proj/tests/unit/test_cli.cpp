#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ndyn/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ndyn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build prints the Chebyshev-Halley normal form") {
  const Run r = run({"build", "--method", "chebyshev-halley", "--param", "alpha=0.25"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_form"]["n"] == 3);
  REQUIRE(j["normal_form"]["k"] == 1);
  CHECK(std::abs(j["normal_form"]["a"][0][0].get<double>() - 1.5) < 1e-9);
}

TEST_CASE("stability prints the King circle") {
  const Run r = run({"stability", "--method", "king"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["z=1"]["center"][0].get<double>() + 226.0 / 55.0) < 1e-9);
  CHECK(std::abs(j["z=1"]["radius"].get<double>() - 16.0 / 55.0) < 1e-9);
}

TEST_CASE("scheme files") {
  const Run r = run({"build", "--scheme-file", "/nonexistent/scheme.txt"});
  CHECK(r.code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"catalog"}).code == 0);
  CHECK(run({"build", "--method", "nope"}).code == 1);
  CHECK(run({"build", "--method", "king", "--scheme-file", "x"}).code == 1);
  CHECK(run({"build", "--method", "king", "--param", "beta"}).code == 1);
  CHECK(run({"build", "--method", "king", "--c", "1+"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"stability", "--method", "os3"}).code == 2);
  CHECK(run({"analyze", "--method", "os5", "--param", "a=0", "--cycle", "1,-1"}).code == 0);
}
