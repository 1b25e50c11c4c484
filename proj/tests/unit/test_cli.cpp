#include <sstream>

#include "cli/cli.hpp"
#include "cli/reports.hpp"
#include "doctest.h"
#include "json.hpp"
#include "weldlab/error.hpp"

using namespace weldlab;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(WELDLAB_FIXTURE_DIR) + "/" + name + ".json"; }

ErrorCode usage_code(const std::vector<std::string>& args) {
  try {
    cli::parse_config(args);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CrosscheckFailed;
}

}  // namespace

TEST_CASE("parse_config") {
  const cli::RunConfig c = cli::parse_config({"group", "info", "--n", "3", "--p", "1", "--case", "I"});
  CHECK(c.command == "group info");
  CHECK(c.n == 3);
  CHECK(c.p == 1);
  CHECK(c.pairing == "I");

  // global options are accepted on either side of the subcommand
  CHECK(cli::parse_config({"-o", "a.json", "group", "check", "--n", "3", "--p", "1"}).output == "a.json");
  CHECK(cli::parse_config({"group", "check", "--n", "3", "--p", "1", "-o", "b.json"}).output == "b.json");

  CHECK(usage_code({"surface", "report", "missing.json"}) == ErrorCode::UsageError);
  CHECK(usage_code({"bs", "tiles", "--n", "1", "--p", "4", "--rank", "99"}) == ErrorCode::UsageError);
  CHECK(usage_code({"group", "info", "--n", "3", "--p", "1", "--bogus"}) == ErrorCode::UsageError);
  CHECK(usage_code({"--tol", "1e-2", "group", "info", "--n", "3", "--p", "1"}) == ErrorCode::UsageError);
  CHECK(usage_code({"surface", "report"}) == ErrorCode::UsageError);
  CHECK(usage_code({"corr", "tiling", "--n", "3", "--p", "1", "--len", "9"}) == ErrorCode::UsageError);
}

TEST_CASE("errors are single-line with a nonzero exit") {
  const Result r = invoke({"group", "info", "--n", "1", "--p", "3", "--case", "II"});
  CHECK(r.code != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("InvalidCase") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  const Result u = invoke({"surface", "report", "missing.json"});
  CHECK(u.code == 2);
  CHECK(std::count(u.err.begin(), u.err.end(), '\n') == 1);
}

TEST_CASE("reports") {
  const Result torus = invoke({"surface", "report", fixture_path("torus")});
  REQUIRE(torus.code == 0);
  const json t = json::parse(torus.out);
  CHECK(t["genus"] == 1);
  CHECK(t["schema_version"] == 1);
  CHECK(t["genus_crosscheck"] == true);

  const json g = json::parse(invoke({"surface", "graph", fixture_path("two_squares")}).out);
  CHECK(g["vertices"] == 8);
  CHECK(g["component_count"] == 4);

  const json tiles = json::parse(invoke({"bs", "tiles", "--n", "1", "--p", "4", "--rank", "0"}).out);
  CHECK(tiles["tiles"].size() == 1);
  CHECK(cli::tiles_json({}).dump() == "[]");

  const json newton = json::parse(invoke({"surface", "report", "--newton", "6"}).out);
  CHECK(newton["genus"] == 2);

  const json poly = json::parse(invoke({"mate", "verify-poly"}).out);
  CHECK(poly["polynomials"].size() == 3);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"corr", "tiling", "--n", "3", "--p", "1", "--len", "3"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["overlaps"] == 0);
}
