#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "conicval/cli.hpp"

using namespace conicval;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli analyze reports the distinguished extension for (-1,-1) over Q(t)") {
  const auto j = run_json({"analyze", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1"});
  CHECK(j["verdict"] == "PRESENT");
  CHECK(j["value_group"]["group"] == "Z");
  CHECK(j["residue_field"]["variant"] == "conic");
  CHECK(j["residue_field"]["relation"] == "S^2 = -T^2 - 1");
  CHECK(j["family"].empty());
}

TEST_CASE("cli analyze negative case lists a rational residue family") {
  const auto j = run_json({"analyze", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "t", "--b", "1", "--count", "4"});
  CHECK(j["verdict"] == "ABSENT");
  CHECK(j["value_group"]["group"] == "1/2 Z");
  REQUIRE(j["family"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(j["family"][i]["v_c"] == static_cast<long>(i + 1));
}

TEST_CASE("cli hilbert symbol at the real place") {
  const Run r = run({"hilbert", "--a", "-1", "--b", "-1", "--place", "inf"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "-1\n");
  CHECK(run({"hilbert", "--a", "2", "--b", "3", "--place", "3"}).out == "-1\n");
  CHECK(run({"hilbert", "--a", "1", "--b", "3", "--place", "4"}).code == kExitUsage);
}

TEST_CASE("cli exit codes") {
  SUBCASE("dyadic valuation is a usage error") {
    const Run r = run({"analyze", "--field", "Q", "--val", "Q:p=2", "--a", "3", "--b", "5"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("dyadic") != std::string::npos);
    CHECK(r.out.empty());
  }
  SUBCASE("field and valuation must agree") {
    CHECK(run({"analyze", "--field", "Q", "--val", "Q(t):place=t", "--a", "1", "--b", "1"}).code == kExitUsage);
  }
  SUBCASE("syntax errors carry an offset") {
    const Run r = run({"analyze", "--field", "Q", "--val", "Q:p=5", "--a", "1+", "--b", "1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("offset 2") != std::string::npos);
  }
  SUBCASE("missing options and unknown commands") {
    CHECK(run({"hilbert", "--a", "1"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
  }
  SUBCASE("mathematical errors exit with 1") {
    CHECK(run({"eval", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1", "--f", "0"}).code == kExitMath);
    CHECK(run({"analyze", "--field", "Q", "--val", "Q:p=5", "--a", "0", "--b", "1"}).code == kExitMath);
    CHECK(run({"quat", "split", "--field", "Q(t)", "--a", "t", "--b", "2"}).code == kExitMath);
  }
  SUBCASE("help") { CHECK(run({"--help"}).code == kExitOk); }
}

TEST_CASE("cli eval and gauss") {
  const auto e = run_json({"eval", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1", "--f", "x", "--g", "1"});
  CHECK(e["value"] == "0");
  CHECK_FALSE(e["residue"].is_null());
  const auto h = run_json({"eval", "--val", "Q(t):place=t", "--a", "t", "--b", "1", "--f", "0", "--g", "1/x"});
  CHECK(h["value"] == "1/2");
  CHECK(h["residue"].is_null());

  const auto g = run_json({"gauss", "--val", "Q:p=5", "--pivot", "5*(x-1)", "--eval", "x^2-1"});
  CHECK(g["value"] == "-2");
  const auto g0 = run_json({"gauss", "--val", "Q:p=5", "--pivot", "x", "--eval", "x^2+1"});
  CHECK(g0["value"] == "0");
  CHECK_FALSE(g0["residue"].is_null());
}

TEST_CASE("cli quaternion commands") {
  const auto s = run_json({"quat", "split", "--field", "Q", "--a", "1", "--b", "7"});
  CHECK(s["split"] == true);
  CHECK(s["point"].size() == 3);
  const auto d = run_json({"quat", "split", "--field", "Q", "--a", "-1", "--b", "-1"});
  CHECK(d["split"] == false);
  CHECK(run_json({"quat", "split", "--field", "GF(7)", "--a", "3", "--b", "5"})["split"] == true);

  const auto dec = run_json({"quat", "decide", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1"});
  CHECK(dec["kind"] == "unramified_extension");
  CHECK(dec["witness"]["type"] == "residue_division_algebra");
  const auto fin = run_json({"quat", "decide", "--field", "Q", "--val", "Q:p=3", "--a", "-1", "--b", "-1"});
  CHECK(fin["kind"] == "no_extension_split_residue");

  CHECK(run_json({"quat", "iso", "--a1", "-1", "--b1", "-1", "--a2", "-1", "--b2", "-3"})["isomorphic"] == false);
  CHECK(run_json({"quat", "iso", "--a1", "-1", "--b1", "-1", "--a2", "-2", "--b2", "-5"})["isomorphic"] ==
        run_json({"quat", "iso", "--a1", "-2", "--b1", "-5", "--a2", "-1", "--b2", "-1"})["isomorphic"]);
}

TEST_CASE("cli polyrep agrees with the oracle over small prime fields") {
  const auto j = run_json({"polyrep", "--field", "GF(7)", "--y", "(x^3+1)/(x-2)"});
  CHECK(j["degree"] == 3);
  CHECK(j["oracle_degree"] == 3);
  const auto q = run_json({"polyrep", "--y", "1/(x^2+1)"});
  CHECK(q["degree"] == 2);
  CHECK(q["integral"] == false);
  CHECK(run({"polyrep", "--y", "5"}).code == kExitMath);
}

TEST_CASE("cli verify emits a JSON report") {
  const Run r = run({"verify", "--suite", "hilbert-product", "--samples", "20"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["agreement"] == true);
  CHECK(j["suites"][0]["checks"] == 20);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
}
