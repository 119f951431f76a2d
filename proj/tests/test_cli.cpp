#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "mdgas/cli.hpp"
#include "mdgas/version.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = mdgas::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("duality example") {
  const auto o = call({"duality", "--n", "3", "--box", "10", "--lambda", "1"});
  REQUIRE(o.code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["schema"] == "mdgas.duality/1");
  CHECK(j["version"] == mdgas::kVersion);
  CHECK(j["params"]["n"] == 3);
  CHECK(j["params"]["seed"] == 0);
  CHECK(j["result"]["max_abs_difference"].get<double>() < 1e-10);
}

TEST_CASE("Yang-Baxter example") {
  const auto o = call({"yb-check", "--n", "3", "--u", "1", "--v", "2", "--lambda", "1"});
  REQUIRE(o.code == 0);
  const auto p = json::parse(o.out)["result"]["probes"][0];
  CHECK(p["unitarity"] == true);
  CHECK(p["yb_defect_nonzero"] == true);
  CHECK(p["N"] == 3);
  CHECK(p["i"] == 1);
  CHECK(p["max_entry_as_string"].is_string());
}

TEST_CASE("attractive coupling is rejected by the Bethe solver") {
  const auto o = call({"bethe-solve", "--n", "2", "--box", "10", "--lambda", "-1"});
  CHECK(o.code == mdgas::cli::kExitInvalid);
  CHECK(o.err.find("attractive") != std::string::npos);
}

TEST_CASE("validation errors exit with 1") {
  CHECK(call({"two-body", "--lambda", "abc"}).code == 1);
  CHECK(call({"duality", "--n", "3", "--box", "10", "--lambda", "1", "--bogus", "2"}).code == 1);
  CHECK(call({"no-such-command"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"yb-check", "--n", "7"}).code == 1);
  CHECK(call({"yb-check", "--n", "3", "--u", "1", "--v", "-1"}).code == 1);
  CHECK(call({"yb-check", "--n", "3", "--lambda", "1/0"}).code == 1);
  CHECK(call({"reg-integral", "--lambda", "-1", "--eps", "0"}).code == 1);
  CHECK(call({"reg-bound-state", "--lambda", "1"}).code == 1);
  CHECK(call({"gaudin-check", "--n", "9"}).code == 1);
  CHECK(call({"bound-state", "--lambda", "0"}).code == 1);
  CHECK(call({"vertex-scan", "--k", "1,2,3"}).code == 1);
  CHECK(call({"gs-scan", "--lambda", "1", "--sizes", "8,4"}).code == 1);
  CHECK(call({"duality", "--n", "3", "--box", "10", "--lambda", "1", "--format", "xml"}).code == 1);
}

TEST_CASE("help exits cleanly") {
  const auto o = call({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("duality") != std::string::npos);
}

TEST_CASE("identical configuration gives byte-identical output") {
  const std::vector<std::string> args{"gaudin-check", "--n", "3", "--draws", "5", "--seed", "9"};
  const auto a = call(args), b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = call({"gaudin-check", "--n", "3", "--draws", "5", "--seed", "10"});
  CHECK(c.out != a.out);
  const auto y1 = call({"yb-check", "--n", "3", "--draws", "3", "--seed", "4"});
  CHECK(y1.code == 0);
  CHECK(y1.out == call({"--seed", "4", "yb-check", "--n", "3", "--draws", "3"}).out);
}

TEST_CASE("CSV projections have fixed headers") {
  const auto v = call({"vertex-scan", "--format", "csv"});
  REQUIRE(v.code == 0);
  CHECK(v.out.rfind("mc,v_exact,v_leading,rel_error\n", 0) == 0);
  const auto g = call({"gs-scan", "--lambda", "1", "--format", "csv"});
  CHECK(g.out.rfind("n,box_length,energy_density,free_energy_density\n", 0) == 0);
  const auto r = call({"reg-integral", "--lambda", "-1", "--format", "csv"});
  CHECK(r.out.rfind("epsilon,integral,closed_form,abs_difference\n", 0) == 0);
  const auto b = call({"bound-state", "--lambda", "-0.5", "--format", "csv"});
  CHECK(b.out.rfind("exists,energy,k.re,k.im,decay_length\n", 0) == 0);
}

TEST_CASE("output file is written whole") {
  const auto path = std::filesystem::temp_directory_path() / "mdgas_cli_test.json";
  std::filesystem::remove(path);
  const auto o = call({"coleman", "--g", "2", "--c", "1.5", "--output", path.string()});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(path);
  const auto j = json::parse(f);
  CHECK(j["schema"] == "mdgas.coleman/1");
  CHECK(j["result"]["rows"][0]["abs_error"].get<double>() < 1e-12);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("every subcommand runs with its defaults") {
  const std::vector<std::vector<std::string>> runs{
      {"two-body", "--lambda", "-1", "--parity", "bound"},
      {"bound-state", "--lambda", "2"},
      {"bethe-solve", "--n", "4", "--box", "10", "--lambda", "0.5"},
      {"ll-solve", "--n", "4", "--box", "10", "--c", "2"},
      {"gaudin-check", "--draws", "3"},
      {"gs-scan", "--lambda", "1"},
      {"delta-control", "--n", "3"},
      {"dispersion-scan"},
      {"coupling-maps", "--g", "1"},
      {"coleman", "--draws", "4"},
      {"reg-integral", "--lambda", "-0.5"},
      {"reg-bound-state", "--lambda", "-0.5"}};
  for (const auto& args : runs) {
    const auto o = call(args);
    CHECK_MESSAGE(o.code == 0, args[0]);
    CHECK(json::parse(o.out)["schema"] == "mdgas." + args[0] + "/1");
  }
  const auto b = json::parse(call({"bound-state", "--lambda", "2"}).out);
  CHECK(b["result"]["exists"] == false);
  const auto r = json::parse(call({"reg-bound-state", "--lambda", "-0.5"}).out);
  CHECK(r["result"]["relative_difference"].get<double>() < 1e-8);
}
