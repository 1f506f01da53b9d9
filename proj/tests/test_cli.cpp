#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// run the installed binary through the shell, capturing exit code and streams
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string base = "/tmp/lempert_cli_test_" + std::to_string(++counter);
  const std::string cmd =
      env_prefix + std::string(LEMPERT_CLI_PATH) + " " + args + " >" + base + ".out 2>" + base +
      ".err";
  const int status = std::system(cmd.c_str());

  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

json parse_report(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("verify subcommand on the royal pair") {
  const auto r = run_cli("verify --geodesic royal --inverse phi --grid 64");
  REQUIRE(r.code == 0);
  const json doc = parse_report(r.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("command") == "verify");
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("reports").at(0).at("metrics").at("max_residual").get<double>() < 1e-12);
}

TEST_CASE("top-level keys come in a fixed order") {
  const auto r = run_cli("verify --geodesic royal --inverse phi");
  REQUIRE(r.code == 0);
  const auto pos = [&](const char* key) { return r.out.find(std::string("\"") + key + "\""); };
  CHECK(pos("schema") < pos("command"));
  CHECK(pos("command") < pos("config"));
  CHECK(pos("config") < pos("reports"));
  CHECK(pos("reports") < pos("pass"));
  CHECK(pos("pass") < pos("timestamp"));
}

TEST_CASE("reports are identical across runs up to the timestamp") {
  const std::string args = "verify --geodesic royal --inverse phi --fiber --range";
  json a = parse_report(run_cli(args).out);
  json b = parse_report(run_cli(args).out);
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("lempertize rebuilds the affine inverse from the family field") {
  const auto r =
      run_cli("lempertize --geodesic diagonal --from-inverse family:t=0.5,h=const:0.3 "
              "--samples 1000");
  REQUIRE(r.code == 0);
  const json doc = parse_report(r.out);
  CHECK(doc.at("pass") == true);

  const auto m = run_cli(
      "lempertize --geodesic diagonal --from-inverse family:t=0.5,h=const:0.3 "
      "--samples 500 --match affine:t=0.5");
  CHECK(m.code == 0);
}

TEST_CASE("probe finds the closed-form path limit") {
  const auto r = run_cli("probe --inverse psi:omega=0 --path linear-g2:c=0.5 --len 12");
  REQUIRE(r.code == 0);
  const json doc = parse_report(r.out);
  CHECK(doc.at("reports").at(0).at("metrics").at("limit_abs").get<double>() < 1e-12);

  CHECK(run_cli("probe --inverse psi:omega=0 --path linear-g2:c=0.5 --expect-limit 0").code ==
        0);
  CHECK(run_cli("probe --inverse psi:omega=0 --path linear-g2:c=0.5 --expect-limit 0.5")
            .code == 1);
}

TEST_CASE("distance between explicit points") {
  const auto r = run_cli("distance --domain g2 --from 0,0,0,0 --to 1,0,0.25,0");
  REQUIRE(r.code == 0);
  const json metrics = parse_report(r.out).at("reports").at(0).at("metrics");
  CHECK(std::abs(metrics.at("c_star").get<double>() - 0.5) < 1e-9);
  CHECK(std::abs(metrics.at("l_star").get<double>() - 0.5) < 1e-9);

  CHECK(run_cli("distance --domain ball --pairs 50").code == 0);
  CHECK(run_cli("distance --domain g2 --from 3,0,0,0 --to 0,0,0,0").code == 2);
  CHECK(run_cli("distance --domain g2 --from 0,0 --to 1,0.25").code == 2);
}

TEST_CASE("sample emits deterministic CSV") {
  const auto r = run_cli("sample --domain disc --count 5 --seed 42");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("domain,re(z1),im(z1),re(z2),im(z2)\n", 0) == 0);

  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);

  const auto again = run_cli("sample --domain disc --count 5 --seed 42");
  CHECK(r.out == again.out);
  CHECK(run_cli("sample --domain g2 --count 3 --seed 9").out !=
        run_cli("sample --domain g2 --count 3 --seed 10").out);
}

TEST_CASE("failing checks exit with code one") {
  CHECK(run_cli("verify --geodesic royal --inverse phi --tol 1e-20").code == 1);
}

TEST_CASE("usage problems exit with code two") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("verify --geodesic royal").code == 2);
  CHECK(run_cli("verify --geodesic royal --inverse nosuch").code == 2);
  CHECK(run_cli("verify --geodesic royal --inverse psi:omega=0,omega=0.1").code == 2);
  CHECK(run_cli("probe --inverse psi:omega=0 --path linear-g2:c=0.99").code == 2);
  CHECK(run_cli("suite --only zzz-no-such-criterion").code == 2);
}

TEST_CASE("numeric failures exit with code three") {
  CHECK(run_cli("verify --geodesic ball:t=1 --inverse ball-simple --fit").code == 3);
}

TEST_CASE("suite subset runs and prints per-criterion lines") {
  const auto r = run_cli("suite --only fiber --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("A3") != std::string::npos);
  CHECK(r.out.find("A4") != std::string::npos);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("output directory override") {
  const std::string dir = "/tmp/lempert_out_dir_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto r = run_cli("verify --geodesic royal --inverse phi --out report.json",
                         "LEMPERT_OUT_DIR=" + dir + " ");
  CHECK(r.code == 0);
  const std::string written = slurp(dir + "/report.json");
  CHECK(parse_report(written).at("pass") == true);
  std::filesystem::remove_all(dir);
}
