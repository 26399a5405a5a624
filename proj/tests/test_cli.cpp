#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("aode_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  os << text;
}

// args is a shell fragment; values with spaces or quotes must already be
// double-quoted. Equations contain apostrophes, so double quotes only.
RunResult run_shell(const std::string& cmdline) {
  fs::path so = scratch_dir() / "stdout.txt";
  fs::path se = scratch_dir() / "stderr.txt";
  std::string cmd = cmdline + " >" + so.string() + " 2>" + se.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(so);
  r.err = slurp(se);
  return r;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(AODE_CLI_PATH) + " " + args);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints the classical recursion") {
  auto r = run_cli("solve --equation \"y^(1) - y\" --initial \"1, 1\" --order 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "status: unique"));
  CHECK(contains(r.out, "c_0 = 1"));
  CHECK(contains(r.out, "c_1 = 1"));
  CHECK(contains(r.out, "c_2 = 1"));
  CHECK(contains(r.out, "c_3 = 1"));
  CHECK(contains(r.out, "x^3 coefficient 1/6"));
}

TEST_CASE("solve reports non-extendable tuples with exit 2") {
  auto r = run_cli(
      "solve --equation \"1/2*(y'+y)^2 + x^2\" --initial \"0,0\"");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "status: empty"));
  CHECK(contains(r.out, "cannot be extended"));
}

TEST_CASE("parametrized family over a declared parameter") {
  auto r = run_cli(
      "solve --equation \"x*y' + y^2 - y - x^2\" --field param --params c_1 "
      "--initial \"(0, c_1)\" --order 6");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "field: param(c_1)"));
  CHECK(contains(r.out, "status: unique"));
  CHECK(contains(r.out, "-2*c_1^2 + 2"));
}

TEST_CASE("vanishing order global and local") {
  auto g = run_cli("vanishing-order --equation \"x*y' + y^2 - y - x^2\"");
  CHECK(g.code == 0);
  CHECK(contains(g.out, "global vanishing order: 1"));
  CHECK(contains(g.out, "bound: 1 (degree cap)"));

  auto inf = run_cli(
      "vanishing-order --equation \"x*y*y'' - y*y' + x*y'^2\" --bound 4");
  CHECK(inf.code == 0);
  CHECK(contains(inf.out, "not found up to 4"));

  auto diverge = run_cli(
      "vanishing-order --equation \"x*y*y'' - y*y' + x*y'^2\"");
  CHECK(diverge.code == 0);
  CHECK(contains(diverge.err, "warning"));
  CHECK(contains(diverge.err, "inconclusive"));

  auto loc = run_cli(
      "vanishing-order --equation \"x*y'' - 3*y' + x^2*y^2\" "
      "--initial \"1,0,0,2\"");
  CHECK(loc.code == 0);
  CHECK(contains(loc.out, "vanishing order at the tuple: 1"));
}

TEST_CASE("inspect prints derived objects exactly") {
  const std::string eq = "--equation \"x*y' + y^2 - y - x^2\"";
  CHECK(run_cli("inspect jet-ideal " + eq + " --level 0").out ==
        "c_0^2 - c_0\n");
  CHECK(run_cli("inspect separant " + eq).out == "x\n");
  CHECK(run_cli("inspect separant " + eq + " --level 1").out ==
        "2*y + t - 1\n");
  CHECK(run_cli("inspect separant-matrix " + eq + " --level 1").out ==
        "[x, 2*y - 1]\n[0, 1]\n");
  CHECK(run_cli("inspect derivative --equation \"y' - y\" --level 1").out ==
        "-y' + y''\n");
}

TEST_CASE("json output round-trips through verify") {
  fs::path rec = scratch_dir() / "branch.json";
  auto s = run_cli(
      "solve --equation \"y'^2 + y' - 2*y - x\" "
      "--initial \"(-1/8, -1/2, 0, c_3)\" --order 4 --json --out " +
      rec.string());
  REQUIRE(s.code == 0);
  auto v = run_cli("verify " + rec.string());
  CHECK(v.code == 0);
  CHECK(contains(v.out, "verified"));

  // piped form
  auto piped = run_shell(std::string(AODE_CLI_PATH) +
                         " solve --equation \"x*y'' - 3*y' + x^2*y^2\" "
                         "--initial \"1,0,0,2,24\" --order 10 --json | " +
                         AODE_CLI_PATH + " verify");
  CHECK(piped.code == 0);

  // a Gaussian record with a pinned free coefficient
  fs::path grec = scratch_dir() / "gauss.json";
  auto gs = run_cli(
      "solve --equation \"x*(y''-1)^2 + (y-x)*(y'-1)\" --field gaussian "
      "--initial \"0,0,1-i,3*(1+i)/4,(-3+4*i)/8,(-2-9*i)/64,c_6\" "
      "--order 6 --json --out " +
      grec.string());
  REQUIRE(gs.code == 0);
  CHECK(contains(slurp(grec), "141/160"));
  CHECK(run_cli("verify " + grec.string()).code == 0);
}

TEST_CASE("verify flags corruption and rejects unusable records") {
  fs::path rec = scratch_dir() / "good.json";
  REQUIRE(run_cli("solve --equation \"y' - y\" --initial \"1,1\" --order 5 "
                  "--json --out " +
                  rec.string())
              .code == 0);
  std::string text = slurp(rec);
  std::string broken = text;
  auto pos = broken.rfind("\"c_value\": \"1\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 14, "\"c_value\": \"2\"");
  fs::path bad = scratch_dir() / "bad.json";
  spit(bad, broken);
  CHECK(run_cli("verify " + bad.string()).code == 2);

  fs::path empty = scratch_dir() / "empty.json";
  run_cli("solve --equation \"1/2*(y'+y)^2 + x^2\" --initial \"0,0\" "
          "--json --out " +
          empty.string());
  auto e = run_cli("verify " + empty.string());
  CHECK(e.code == 1);
  CHECK(contains(e.err, "nonempty"));

  fs::path garbage = scratch_dir() / "garbage.json";
  spit(garbage, "this is not json");
  CHECK(run_cli("verify " + garbage.string()).code == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string args =
      "solve --equation \"x*y'' - 3*y' + x^2*y^2\" --field param "
      "--params c_0 --initial \"c_0,0,0,2*c_0^2\" --order 10 --json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto t1 = run_cli("vanishing-order --equation \"x*y' + y^2 - y - x^2\"");
  auto t2 = run_cli("vanishing-order --equation \"x*y' + y^2 - y - x^2\"");
  CHECK(t1.out == t2.out);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("solve --equation \"y' - y\"").code == 1);
  CHECK(run_cli("solve --equation \"y' - y\" --initial \"1,1,1,1\" --order 1")
            .code == 1);
  CHECK(run_cli("solve --equation \"y' - y\" --field septic --initial \"1,1\"")
            .code == 1);
  CHECK(run_cli("solve --equation \"2x\" --initial \"1,1\"").code == 1);
  CHECK(run_cli("inspect nonsense --equation \"y' - y\"").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  auto syn = run_cli("solve --equation \"x*+y\" --initial \"0,0\"");
  CHECK(syn.code == 1);
  CHECK(contains(syn.err, "error[syntax]"));
}
