// End-to-end contract of the germlab executable: invariant subcommands,
// scenario verification, JSON emission, and the exit-code taxonomy.
#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef GERMLAB_CLI_PATH
#error "GERMLAB_CLI_PATH must point at the built executable"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout and captures both.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GERMLAB_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "cli_contract_" + name + ".json";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("scenarios lists the bundled corpus in sorted order") {
  auto r = run_cli("scenarios");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "a1-cone\n"
        "brieskorn-333\n"
        "cusp-curve\n"
        "icis-sphere-linear\n"
        "two-branch\n"
        "two-branch-sphere\n"
        "whitney-sphere\n"
        "whitney-umbrella\n");
}

TEST_CASE("invariant subcommands print bare values") {
  auto mu = run_cli("milnor --vars x,y \"x^3 + y^2\"");
  CHECK(mu.code == 0);
  CHECK(mu.out == "2\n");

  auto inf = run_cli("milnor --vars x,y,z \"x^2 - y^2*z\"");
  CHECK(inf.code == 0);
  CHECK(inf.out == "infinite\n");

  auto sec = run_cli("sectional --vars x,y,z \"x^2 - y^2*z\"");
  CHECK(sec.code == 0);
  CHECK(sec.out == "2\n");

  auto eu = run_cli("eu --vars x,y,z \"x^2 - y^2*z\"");
  CHECK(eu.code == 0);
  CHECK(eu.out == "1\n");

  auto lg = run_cli("legreuel --vars x,y,z \"x + 2*y + 3*z\" --poly2 \"x^2 - y^2*z\"");
  CHECK(lg.code == 0);
  CHECK(lg.out == "2\n");
}

TEST_CASE("--json wraps an invariant with its name and seed") {
  auto r = run_cli("sectional --vars x,y,z \"x^2 - y^2*z\" --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"name\": \"sectional\"") != std::string::npos);
  CHECK(r.out.find("\"seed\": 42") != std::string::npos);
  CHECK(r.out.find("\"value\": 2") != std::string::npos);

  auto seeded = run_cli("sectional --vars x,y,z \"x^2 - y^2*z\" --seed 1337 --json");
  CHECK(seeded.out.find("\"seed\": 1337") != std::string::npos);
}

TEST_CASE("branches reports parametrisations and the certificate") {
  auto r = run_cli("branches --vars x,y,z \"x^2 - y^2*z\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 branch (exact-cover)") != std::string::npos);
  CHECK(r.out.find("multiplicity 1") != std::string::npos);
  CHECK(r.out.find("(0, 0, t)") != std::string::npos);

  auto two = run_cli("branches --vars x,y,z \"x^2 + y^2*z^2\" --json");
  CHECK(two.code == 0);
  CHECK(two.out.find("\"certificate\": \"exact-cover\"") != std::string::npos);
  CHECK(two.out.find("(0, t, 0)") != std::string::npos);
  CHECK(two.out.find("(0, 0, t)") != std::string::npos);
}

TEST_CASE("verify on a bundled scenario reports every identity") {
  auto r = run_cli("verify whitney-umbrella");
  CHECK(r.code == 0);
  CHECK(r.out.find("morse-count-correction") != std::string::npos);
  CHECK(r.out.find("verified") != std::string::npos);
  CHECK(r.out.find("violated") == std::string::npos);
}

TEST_CASE("verify writes canonical JSON, byte-identical across runs") {
  std::string path1 = "cli_contract_out1.json";
  std::string path2 = "cli_contract_out2.json";
  auto r1 = run_cli("verify whitney-umbrella --json " + path1);
  auto r2 = run_cli("verify whitney-umbrella --json " + path2);
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  std::string a = slurp(path1), b = slurp(path2);
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(a.find("timing") == std::string::npos);
  std::remove(path1.c_str());
  std::remove(path2.c_str());

  auto seeded = run_cli("verify whitney-umbrella --seed 1337 --json " + path1);
  CHECK(seeded.code == 0);
  CHECK(slurp(path1).find("\"seed\": 1337") != std::string::npos);
  std::remove(path1.c_str());
}

TEST_CASE("verify accepts scenario files and applies the exit taxonomy") {
  std::string smooth = write_temp("smooth", R"({
    "name": "smooth-g",
    "variables": ["x", "y", "z"],
    "f": {"kind": "generic-linear"},
    "g": "z",
    "checks": ["morse-count-correction"],
    "seed": 42
  })");
  auto r3 = run_cli("verify " + smooth);
  CHECK(r3.code == 3);
  CHECK(r3.out.find("hypothesis-failed") != std::string::npos);
  std::remove(smooth.c_str());

  std::string bogus = write_temp("bogus", R"({
    "name": "bogus-declared",
    "variables": ["x", "y", "z"],
    "ambient": {"kind": "declared", "d": 3, "strata": [
      {"name": "regular", "dim": 3, "eu": 1, "chi": 2},
      {"name": "origin", "dim": 0, "eu": 5, "contains_origin": true}
    ]},
    "f": {"kind": "generic-linear"},
    "g": "x^2 + y^2 + z^2",
    "checks": ["isolated-baseline"],
    "seed": 42
  })");
  auto r2 = run_cli("verify " + bogus);
  CHECK(r2.code == 2);
  CHECK(r2.out.find("violated") != std::string::npos);
  std::remove(bogus.c_str());

  std::string malformed = write_temp("malformed", "{\"name\": 3}");
  auto r4 = run_cli("verify " + malformed);
  CHECK(r4.code == 4);
  std::remove(malformed.c_str());

  auto missing = run_cli("verify no-such-file.json");
  CHECK(missing.code == 4);
}

TEST_CASE("unsupported input exits 4, bad hypotheses exit 3") {
  CHECK(run_cli("milnor --vars x,y \"x +* y\"").code == 4);      // syntax error
  CHECK(run_cli("milnor --vars x,y \"x + w\"").code == 4);       // unknown variable
  CHECK(run_cli("legreuel --vars x,y \"x\"").code == 4);         // --poly2 required
  CHECK(run_cli("milnor \"x\"").code == 4);                      // --vars required
  CHECK(run_cli("frobnicate").code == 4);                        // unknown subcommand
  CHECK(run_cli("").code == 4);                                  // subcommand required

  // critical locus of dimension two: not a curve germ
  auto r = run_cli("eu --vars x,y,z,w \"x*y\"");
  CHECK(r.code == 3);
  CHECK(r.out.find("NotACurve") != std::string::npos);
}

TEST_CASE("error messages go to stderr with the kind spelled out") {
  auto r = run_cli("milnor --vars x,y \"x +* y\"");
  CHECK(r.out.find("error: SyntaxError") != std::string::npos);
}
