#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <ovalsig/ovalsig.hpp>

namespace {

struct RunResult {
  int status;
  std::string out;
};

// Run the installed CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(OVALSIG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli: invariants") {
  RunResult r = run_cli("invariants \"J 1-<2-> 2+\" --p 7 --b 2");
  CHECK(r.status == 0);
  CHECK(r.out == "sig = -10, eta = 1\n");

  RunResult j = run_cli("invariants \"J 1-<2-> 2+\" --p 7 --b 2 --json");
  CHECK(j.status == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("scheme") == "J 1-<2-> 2+");
  CHECK(parsed.at("p") == 7);
  CHECK(parsed.at("b") == 2);
  CHECK(parsed.at("sig") == -10);
  CHECK(parsed.at("eta") == 1);
}

TEST_CASE("cli: profile text and json") {
  RunResult r = run_cli("profile \"J 1-<2-> 2+\"");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 25);
  CHECK(r.out.rfind("(0/1, 1/14) --> (-1, 0)\n", 0) == 0);
  CHECK(r.out.find("3/10 --> (-9)\n") != std::string::npos);
  CHECK(r.out.find("(3/7, 1/2) --> (-5, 0)\n") != std::string::npos);

  RunResult j = run_cli("profile \"J 1-<2-> 2+\" --json");
  CHECK(j.status == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("nul") == 0);
  CHECK(parsed.at("entries").size() == 25);
  CHECK(parsed.at("entries")[0].at("type") == "interval");
  CHECK(parsed.at("entries")[0].at("lo") == "0");
  CHECK(parsed.at("entries")[0].at("hi") == "1/14");
  CHECK(parsed.at("entries")[0].at("sig") == -1);
  CHECK(parsed.at("entries")[1].at("type") == "point");
  CHECK(parsed.at("entries")[1].at("x") == "1/14");
  CHECK_FALSE(parsed.at("entries")[1].contains("eta"));
  CHECK(parsed.at("entries")[5].at("x") == "1/7");
  CHECK(parsed.at("entries")[5].at("eta") == 1);
}

TEST_CASE("cli: check") {
  RunResult r = run_cli("check \"J 1-<12- 15+>\" --degree 9");
  CHECK(r.status == 0);
  CHECK(r.out.find("arithmetic restriction: pass\n") != std::string::npos);
  CHECK(r.out.find("verdict: prohibited\n") != std::string::npos);
  CHECK(r.out.find("witness: p=3 b=1 sig=6 eta=26 (|sig|+eta = 32 > 28)\n") !=
        std::string::npos);

  RunResult j = run_cli("check \"J 1-<12- 15+>\" --degree 9 --json");
  CHECK(j.status == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("m") == 9);
  CHECK(parsed.at("bound") == 28);
  CHECK(parsed.at("rm_pass") == true);
  CHECK(parsed.at("verdict") == "prohibited");
  CHECK(parsed.at("witness").at("p") == 3);
  CHECK(parsed.at("witness").at("sig") == 6);
  CHECK(parsed.at("witness").at("eta") == 26);
  CHECK(parsed.at("scan").is_array());
  CHECK_FALSE(parsed.at("scan").empty());

  RunResult pm = run_cli("check \"J\" --degree 2 --json");
  CHECK(pm.status == 0);
  CHECK(nlohmann::json::parse(pm.out).at("verdict") == "parity_mismatch");
}

TEST_CASE("cli: family") {
  RunResult r = run_cli("family odd_nest --k 4");
  CHECK(r.status == 0);
  CHECK(r.out == "J 1-<12- 15+>\n");

  RunResult c = run_cli("family double_nest --k 5 --check");
  CHECK(c.status == 0);
  CHECK(c.out.rfind("J 1+<1+<24- 19+>>\n", 0) == 0);
  CHECK(c.out.find("degree: 11\n") != std::string::npos);
  CHECK(c.out.find("arithmetic restriction: pass\n") != std::string::npos);
  CHECK(c.out.find(
            "verdict: prohibited (witness p=3 b=1: |11|+42 = 53 > 45)\n") !=
        std::string::npos);

  RunResult bad = run_cli("family double_nest --k 7");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: graph") {
  RunResult r = run_cli("graph \"J\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("vertices: 4\n") != std::string::npos);
  CHECK(r.out.find("s: [0 1 0 0]\n") != std::string::npos);
  CHECK(r.out.find("delta: 0\n") != std::string::npos);
  CHECK(r.out.find("c: [-2 0 1 1]\n") != std::string::npos);
  CHECK(r.out.find("arrows: +@1\n") != std::string::npos);

  RunResult j = run_cli("graph \"J\" --plus --json");
  CHECK(j.status == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("vertices").size() == 5);
  CHECK(parsed.at("c_plus").size() == 5);
  CHECK(parsed.at("c_plus")[4] == 2);

  RunResult dot = run_cli("graph \"J\" --dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("graph plumbing {", 0) == 0);

  RunResult both = run_cli("graph \"J\" --plus --hat");
  CHECK(both.status == 2);
}

TEST_CASE("cli: cg on a generic tree file") {
  const std::filesystem::path file =
      std::filesystem::temp_directory_path() / "ovalsig_cli_cg_test.json";
  {
    std::ofstream out(file);
    out << R"({"weights": [3], "edges": [], "charvec": [1], "p": 3})";
  }
  RunResult r = run_cli("cg --tree " + file.string());
  CHECK(r.status == 0);
  CHECK(r.out == "sigma = 1/3, eta = 0\n");

  // Without a "p" field the prime must come from the command line.
  {
    std::ofstream out(file);
    out << R"({"weights": [3], "edges": [], "charvec": [1]})";
  }
  RunResult noprime = run_cli("cg --tree " + file.string());
  CHECK(noprime.status == 2);
  CHECK(noprime.out.find("no prime given") != std::string::npos);
  RunResult o = run_cli("cg --tree " + file.string() + " --p 3");
  CHECK(o.status == 0);
  CHECK(o.out == "sigma = 1/3, eta = 0\n");
  std::filesystem::remove(file);

  RunResult missing = run_cli("cg --tree /nonexistent/tree.json");
  CHECK(missing.status == 2);
  CHECK(missing.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: linking") {
  RunResult r = run_cli("linking \"J\"");
  CHECK(r.status == 0);

  // Rebuild the expected text from the library and the CLI's matrix format.
  const ovalsig::Mat lk =
      ovalsig::linking_matrix(ovalsig::build_gamma(ovalsig::parse_scheme("J")));
  std::string want;
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    want += "  [";
    for (std::size_t j = 0; j < lk.cols(); ++j) {
      if (j) want += ' ';
      want += ovalsig::rational_str(lk(i, j));
    }
    want += "]\n";
  }
  CHECK(r.out == want);
  CHECK(lk(1, 2) == ovalsig::Rational(1, 2));
}

TEST_CASE("cli: deterministic output") {
  const std::string args = "profile \"J 1-<2-> 2+\" --json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: error exits") {
  CHECK(run_cli("invariants \"J\" --p 4 --b 1").status == 2);
  CHECK(run_cli("invariants \"J(\" --p 3 --b 1").status == 2);
  CHECK(run_cli("invariants \"J\"").status == 2);       // missing --p/--b
  CHECK(run_cli("no_such_command").status == 2);
  RunResult bad = run_cli("invariants \"J\" --p 4 --b 1");
  CHECK(bad.out.find("error:") != std::string::npos);
  CHECK(run_cli("--help").status == 0);
}
