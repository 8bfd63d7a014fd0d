#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SOFTTOP_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* name) { return std::string(SOFTTOP_DATA) + "/" + name; }

std::string temp_path(const char* name) {
  return (std::string("/tmp/softtop_cli_") + name + "_" + std::to_string(::getpid()));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("validate") {
  auto ok = run("validate " + data("sierpinski_a.txt"));
  CHECK(ok.status == 0);
  CHECK(ok.out == "ground Z=a,b E=e\n{e:{}}\n{e:{a}}\n{e:{a,b}}\n");

  auto bad = run("validate " + data("missing_union.txt"));
  CHECK(bad.status == 1);
  CHECK(bad.out == "invalid: axiom iii witness {e1:{a}; e2:{}}, {e1:{}; e2:{b}}\n");

  auto lit = run("validate " + data("bad_literal.txt"));
  CHECK(lit.status == 2);
  CHECK(lit.out.find("line 3, column 9") != std::string::npos);

  CHECK(run("validate /nonexistent/file").status == 2);
}

TEST_CASE("generate round-trips through validate") {
  auto gen = run("generate " + data("generators.txt"));
  REQUIRE(gen.status == 0);
  const std::string path = temp_path("generated");
  std::ofstream(path) << gen.out;
  auto again = run("validate " + path);
  CHECK(again.status == 0);
  CHECK(again.out == gen.out);
  std::remove(path.c_str());
}

TEST_CASE("meet, join and subspace") {
  auto m = run("op meet " + data("sierpinski_a.txt") + " " + data("sierpinski_b.txt"));
  CHECK(m.status == 0);
  CHECK(m.out == "ground Z=a,b E=e\n{e:{}}\n{e:{a,b}}\n");
  auto j = run("op join " + data("sierpinski_a.txt") + " " + data("sierpinski_b.txt"));
  CHECK(j.out == "ground Z=a,b E=e\n{e:{}}\n{e:{a}}\n{e:{b}}\n{e:{a,b}}\n");
  auto s = run("subspace " + data("chain3.txt") + " --set '{e:{b,c}}'");
  CHECK(s.status == 0);
  CHECK(s.out == "ground Z=a,b,c E=e\ncarrier {e:{b,c}}\n{e:{}}\n{e:{b}}\n{e:{b,c}}\n");
  CHECK(run("op meet " + data("sierpinski_a.txt") + " " + data("chain3.txt")).status == 2);
}

TEST_CASE("check") {
  auto t0 = run("check " + data("indiscrete2.txt") + " --prop t0");
  CHECK(t0.status == 1);
  CHECK(t0.out == "false\n");
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop t0").status == 0);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop connected").status == 0);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop dense --set '{e:{a}}'").status == 0);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop dense --set '{e:{b}}'").status == 1);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop dense").status == 2);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop t1 --set '{e:{b}}'").status == 2);
  CHECK(run("check " + data("sierpinski_a.txt") + " --prop bogus").status == 2);
  CHECK(run("check " + data("chain3.txt") + " --prop compact --set '{e:{c}}'").status == 0);
}

TEST_CASE("maximal") {
  auto a = run("maximal " + data("sierpinski_a.txt") + " --prop connected --method all");
  CHECK(a.status == 0);
  CHECK(a.out == "true\n");
  auto chain = run("maximal " + data("chain3.txt") + " --prop connected --method brute");
  CHECK(chain.status == 1);
  CHECK(chain.out == "false\n");
  CHECK(run("maximal " + data("sierpinski_a.txt") + " --prop compact").status == 1);
  CHECK(run("maximal " + data("sierpinski_a.txt") + " --prop connected --method characterization")
            .status == 2);
}

TEST_CASE("enumerate") {
  auto c = run("enumerate --cells 2 --counts");
  CHECK(c.status == 0);
  CHECK(c.out == "cells=2 topologies=4\n");
  auto list = run("enumerate --cells 2");
  CHECK(list.out ==
        "ground Z=a,b E=e1\n0 [{e1:{}}, {e1:{a,b}}]\n1 [{e1:{}}, {e1:{a}}, {e1:{a,b}}]\n"
        "2 [{e1:{}}, {e1:{b}}, {e1:{a,b}}]\n3 [{e1:{}}, {e1:{a}}, {e1:{b}}, {e1:{a,b}}]\n"
        "cells=2 topologies=4\n");
  CHECK(run("enumerate --cells 5 --counts").status == 3);
  CHECK(run("enumerate --cells 3 --params 2").status == 2);

  const std::string p1 = temp_path("dot1");
  const std::string p2 = temp_path("dot2");
  CHECK(run("enumerate --cells 3 --dot " + p1 + " --threads 1").status == 0);
  CHECK(run("enumerate --cells 3 --dot " + p2 + " --threads 4").status == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1).find("digraph") == 0);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("verify") {
  auto v = run("verify CN1 --bound 3");
  CHECK(v.status == 0);
  CHECK(v.out.find("claim=CN1 bound=3 verdict=PASS witness=-") == 0);
  auto obs = run("verify CN5 --bound 2");
  CHECK(obs.status == 0);
  CHECK(obs.out.find("finding: reading=literal") != std::string::npos);
  CHECK(run("verify NOPE --bound 2").status == 2);
  CHECK(run("verify CN1 --bound 9").status == 3);
  CHECK(run("verify all --bound 3 --threads 1").out == run("verify all --bound 3 --threads 3").out);
}

TEST_CASE("symbolic") {
  auto open = run("symbolic --family fort --anchor '1(e)' --query open --set '{e:FIN{1}}'");
  CHECK(open.status == 1);
  CHECK(open.out == "false\n");
  CHECK(run("symbolic --family fort --anchor '1(e)' --query compact --set '{e:FIN{1}}'").status ==
        0);
  CHECK(run("symbolic --family pp --anchor '0(e1)' --query dense --set '{e1:FIN{0}; e2:COF{}}'")
            .status == 0);
  CHECK(run("symbolic --family ep --anchor '0(e1)' --query connected_space").status == 0);
  auto cert = run("symbolic --family fort --anchor '1(e)' --query maximal");
  CHECK(cert.status == 0);
  CHECK(cert.out.find("family=fort anchor=1(e) property=compact maximal=true") == 0);
  auto pp = run("symbolic --family pp --anchor '0(e1)' --params e1,e2 --query maximal");
  CHECK(pp.status == 0);
  CHECK(pp.out.find("shapes: 10 non-open: ") != std::string::npos);
  CHECK(run("symbolic --family fort --anchor '1(e)' --query open --set '{e:FIN{1'").status == 2);
  CHECK(run("symbolic --family fort --anchor '1(e)' --query open").status == 2);
  CHECK(run("symbolic --family fort --anchor 'x(e)' --query open --set '{}'").status == 2);
}
