#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "celltrees/io.hpp"

#ifndef CELLTREE_BIN
#error "CELLTREE_BIN must point at the celltree executable"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CELLTREE_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) { return celltrees::read_text_file(path); }

}  // namespace

TEST_CASE("generate then count trees") {
  RunResult gen = run("generate colorful 2,2,2 --out cli_octa.json");
  REQUIRE(gen.exit_code == 0);

  RunResult trees = run("trees cli_octa.json --dim 2 --ones --json");
  REQUIRE(trees.exit_code == 0);
  CHECK(trees.out.find("\"tau\":\"8\"") != std::string::npos);
  CHECK(trees.out.find("\"tree_count\":8") != std::string::npos);

  RunResult spectrum = run("spectrum cli_octa.json --dim 2 --kind tot --ones --json");
  REQUIRE(spectrum.exit_code == 0);
  CHECK(spectrum.out.find("\"pdet\":\"3072\"") != std::string::npos);

  std::remove("cli_octa.json");
}

TEST_CASE("triangle spectrum printout") {
  REQUIRE(run("generate simplex 3 1 --out cli_k3.json").exit_code == 0);
  RunResult sp = run("spectrum cli_k3.json --dim 0 --kind ud --ones");
  REQUIRE(sp.exit_code == 0);
  CHECK(sp.out.find("L^3 - 6*L^2 + 9*L") != std::string::npos);
  CHECK(sp.out.find("pdet        9") != std::string::npos);
  std::remove("cli_k3.json");
}

TEST_CASE("generated documents are canonical and reload byte-identically") {
  REQUIRE(run("generate cube 2 --out cli_q2.json").exit_code == 0);
  std::string text = slurp("cli_q2.json");
  celltrees::CellComplex cx = celltrees::complex_from_json(text);
  CHECK(celltrees::complex_to_json(cx) + "\n" == text);
  std::remove("cli_q2.json");
}

TEST_CASE("join subcommand") {
  REQUIRE(run("generate simplex 3 1 --out cli_a.json").exit_code == 0);
  REQUIRE(run("generate colorful 2 --out cli_b.json").exit_code == 0);
  RunResult joined = run("generate join cli_a.json cli_b.json --out cli_join.json");
  REQUIRE(joined.exit_code == 0);
  celltrees::CellComplex cx = celltrees::load_complex("cli_join.json");
  CHECK(cx.dim() == 2);
  CHECK(cx.f(2) == 6);
  std::remove("cli_a.json");
  std::remove("cli_b.json");
  std::remove("cli_join.json");
}

TEST_CASE("exit codes") {
  CHECK(run("generate simplex 9").exit_code == 2);        // bad params
  CHECK(run("trees missing.json --dim 1 --ones").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);

  // Weights file missing a variable.
  REQUIRE(run("generate simplex 3 1 --out cli_k3b.json").exit_code == 0);
  std::ofstream("cli_w.json") << R"({"variables": {"v[1]": "1"}})";
  CHECK(run("trees cli_k3b.json --dim 1 --weights cli_w.json").exit_code == 2);
  CHECK(run("trees cli_k3b.json --dim 1 --ones --weights cli_w.json").exit_code == 2);

  // Non-APC input: a disconnected graph document.
  std::ofstream("cli_disc.json") << R"({"cells":[
    {"id":"a","dim":0},{"id":"b","dim":0},{"id":"c","dim":0},
    {"id":"ab","dim":1,"boundary":[["a",-1],["b",1]]}],"name":"disc"})";
  CHECK(run("trees cli_disc.json --dim 1 --ones").exit_code == 3);

  std::remove("cli_k3b.json");
  std::remove("cli_w.json");
  std::remove("cli_disc.json");
}

TEST_CASE("verify runs are reproducible for a fixed seed") {
  RunResult a = run("verify --suite identities --points 2 --report cli_rep_a.json");
  RunResult b = run("verify --suite identities --points 2 --threads 3 --report cli_rep_b.json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);

  std::string ja = slurp("cli_rep_a.json");
  std::string jb = slurp("cli_rep_b.json");
  auto results_part = [](const std::string& s) {
    auto from = s.find("\"results\"");
    auto to = s.rfind(",\"timing\"");
    return s.substr(from, to - from);
  };
  CHECK(results_part(ja) == results_part(jb));
  std::remove("cli_rep_a.json");
  std::remove("cli_rep_b.json");
}
