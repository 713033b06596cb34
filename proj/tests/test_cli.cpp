#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("SCHUBSING_BIN");
  REQUIRE_MESSAGE(b != nullptr, "SCHUBSING_BIN must point at the CLI binary");
  return b;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("avoid: boolean exit codes") {
  auto r = run("avoid 265314 2143 2413");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "avoids\n");
  r = run("avoid 4231 2143 4231");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "contains\n");
}

TEST_CASE("embed lists classical embeddings") {
  const auto r = run("embed 2413 265314");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 2 5 6\n1 3 5 6\n");
  CHECK(run("embed 4231 1234").exit_code == 1);
}

TEST_CASE("locus subcommand") {
  const auto r = run("locus sing 461253");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "142653\n143265\n241365\n");
  CHECK(run("locus gor 461253").out == "143265\n241365\n");
  CHECK(run("locus sing 123456").out.empty());
}

TEST_CASE("numeric invariants") {
  CHECK(run("mult 13254 35142 --no-cache").out == "3\n");
  CHECK(run("mult 21354 52341 --no-cache").out == "5\n");
  CHECK(run("cmtype 123546 461253 --no-cache").out == "1\n");
  CHECK(run("klpoly 2143 4231 --no-cache").out == "1 + q\n");
  const auto betti = run("betti 13254 35142 --no-cache");
  CHECK(betti.out.find("total: 1 5 9 7 2") == 0);
}

TEST_CASE("gb and ideal output") {
  const auto gb = run("gb 13524 35142 --no-cache");
  CHECK(gb.exit_code == 0);
  // Reduced basis in ascending lead order (z11 is the largest variable).
  CHECK(gb.out == "1*z41\n1*z22\n1*z21\n1*z11\n");
  const auto ideal = run("ideal 13254 35142 --no-cache");
  CHECK(ideal.exit_code == 0);
  // Nine generating minors, one per line.
  CHECK(std::count(ideal.out.begin(), ideal.out.end(), '\n') == 9);
}

TEST_CASE("error exit codes: 2 for parse, 3 for precondition") {
  CHECK(run("mult abc 35142").exit_code == 2);
  CHECK(run("nonsense 1 2").exit_code == 2);
  CHECK(run("mult 35142 13254").exit_code == 3);  // x not below w
}

TEST_CASE("zero-indexed input") {
  CHECK(run("mult 02143 24031 --zero-indexed --no-cache").out == "3\n");
  CHECK(run("locus sing 350142 --zero-indexed").out ==
        "031542\n032154\n130254\n");
}

TEST_CASE("json report schema") {
  const auto r = run("report 13254 35142 --no-cache --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"smooth\":false") != std::string::npos);
  CHECK(r.out.find("\"mult\":3") != std::string::npos);
  CHECK(r.out.find("\"gorenstein\":{\"value\":false,\"conjectural\":false}")
        != std::string::npos);
  CHECK(r.out.find("\"kl_poly\":[1,1]") != std::string::npos);
}

TEST_CASE("cache: identical bytes on hit, corrupt lines skipped") {
  char tmpl[] = "/tmp/schubsing-cache-XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  const std::string dir = tmpl;
  const std::string args = "mult 13254 35142 --stable --cache-dir=" + dir;
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  {
    std::ifstream in(dir + "/cache.jsonl");
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);  // second run was a hit, nothing appended
  }
  {
    std::ofstream out(dir + "/cache.jsonl", std::ios::app);
    out << "not json\n";
  }
  CHECK(run(args).out == first.out);
  // --no-cache bypasses without writing.
  CHECK(run(args + " --no-cache").out == first.out);
}

TEST_CASE("repro ids replay the worked examples") {
  for (const char* id :
       {"embedding-s9", "avoidance-265314", "ideal-35142",
        "isomorphism-35142", "singular-locus-461253", "betti-35142",
        "mult-35142"}) {
    const auto r = run(std::string("repro ") + id);
    CHECK_MESSAGE(r.exit_code == 0, id);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CHECK(run("repro no-such-id").exit_code == 2);
  const auto listing = run("repro");
  CHECK(listing.exit_code == 0);
  CHECK(listing.out.find("mult-35142\n") != std::string::npos);
}

TEST_CASE("survey emits json lines") {
  const auto r = run("survey 3 --no-cache");
  CHECK(r.exit_code == 0);
  // S3 has 19 Bruhat-comparable pairs (interval sizes 1+2+2+4+4+6).
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);
  CHECK(r.out.find("\"smooth\":true") != std::string::npos);
}
