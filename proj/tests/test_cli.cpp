#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "tlb/invariants.hpp"

using namespace tlb;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(TLB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("invariant subcommand", "[cli]") {
  auto r = run("invariant --kind vb --n 1 --braid \"\"");
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "1");

  InvariantSpec pb;
  r = run("invariant --kind pb --n 2 --braid \"r1 s1 r1 s1^-1\"");
  CHECK(r.code == 0);
  CHECK(parse_scalar(trimmed(r.out)) == evaluate(parse_braid("r1 s1 r1 s1^-1", 2, 1), pb));
}

TEST_CASE("JSON output round-trips", "[cli]") {
  InvariantSpec xb;
  xb.kind = InvariantKind::XB;
  xb.d = 2;
  xb.S = {0, 1};
  auto r = run("invariant --kind xb --d 2 --S 0,1 --n 2 --braid \"s1 t1^1 r1 s1\" --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["invariant"] == "xb");
  CHECK(parse_scalar(j["value"].get<std::string>()) == evaluate(parse_braid("s1 t1^1 r1 s1", 2, 2), xb));

  r = run("solve --d 2 --output json");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["solutions"].size() == 24);
  for (const auto& s : j["solutions"]) {
    CHECK(s["certified"] == true);
    Scalar z = parse_scalar(s["z"].get<std::string>());
    CHECK(parse_scalar(z.str()) == z);
    CHECK(s["x"].size() == 2);
  }
}

TEST_CASE("trace subcommand", "[cli]") {
  auto r = run("trace --n 2 --word s1");
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "z");
  r = run("trace --n 2 --word \"s1 r1\" --z \"-1/u\" --y \"v\"");
  CHECK(r.code == 0);
  CHECK(parse_scalar(trimmed(r.out)) == Scalar(-1) / Scalar::var(kU) * Scalar::var(kV));
}

TEST_CASE("verify subcommand", "[cli]") {
  auto r = run("verify --suite tracetlb --d 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run("verify --suite appendixB --d 2 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 4);
}

TEST_CASE("identical runs give identical reports", "[cli]") {
  auto a = run("verify --suite skein --seed 7");
  auto b = run("verify --suite skein --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run("").code == 2);
  CHECK(run("invariant --kind qq --braid s1 --n 2").code == 2);
  CHECK(run("invariant --kind pb --braid \"s5\" --n 2").code == 2);
  CHECK(run("invariant --kind rhob --d 2 --S 1 --braid s1 --n 2").code == 2);
  CHECK(run("verify --suite nosuch").code == 2);
  CHECK(run("solve --d 2 --profile \"sup1=1\"").code == 2);
  CHECK(run("trace --n 2 --word s1 --z \"u +\"").code == 2);
  auto r = run("invariant --kind pb --braid \"s5\" --n 2");
  CHECK(r.out.empty());
}

TEST_CASE("help exits with 0", "[cli]") {
  CHECK(run("--help").code == 0);
}
