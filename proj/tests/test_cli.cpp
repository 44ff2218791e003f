#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <string>

#ifndef QCOVER_BIN
#error "QCOVER_BIN must point at the command-line tool"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(QCOVER_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_status = 0) {
  const auto r = run(args + " --json");
  CHECK(r.status == expected_status);
  return nlohmann::json::parse(r.out);
}

std::set<std::string> keys(const nlohmann::json& j) {
  std::set<std::string> out;
  for (const auto& [k, v] : j.items()) out.insert(k);
  return out;
}

std::string temp_path(const std::string& name) { return "/tmp/qcover_cli_test_" + name; }

}  // namespace

TEST_CASE("verify") {
  const auto j = run_json("verify catalog:example-2.3");
  CHECK(keys(j) == std::set<std::string>{"input", "axioms"});
  CHECK(j["axioms"]["ip"] == true);
  CHECK(run("verify catalog:dihedral:6").status == 0);

  const auto bad = temp_path("bad.q");
  std::ofstream(bad) << "quandle-v1\nn 2\ninv 0 1\nop 0 0\nop 0 1\n";
  const auto r = run("verify " + bad);
  CHECK(r.status == 2);
  CHECK(r.out.find("bijective_rows fails at q0") != std::string::npos);

  const auto broken = temp_path("broken.q");
  std::ofstream(broken) << "quandle-v1\nn 2\ninv 0 7\n";
  CHECK(run("verify " + broken).status == 1);
  CHECK(run("verify /nonexistent/file.q").status == 1);
  CHECK(run("verify catalog:nope").status == 1);
}

TEST_CASE("cover") {
  auto j = run_json("cover catalog:sym:4:ncycles");
  CHECK(keys(j) == std::set<std::string>{"input", "cover", "abelianization"});
  CHECK(j["cover"]["order_gc"] == 48);
  CHECK(j["cover"]["kernel_order"] == 2);
  CHECK(j["cover"]["kernel_central"] == true);
  CHECK(j["cover"]["status"] == "complete");

  j = run_json("cover catalog:cyclic:5");
  CHECK(j["cover"]["status"] == "exceeded");
  CHECK(j["abelianization"]["free_rank"] == 1);

  j = run_json("cover catalog:weyl:A:3");
  CHECK(j["cover"]["order_gc"] == 24);
  CHECK(j["cover"]["kernel_order"] == 1);
  CHECK(j["cover"]["is_covering"] == true);

  // Exceeded without an infinite-order certificate is a failure.
  CHECK(run("cover catalog:sym:5:2cycles --max-cosets 10").status == 2);
  CHECK(run("cover catalog:sym:5:2cycles").status == 0);
  CHECK(run("cover catalog:sym:5:2cycles", "QCOVER_MAX_COSETS=10").status == 2);
}

TEST_CASE("skew") {
  auto j = run_json("skew catalog:weyl:B:2");
  CHECK(keys(j) == std::set<std::string>{"input", "skew"});
  CHECK(j["skew"]["is_locally_skew"] == false);
  CHECK(run_json("skew catalog:sym:5:2cycles")["skew"]["is_locally_skew"] == true);
  CHECK(run_json("skew catalog:sl2z:window:5")["skew"]["components"] == 1);

  const auto dot = temp_path("s3.dot");
  CHECK(run("skew catalog:sym:3:2cycles --dot " + dot).status == 0);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("graph ", 0) == 0);
  CHECK(text.find("0 -- 1;") != std::string::npos);
  CHECK(run("skew catalog:sym:3:2cycles --dot /nonexistent/dir/x.dot").status == 1);
}

TEST_CASE("h1") {
  auto j = run_json("h1 catalog:sym:4:2cycles");
  CHECK(keys(j) == std::set<std::string>{"input", "h1"});
  CHECK(j["h1"]["dim_h1"] == 1);
  CHECK(run_json("h1 catalog:klein4")["h1"]["dim_h1"] == 2);
  CHECK(run_json("h1 catalog:sym:4:2cycles --mod 5")["h1"]["dim_h1"] == 1);
  CHECK(run("h1 catalog:sym:3:2cycles --mod 2").status == 1);
  CHECK(run("h1 catalog:example-2.3").status == 1);
}

TEST_CASE("catalog listing") {
  const auto r = run("catalog");
  CHECK(r.status == 0);
  for (const char* s : {"weyl:<A|B|C|D|E|F|G>:<rank>", "sl2z:window:<N>", "example-2.3"}) {
    CHECK(r.out.find(s) != std::string::npos);
  }
}

TEST_CASE("export round trip") {
  const auto path = temp_path("s4.q");
  CHECK(run("export catalog:sym:4:ncycles -o " + path).status == 0);
  CHECK(run("verify " + path).status == 0);
  const auto j = run_json("cover " + path);
  CHECK(j["cover"]["order_gc"] == 48);
  CHECK(run("bogus").status == 1);
}
