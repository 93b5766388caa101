#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "tripack/io.hpp"

using namespace tripack;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIPACK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(TRIPACK_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tripack_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("pack") {
  auto r = run("pack --shape 3,6");
  CHECK(r.status == 0);
  const auto p = packing_from_json(Json::parse(r.out));
  CHECK(p.shape == TwoFactorShape{3, 6});
  CHECK(oracle::valid_packing(p));
  CHECK(run("pack --shape 3,3").status == 3);
  CHECK(run("pack --shape 2,9").status == 2);
  CHECK(run("pack --shape 3,x").status == 2);
  r = run("pack --shape 12 --format dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("color=red") != std::string::npos);
}

TEST_CASE("distinct") {
  auto r = run("distinct --shape 5");
  CHECK(r.status == 3);
  CHECK(r.out == "{\"outcome\":\"nonexistent\"}\n");
  r = run("distinct --shape 3,6");
  CHECK(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("outcome") == "pair");
  CHECK(j.contains("certificate"));
  r = run("distinct --shape 7");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out).at("outcome") == "unique");
}

TEST_CASE("verify") {
  auto r = run("verify " + data("c3c6_first.json"));
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out).at("valid") == true);
  r = run("verify " + data("duplicated_edge.json"));
  CHECK(r.status == 1);
  CHECK(Json::parse(r.out).at("valid") == false);
  CHECK(run("verify " + data("duplicated_edge.txt")).status == 1);
  CHECK(run("verify " + data("missing.json")).status == 2);
  CHECK(run("verify " + temp_file("garbage.json", "{\"n\": ")).status == 2);
}

TEST_CASE("export round trip") {
  auto r = run("export " + data("c3c6_first.json") + " --format edgelist");
  CHECK(r.status == 0);
  const auto path = temp_file("c3c6.txt", r.out);
  CHECK(run("verify " + path).status == 0);
  r = run("export " + path + " --format json");
  CHECK(r.status == 0);
  CHECK(packing_from_json(Json::parse(r.out)) ==
        packing_from_json(Json::parse(run("export " + data("c3c6_first.json") + " --format json").out)));
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --shape 3,3,3");
  CHECK(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j.at("count") == 1);
  CHECK(j.at("exhaustive") == true);
  CHECK(j.at("representatives").size() == 1);
  CHECK(run("enumerate --shape 11").status == 2);
  CHECK(run("enumerate --shape 10 --budget-seconds 0.01").status == 4);
}

TEST_CASE("circulant") {
  auto r = run("circulant --n 9 --gens 1,2,3");
  CHECK(r.status == 0);
  CHECK(oracle::valid_packing(packing_from_json(Json::parse(r.out))));
  CHECK(run("circulant --n 9 --gens 1,4,5").status == 2);
  CHECK(run("circulant --n 9 --gens 1,2").status == 2);
  CHECK(run("circulant --n 8 --gens 1,2,4").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("pack").status == 2);
  CHECK(run("pack --shape 3,6 --format svg").status == 2);
}
