#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GPH_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("gph_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli build") {
  auto r = run("build cycle:3");
  CHECK(r.code == 0);
  CHECK(r.out.find("f = (6, 9, 3); flags = 36") != std::string::npos);
  CHECK(r.out.find("euler characteristic = 0") != std::string::npos);
  r = run("build star:3");
  CHECK(r.out.find("f = (24, 36, 12)") != std::string::npos);
  r = run("build 'p=4; 1 2; 2 3; 3 4; 4 1'");
  CHECK(r.out.find("f = (24, 48, 28, 4); flags = 576") != std::string::npos);
}

TEST_CASE("cli build writes deterministic JSON") {
  const auto a = scratch("build_a"), b = scratch("build_b");
  REQUIRE(run("--out " + a.string() + " build cycle:3").code == 0);
  REQUIRE(run("--out " + b.string() + " build cycle:3").code == 0);
  const std::string text = slurp(a / "faces.json");
  CHECK(text == slurp(b / "faces.json"));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["flags"] == 36);
  CHECK(j["faces"].size() == 20);
  REQUIRE(run("--out " + a.string() + " --format dot build cycle:3").code == 0);
  CHECK(slurp(a / "hasse.dot").rfind("digraph", 0) == 0);
}

TEST_CASE("cli reads graphs from files") {
  const auto dir = scratch("file");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "k13.txt") << "p=4; 1 4; 2 4; 3 4\n";
  std::ofstream(dir / "c3.json") << R"({"p": 3, "edges": [[1, 2], [2, 3], [3, 1]]})";
  CHECK(run("build " + (dir / "k13.txt").string()).out.find("f = (24, 36, 12)") != std::string::npos);
  CHECK(run("build " + (dir / "c3.json").string()).out.find("f = (6, 9, 3)") != std::string::npos);
}

TEST_CASE("cli usage and parse errors exit with 2") {
  CHECK(run("build 'p=3; 1 1'").code == 2);
  CHECK(run("build 'nonsense'").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("realize 2").code == 2);
  CHECK(run("--format dot realize 3").code == 2);
  CHECK(run("--cap-faces 0 build cycle:3").code == 2);
}

TEST_CASE("cli caps exit with 3") {
  CHECK(run("classify --q-max 8").code == 3);
  CHECK(run("--cap-faces 10 build star:3").code == 3);
  CHECK(run("--cap-cosets 5 present star 3").code == 3);
  CHECK(std::system((std::string("GPH_CAP_FACES=10 ") + GPH_BIN + " build star:3 >/dev/null 2>&1").c_str()) != 0);
}

TEST_CASE("cli verify") {
  auto r = run("verify cycle:4");
  CHECK(r.code == 0);
  CHECK(r.out.find("regular: false; 1-face-transitive: true; 2-face-transitive: false") != std::string::npos);
  r = run("verify star:4");
  CHECK(r.out.find("regular: true; all ranks transitive") != std::string::npos);
  r = run("verify cycle:3");
  CHECK(r.out.find("regular: true") != std::string::npos);
  const auto dir = scratch("verify");
  REQUIRE(run("--out " + dir.string() + " verify cycle:4").code == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "verify.json"));
  CHECK(j["regular"] == false);
  CHECK(j["axioms"]["diamond"] == true);
  CHECK(j["transitivity"].size() == 5);
}

TEST_CASE("cli classify") {
  auto r = run("classify --q-max 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("[p=4; 1 2; 1 3; 1 4]") != std::string::npos);
  CHECK(r.out.find("[p=3; 1 2; 1 3; 2 3]") != std::string::npos);
  const auto dir = scratch("classify");
  REQUIRE(run("--out " + dir.string() + " --format csv classify --q-max 5").code == 0);
  CHECK(slurp(dir / "census.csv").rfind("q,p,graph", 0) == 0);
}

TEST_CASE("cli present") {
  CHECK(run("present star 3").out.find("order 24 (expected 24) PASS") != std::string::npos);
  CHECK(run("present cycle 4").out.find("order 24 (expected 24) PASS") != std::string::npos);
  const auto r = run("present twisted 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("order 2880; string C-group PASS; direct product PASS") != std::string::npos);
  CHECK(run("present bogus 3").code == 2);
}

TEST_CASE("cli realize") {
  auto r = run("realize 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("tiles=3 vertices=6 flags=36; torus isomorphism: PASS") != std::string::npos);
  r = run("realize 4");
  CHECK(r.out.find("tiles=4 vertices=24 flags=576; torus isomorphism: PASS") != std::string::npos);
  const auto dir = scratch("realize");
  REQUIRE(run("--out " + dir.string() + " --format off realize 3").code == 0);
  CHECK(slurp(dir / "torus.off").rfind("OFF", 0) == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "torus.json"));
  CHECK(j["q"] == 3);
  CHECK(j["vertices"].size() == 6);
}
