// End-to-end checks of the installed command line: spawn the real
// binary, inspect exit codes and output files.  Kept to coarse
// behaviors; fine-grained logic lives in the library tests.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

const std::string kTool = VISICUBE_TOOL_PATH;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "visicube_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out_file = scratch_dir() / "stdout.txt";
  std::string cmd = kTool + " " + args + " > " + out_file.string() + " 2> " +
                    (scratch_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WEXITSTATUS(status);
#endif
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("solve reports the exact 3-cube optimum as JSON") {
  RunResult r = run("solve --param mu --n 3");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["schema_version"] == 1);
  CHECK(rep["command"] == "solve");
  CHECK(rep["results"]["value"] == 5);
  CHECK(rep["results"]["optimal"] == true);
  CHECK(rep["results"]["verified"] == true);
}

TEST_CASE("solve writes certificates next to the report") {
  fs::path prefix = scratch_dir() / "mut4";
  RunResult r = run("solve --param mut --n 4 --certificate-out " + prefix.string());
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["results"]["value"] == 4);
  fs::path cert = prefix.string() + "-0.txt";
  CHECK(fs::exists(cert));
}

TEST_CASE("chimut partitions the 3-cube into four classes") {
  RunResult r = run("solve --param chimut --n 3");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["results"]["value"] == 4);
  CHECK(rep["results"]["certificate_sizes"].size() == 4);
}

TEST_CASE("turan emits the exact record") {
  RunResult r = run("turan --n 3 --r 2 --s 2 --t 1");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["results"]["value"] == 1);
  CHECK(rep["results"]["optimal"] == true);
  CHECK(rep["results"]["density"]["exact"] == "1/3");
}

TEST_CASE("build-mv verifies exhaustively and writes the set") {
  fs::path out = scratch_dir() / "m7.txt";
  RunResult r = run("build-mv --n 7 --d 3 --lambda 1 --verify exhaustive --out " +
                    out.string());
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["verification"]["verified"] == true);
  CHECK(fs::exists(out));
}

TEST_CASE("witness connects two members of a built set") {
  fs::path out = scratch_dir() / "m8.txt";
  RunResult built = run("build-mv --n 8 --d 3 --lambda 1 --out " + out.string());
  REQUIRE(built.exit_code == 0);

  std::ifstream in(out);
  std::string line;
  std::vector<std::string> members;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') members.push_back(line);
  }
  REQUIRE(members.size() >= 2);

  RunResult r = run("witness --set " + out.string() + " --a " + members.front() +
                    " --b " + members.back());
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> path = lines_of(r.out);
  CHECK(path.front() == members.front());
  CHECK(path.back() == members.back());
  CHECK(path.size() >= 2);
}

TEST_CASE("color verifies a repaired coloring") {
  RunResult r = run("color --n 8 --d 3 --seed 7 --verify exhaustive");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["results"]["converged"] == true);
  CHECK(rep["verification"]["verified"] == true);
  CHECK(rep["results"]["class_sizes"].size() == 6);
}

TEST_CASE("total builds groups, codes, and partitions") {
  RunResult groups = run("total --n 6");
  REQUIRE(groups.exit_code == 0);
  json grep = json::parse(groups.out);
  CHECK(grep["results"]["verified"] == true);

  RunResult code = run("total --hamming-m 3 --verify exhaustive");
  REQUIRE(code.exit_code == 0);
  json crep = json::parse(code.out);
  CHECK(crep["results"]["size"] == 16);
  CHECK(crep["results"]["verified"] == true);

  RunResult part = run("total --n 5 --partition");
  REQUIRE(part.exit_code == 0);
  json prep = json::parse(part.out);
  CHECK(prep["results"]["class_count"].get<int>() <= 10);
  CHECK(prep["results"]["verified"] == true);
}

TEST_CASE("quick repro run summarizes and passes") {
  RunResult r = run("repro --suite paper --max-n 4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("PASS  3  density-constant-arithmetic") != std::string::npos);
  CHECK(r.out.find("all criteria passed") != std::string::npos);
}

TEST_CASE("malformed vertex files exit with the usage code") {
  fs::path bad = scratch_dir() / "bad.txt";
  std::ofstream(bad) << "0101\n01x1\n";
  RunResult r = run("witness --set " + bad.string() + " --a 0000 --b 1111");
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("solve --param nonsense --n 3").exit_code == 2);
  CHECK(run("solve --param mu").exit_code == 2);
  CHECK(run("turan --n 90 --r 2 --s 2 --t 1").exit_code == 2);
  CHECK(run("solve --param mut --n 9").exit_code == 2);
}

TEST_CASE("reports are reproducible for a fixed config") {
  RunResult a = run("color --n 8 --d 3 --seed 123");
  RunResult b = run("color --n 8 --d 3 --seed 123");
  CHECK(a.out == b.out);
}
