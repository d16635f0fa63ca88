#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const std::string kBinary = CLI_BINARY_PATH;

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "specbim_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(const std::string& args, const fs::path& stderr_to = {}) {
  std::string cmd = kBinary + " " + args + " >/dev/null";
  cmd += stderr_to.empty() ? " 2>/dev/null" : " 2>" + stderr_to.string();
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return Json::parse(in);
}

const std::string kWallConfig =
    "# A2 at the s1 wall\n"
    "[coxeter]\n"
    "type = A2\n"
    "\n"
    "[point]\n"
    "pairings = 0, 1\n"
    "\n"
    "[job]\n"
    "word = 2, 1\n"
    "verify = true\n";

}  // namespace

TEST_CASE("verified run exits 0 and reports two summands") {
  fs::path cfg = scratch_dir() / "wall.cfg";
  fs::path out = scratch_dir() / "wall.json";
  write_file(cfg, kWallConfig);

  CHECK(run(cfg.string() + " --json " + out.string()) == 0);

  Json report = load_json(out);
  CHECK(report["flag_consistent"] == true);
  CHECK(report["verification"]["pass"] == true);
  CHECK(report["decomposition"]["summands"].size() == 2);
  CHECK(report["decomposition"]["total_dim"] == 4);
  CHECK(report["orbit"]["points"].size() == 3);
  CHECK(report["job"]["job"]["word"] == Json::array({2, 1}));
  CHECK(report["local_simplicity"]["all_local_simple"] == true);
}

TEST_CASE("origin run: one summand of dimension 8") {
  fs::path cfg = scratch_dir() / "origin.cfg";
  fs::path out = scratch_dir() / "origin.json";
  write_file(cfg,
             "[coxeter]\n"
             "type = A2\n"
             "[point]\n"
             "coords = 0, 0\n"
             "[job]\n"
             "word = 1, 2, 1\n");

  CHECK(run(cfg.string() + " --json " + out.string()) == 0);
  Json report = load_json(out);
  REQUIRE(report["decomposition"]["summands"].size() == 1);
  CHECK(report["decomposition"]["summands"][0]["dim"] == 8);
  CHECK(report["orbit"]["points"].size() == 1);
  CHECK(!report.contains("verification"));
}

TEST_CASE("bad generator index exits 2 with an aggregated config error") {
  fs::path cfg = scratch_dir() / "bad_word.cfg";
  fs::path err = scratch_dir() / "bad_word.err";
  write_file(cfg,
             "[coxeter]\n"
             "type = A2\n"
             "[point]\n"
             "pairings = 0, 1\n"
             "[job]\n"
             "word = 9\n");

  CHECK(run(cfg.string(), err) == 2);
  std::string message = read_file(err);
  CHECK(message.find("generator index 9 out of range") != std::string::npos);
}

TEST_CASE("unknown keys and malformed values exit 2") {
  fs::path cfg = scratch_dir() / "unknown.cfg";
  fs::path err = scratch_dir() / "unknown.err";
  write_file(cfg,
             "[coxeter]\n"
             "type = A2\n"
             "flavour = crunchy\n"
             "[point]\n"
             "pairings = 0, banana\n"
             "[job]\n"
             "word = 1\n");
  CHECK(run(cfg.string(), err) == 2);
  std::string message = read_file(err);
  CHECK(message.find("unknown key") != std::string::npos);
  CHECK(message.find("configuration invalid") != std::string::npos);

  CHECK(run("", err) == 2);  // no config at all: nothing to run
}

TEST_CASE("point outside the certified Tits cone exits 3") {
  fs::path cfg = scratch_dir() / "affine.cfg";
  fs::path err = scratch_dir() / "affine.err";
  write_file(cfg,
             "[coxeter]\n"
             "matrix = 1 inf; inf 1\n"
             "[point]\n"
             "coords = 0, 1/2\n"
             "[job]\n"
             "word = 1\n"
             "[caps]\n"
             "descent = 200\n");

  CHECK(run(cfg.string(), err) == 3);
  std::string message = read_file(err);
  CHECK(message.find("Tits") != std::string::npos);
}

TEST_CASE("reports are byte-for-byte deterministic") {
  fs::path cfg = scratch_dir() / "det.cfg";
  fs::path out1 = scratch_dir() / "det1.json";
  fs::path out2 = scratch_dir() / "det2.json";
  write_file(cfg, kWallConfig);

  CHECK(run(cfg.string() + " --json " + out1.string()) == 0);
  CHECK(run(cfg.string() + " --json " + out2.string()) == 0);
  CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("a serialised job re-runs to an identical report") {
  fs::path cfg = scratch_dir() / "round.cfg";
  fs::path out1 = scratch_dir() / "round1.json";
  fs::path out2 = scratch_dir() / "round2.json";
  write_file(cfg, kWallConfig);

  CHECK(run(cfg.string() + " --json " + out1.string()) == 0);
  CHECK(run("--job-json " + out1.string() + " --json " + out2.string()) == 0);
  CHECK(read_file(out1) == read_file(out2));
}

TEST_CASE("command line flags override the config") {
  fs::path cfg = scratch_dir() / "override.cfg";
  fs::path out = scratch_dir() / "override.json";
  write_file(cfg, kWallConfig);

  CHECK(run(cfg.string() + " --word 1 --json " + out.string()) == 0);
  Json report = load_json(out);
  CHECK(report["decomposition"]["summands"].size() == 1);
  CHECK(report["job"]["job"]["word"] == Json::array({1}));
}

TEST_CASE("sweep mode aggregates and exits 0 when everything passes") {
  fs::path out = scratch_dir() / "sweep.json";
  CHECK(run("--type A2 --sweep --max-word-len 2 --verify --json " + out.string()) == 0);
  Json report = load_json(out);
  CHECK(report["sweep"]["all_ok"] == true);
  CHECK(report["sweep"]["failures"] == 0);
  // 4 wall subsets x 7 words of length <= 2
  CHECK(report["sweep"]["total"] == 28);
  CHECK(report["sweep"]["jobs"].size() == 28);
}
