#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("rsspredict-cli-" + std::to_string(::getpid()) + "-" +
                                       std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const Sandbox& box) {
  const std::string cmd = std::string(RSSPREDICT_CLI_PATH) + " " + args + " 2>" +
                          box.path("stderr.txt") + " >" + box.path("stdout.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("synth is deterministic for a fixed seed") {
  Sandbox box;
  REQUIRE(run("synth --model gaussian --n 3360 --seed 7 -o " + box.path("a.csv"), box) == 0);
  REQUIRE(run("synth --model gaussian --n 3360 --seed 7 -o " + box.path("b.csv"), box) == 0);
  CHECK(slurp(box.path("a.csv")) == slurp(box.path("b.csv")));
  CHECK(count_lines(slurp(box.path("a.csv"))) == 3361);
  CHECK(fs::exists(box.path("a.json")));
}

TEST_CASE("synth periodic writes 8 x 420 rows") {
  Sandbox box;
  REQUIRE(run("synth --model periodic --pattern 0,1,2,3,4,5,6,7 --repeats 420 -o " +
                  box.path("p.csv"),
              box) == 0);
  CHECK(count_lines(slurp(box.path("p.csv"))) == 1 + 3360);
}

TEST_CASE("synth markov rejects a non-stochastic spec with exit 3") {
  Sandbox box;
  write(box.path("chain.json"), R"({"transition": [[0.9, 0.3], [0.1, 0.9]], "initial": [1, 0]})");
  CHECK(run("synth --model markov --spec " + box.path("chain.json") + " -o " + box.path("m.csv"),
            box) == 3);
  CHECK_FALSE(fs::exists(box.path("m.csv")));
  CHECK(slurp(box.path("stderr.txt")).find("InvalidStochasticMatrix") != std::string::npos);

  write(box.path("ok.json"), R"({"transition": [[0.9, 0.1], [0.1, 0.9]], "initial": [1, 0], "seed": 3})");
  CHECK(run("synth --model markov --n 500 --bands 2 --spec " + box.path("ok.json") + " -o " +
                box.path("m.csv"),
            box) == 0);
  CHECK(count_lines(slurp(box.path("m.csv"))) == 501);
}

TEST_CASE("analyze on a periodic source") {
  Sandbox box;
  REQUIRE(run("synth --model periodic --bands 3 --pattern 0,1,2,3,4,5,6,7 --repeats 420 -o " +
                  box.path("p.csv"),
              box) == 0);
  REQUIRE(run("analyze " + box.path("p.csv") + " --q 8 -o " + box.path("a.csv"), box) == 0);
  std::istringstream csv(slurp(box.path("a.csv")));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "freq_mhz,e_rand,e_unc,e_actual,pi_max,clamped,n");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    REQUIRE(f.size() == 7);
    CHECK(f[1] == "3");
    CHECK(std::stod(f[4]) > 0.99);
    CHECK(f[6] == "3360");
  }
  CHECK(rows == 3);

  const auto report = nlohmann::json::parse(slurp(box.path("a.json")));
  CHECK(report.at("manifest").at("quantization").at("q") == 8);
  CHECK(report.at("entropy_units") == "bits");
}

TEST_CASE("analyze reruns byte-identically from its manifest") {
  Sandbox box;
  REQUIRE(run("synth --model gaussian --bands 4 --n 1000 --seed 3 -o " + box.path("g.csv"), box) == 0);
  REQUIRE(run("analyze " + box.path("g.csv") + " --strategy equal-frequency --q 6 -o " +
                  box.path("first.csv"),
              box) == 0);
  REQUIRE(run("analyze --manifest " + box.path("first.json") + " -o " + box.path("second.csv"),
              box) == 0);
  CHECK(slurp(box.path("first.csv")) == slurp(box.path("second.csv")));
}

TEST_CASE("analyze error exit codes") {
  Sandbox box;
  write(box.path("empty.csv"), "");
  CHECK(run("analyze " + box.path("empty.csv"), box) == 2);
  CHECK(slurp(box.path("stderr.txt")).find("EmptyTrace") != std::string::npos);

  write(box.path("ragged.csv"), "614.1,614.3\n-110,-110\n-110\n");
  CHECK(run("analyze " + box.path("ragged.csv"), box) == 2);

  write(box.path("two.csv"), "614.1\n-110\n-100\n");
  CHECK(run("analyze " + box.path("two.csv") + " --block 2 -o " + box.path("out.csv"), box) == 3);
  CHECK(slurp(box.path("stderr.txt")).find("SequenceTooShort") != std::string::npos);
  CHECK_FALSE(fs::exists(box.path("out.csv")));

  CHECK(run("analyze " + box.path("two.csv") + " --q 0", box) == 3);
  CHECK(run("analyze " + box.path("two.csv") + " --strategy median", box) == 3);
  CHECK(run("analyze " + box.path("missing.csv"), box) == 2);
  CHECK(run("frobnicate", box) == 3);
}

TEST_CASE("failed runs leave existing outputs untouched") {
  Sandbox box;
  write(box.path("out.csv"), "previous\n");
  write(box.path("bad.csv"), "614.1\nnan\n");
  CHECK(run("analyze " + box.path("bad.csv") + " -o " + box.path("out.csv"), box) == 2);
  CHECK(slurp(box.path("out.csv")) == "previous\n");
}

TEST_CASE("duty-cycle with two thresholds") {
  Sandbox box;
  write(box.path("flat.csv"), "614.1,614.3\n-120,-120\n-120,-120\n");
  REQUIRE(run("duty-cycle " + box.path("flat.csv") + " --threshold -107 --threshold -114 -o " +
                  box.path("dc.csv"),
              box) == 0);
  CHECK(slurp(box.path("dc.csv")) ==
        "freq_mhz,duty_cycle@-107,duty_cycle@-114\n614.1,0,0\n614.3,0,0\n");
  const auto report = nlohmann::json::parse(slurp(box.path("dc.json")));
  CHECK(report.at("manifest").at("thresholds_dbm").size() == 2);

  write(box.path("empty.csv"), "");
  CHECK(run("duty-cycle " + box.path("empty.csv"), box) == 2);
  CHECK(slurp(box.path("stderr.txt")).find("EmptyTrace") != std::string::npos);
}

TEST_CASE("cdf groups bands by service") {
  Sandbox box;
  write(box.path("a.csv"),
        "freq_mhz,e_rand,e_unc,e_actual,pi_max,clamped,n\n"
        "614.1,3,2,1,0.9,false,3360\n"
        "614.3,3,2,1,0.8,false,3360\n"
        "1800,3,2,1,0.7,false,3360\n");
  write(box.path("services.json"), R"({"TV": [614, 698]})");
  REQUIRE(run("cdf " + box.path("a.csv") + " --services " + box.path("services.json") + " -o " +
                  box.path("cdf.csv"),
              box) == 0);
  CHECK(slurp(box.path("cdf.csv")) ==
        "service,pi_max,fraction\nTV,0.8,0.5\nTV,0.9,1\nunassigned,0.7,1\n");
  const auto report = nlohmann::json::parse(slurp(box.path("cdf.json")));
  CHECK(report.at("services").at(0).at("min_pi_max") == 0.8);

  write(box.path("junk.csv"), "freq_mhz,pi_max\n614.1,zzz\n");
  CHECK(run("cdf " + box.path("junk.csv"), box) == 2);
}
