#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "leelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = leelab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("volume") {
    auto r = cli({"volume", "-m", "4", "-n", "2", "-r", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "5"));
    r = cli({"--format", "json", "volume", "-m", "6", "-n", "2", "-r", "3", "--method=closed"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "volume");
    CHECK(has(r.out, "23"));
  }

  TEST_CASE("odd closed form is flagged") {
    const auto r = cli({"volume", "-m", "5", "-n", "2", "-r", "2", "--method=closed"});
    CHECK(has(r.out, "13"));
    CHECK(has(r.out, "10"));
    CHECK(r.code == 0);
  }

  TEST_CASE("bounds and density") {
    auto r = cli({"bounds", "hamming", "-m", "4", "-n", "2", "-t", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "16/5"));
    r = cli({"bounds", "exact", "-m", "4", "-n", "2", "-d", "3"});
    CHECK(r.code == 0);
    r = cli({"--format", "json", "density", "linear", "-p", "3", "-n", "2", "-k", "1", "-t", "1", "--exact"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"exact\""));
  }

  TEST_CASE("container trace") {
    const auto r = cli({"--format", "json", "container", "run1", "-m", "4", "-n", "2", "-t", "1", "--eps", "1", "-I", "00,22"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line, last;
    int count = 0;
    while (std::getline(lines, line))
      if (!line.empty()) {
        CHECK(nlohmann::json::accept(line));
        last = line;
        ++count;
      }
    CHECK(count >= 2);
    CHECK(nlohmann::json::parse(last)["contains_input"] == true);
  }

  TEST_CASE("compare cell and csv") {
    const auto r = cli({"--format", "csv", "compare", "-m", "4", "--t-max", "1", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "\r\n"));
    CHECK_FALSE(has(r.out, "false"));
  }

  TEST_CASE("error exit codes") {
    CHECK(cli({"volume", "-m", "4"}).code == 1);
    CHECK(cli({"volume", "-m", "1", "-n", "2"}).code == 1);
    CHECK(cli({"verify", "nope"}).code == 1);
    CHECK(cli({"compare", "-m", "4", "--n-max", "500"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("verify") {
    const auto r = cli({"verify", "appendix"});
    CHECK(r.code == 0);
    const auto v = cli({"--format", "json", "verify", "intersections", "--grid-preset", "quick"});
    CHECK(v.code == 3);
    CHECK(nlohmann::json::parse(v.out)["passed"] == false);
  }
}
