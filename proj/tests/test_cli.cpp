#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "wheeler/automaton.hpp"

using namespace wheeler;

namespace {

const std::string kData = WHEELER_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wheeler-lang");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wheeler_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  auto aa = run({"check", "--regex", "(aa)*"});
  CHECK(aa.code == 1);
  CHECK(aa.out == "non-wheeler\n");
  auto a = run({"check", "--regex", "a*", "--quiet"});
  CHECK(a.code == 0);
  CHECK(a.out == "wheeler\n");
  CHECK(a.err.empty());
  CHECK(run({"check", "--dfa", kData + "/aa_star.dfa"}).code == 1);
  CHECK(run({"check", "--dfa", kData + "/ab_star.dfa"}).code == 0);
}

TEST_CASE("check input errors") {
  CHECK(run({"check", "--dfa", "missing.txt"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--regex", "a", "--dfa", kData + "/ab_star.dfa"}).code == 2);
  CHECK(run({"check", "--regex", "(a"}).code == 2);
  CHECK(run({"check", "--dfa", kData + "/nfa.txt"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("json report") {
  auto path = temp_path("report.json");
  CHECK(run({"check", "--regex", "(aa)*", "--json", path}).code == 1);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["wheeler"] == false);
  CHECK(j["input_mode"] == "regex");
  CHECK(j["witness"]["labels"] == "aa");
  std::filesystem::remove(path);
}

TEST_CASE("gen-ov") {
  auto ov = temp_path("fig2.ov");
  {
    std::ofstream f(ov);
    f << "4 3\n110\n100\n111\n011\n101\n101\n010\n111\n";
  }
  auto dfa = temp_path("fig2.dfa");
  auto g = run({"gen-ov", "--file", ov, "--solve", "--out", dfa});
  CHECK(g.code == 0);
  CHECK(g.out == "orthogonal 2 3\n");
  CHECK(read_automaton_file(dfa).num_states() == 98);
  CHECK(run({"check", "--dfa", dfa}).code == 1);

  auto s = run({"gen-ov", "--random", "4", "5", "7", "--force", "no", "--binary-alphabet"});
  CHECK(s.code == 0);
  Automaton bin = parse_automaton(s.out);
  CHECK(bin.alphabet() == Alphabet("01"));

  CHECK(run({"gen-ov"}).code == 2);
  CHECK(run({"gen-ov", "--random", "3", "4", "1"}).code == 2);
  CHECK(run({"gen-ov", "--random", "4", "4"}).code == 2);
  CHECK(run({"gen-ov", "--random", "4", "4", "1", "--force", "maybe"}).code == 2);
  std::filesystem::remove(ov);
  std::filesystem::remove(dfa);
}

TEST_CASE("bench") {
  auto b = run({"bench", "--sizes", "10,20", "--seeds", "1,2", "--sigma", "2", "--edge-factor", "2"});
  CHECK(b.code == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 5);
  CHECK(b.out.rfind("n,m,sigma,seed", 0) == 0);
  CHECK(run({"bench", "--sizes", "10", "--edge-factor", "9"}).code == 2);
}
