#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sturmian/cli.hpp"

using sturmian::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("partition of [0; 2, 3, 3, ...] at n = 6 as CSV") {
  const auto r = cli({"partition", "--cf", "2,3", "--period", "3", "--n", "6", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("word,j_label,left_cut", 0) == 0);
  std::vector<std::string> got;
  while (std::getline(in, line)) got.push_back(line.substr(0, line.find(',', 7)));
  CHECK(got == std::vector<std::string>{"001010,20", "010010,21", "010100,22", "010101,23",
                                        "100101,11", "101001,12", "101010,13"});
}

TEST_CASE("json output carries the schema and is deterministic") {
  const std::vector<std::string> args{"sample", "--period", "1", "--depth", "15", "--samples", "40",
                                      "--seed", "7", "--format", "json"};
  const auto a = cli(args);
  const auto b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["points"].size() == 40);
  auto serial = args;
  serial.insert(serial.end(), {"--exec", "serial"});
  CHECK(cli(serial).out == a.out);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"rates", "--period", "1", "--depth", "0"}).code == 2);
  CHECK(cli({"rates", "--cf", "0,1"}).code == 2);
  CHECK(cli({"rates", "--period", "1", "--format", "xml"}).code == 2);
  CHECK(cli({"jumps", "--period", "1", "--digits", "1,0"}).code == 2);
  CHECK(cli({"tau", "--period", "1", "--word", "00"}).code == 2);
  CHECK(cli({"rates", "--cf", "1,2,3", "--depth", "10"}).code == 2);  // provider too short
  CHECK(cli({"rates", "--period", "1", "--depth", "20"}).code == 0);
  CHECK(cli({"verify", "--period", "1", "--n", "40", "--depth", "6", "--samples", "8"}).code == 0);
  const auto bad = cli({"verify", "--period", "1", "--n", "40", "--depth", "6", "--samples", "8",
                        "--inject-fault", "eta", "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["passed"] == false);
}

TEST_CASE("tau and jumps reports") {
  const auto t = cli({"tau", "--period", "1", "--word", "0110", "--format", "json"});
  REQUIRE(t.code == 0);
  const auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["formula"] == 3);
  CHECK(jt["agree"] == true);

  const auto j = cli({"jumps", "--period", "2", "--point", "b", "--depth", "10", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto jj = nlohmann::json::parse(j.out);
  CHECK(jj["bounds_hold"] == true);
  CHECK(jj["definition_agrees"] == true);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_out_test.txt";
  const auto r = cli({"rates", "--period", "1", "--depth", "12", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == cli({"rates", "--period", "1", "--depth", "12"}).out);
  std::remove(path.c_str());
}
