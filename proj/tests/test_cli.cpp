#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace psl3;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "psl3");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes") {
  auto ok = invoke({"verify", "--family", "THM1", "--q", "5,7"});
  CHECK(ok.code == cli::kExitOk);
  auto j = json::parse(ok.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["q"] == 5);
  CHECK(j[1]["matched"] == true);
  CHECK(invoke({"verify", "--family", "R3_ODD_CASE1", "--q", "7"}).code == cli::kExitOk);
  auto off = invoke({"verify", "--family", "R4_ODD", "--case", "1", "--q", "7", "--a", "2", "--a2", "2"});
  CHECK(off.code == cli::kExitMismatch);
  CHECK(json::parse(off.out).at(0)["checks"]["c_group"] == "fail");
  CHECK(invoke({"verify", "--family", "NOPE", "--q", "7"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--family", "THM1", "--q", "6"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--family", "THM2", "--q", "9"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--family", "THM1"}).code == cli::kExitUsage);
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
  CHECK(invoke({"verify", "--family", "THM1", "--q", "5", "--cap", "10"}).code == cli::kExitUsage);
}

TEST_CASE("output formats") {
  auto csv = invoke({"verify", "--family", "THM1", "--q", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("family,q,params", 0) == 0);
  auto text = invoke({"verify", "--family", "THM1", "--q", "5", "--format", "text"});
  CHECK(text.out.find("matches expectations") != std::string::npos);
  auto path = std::filesystem::temp_directory_path() / "psl3_cli_test.json";
  CHECK(invoke({"verify", "--family", "DIH_A", "--q", "4", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  CHECK(json::parse(in).at(0)["family"] == "DIH_A");
  std::filesystem::remove(path);
}

TEST_CASE("parallel output is deterministic") {
  std::vector<std::string> base{"verify", "--family", "THM1", "--q", "5,7,8,9", "--no-timings"};
  auto one = base, three = base;
  one.insert(one.end(), {"--jobs", "1"});
  three.insert(three.end(), {"--jobs", "3"});
  auto a = invoke(one), b = invoke(three);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("witness subcommand") {
  auto odd = invoke({"witness", "--parity", "odd", "--q", "3", "--format", "text"});
  CHECK(odd.code == 0);
  CHECK(odd.out.find("sigma_1 sigma_5 != sigma_5 sigma_1") != std::string::npos);
  auto even = invoke({"witness", "--parity", "even", "--q", "4", "--format", "text"});
  CHECK(even.code == 0);
  CHECK(even.out.find("(0,1,0) fixed by all 6 elements") != std::string::npos);
  CHECK(invoke({"witness", "--parity", "odd", "--q", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"witness", "--q", "3"}).code == cli::kExitUsage);
}

TEST_CASE("search subcommand") {
  auto r = invoke({"search", "--q", "2", "--rank", "3"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at(0)["chiral"] == 0);
  CHECK(invoke({"search", "--q", "4", "--rank", "3"}).code == cli::kExitUsage);
  CHECK(invoke({"search", "--q", "2", "--rank", "7"}).code == cli::kExitUsage);
  auto par = invoke({"search", "--q", "2", "--rank", "4", "--jobs", "2", "--no-timings"});
  auto seq = invoke({"search", "--q", "2", "--rank", "4", "--no-timings"});
  CHECK(par.out == seq.out);
}

TEST_CASE("oracle subcommand") {
  auto r = invoke({"oracle", "--family", "THM1", "--q", "7", "--subgroup", "2,3"});
  REQUIRE(r.code == 0);
  auto dump = r.out;
  CHECK(dump.find("1176") != std::string::npos);
  auto j = json::parse(r.out);
  CHECK(j.at(0)["consistent"] == true);
  CHECK(invoke({"oracle", "--family", "RANK6_WITNESS_ODD", "--q", "3"}).code == cli::kExitUsage);
}
