#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(BROUWER_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("bn summary") {
  const auto r = run("--json bn 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["carrier_size"] == 5);
  CHECK(j["command"] == "bn");
}

TEST_CASE("check refutes the weak excluded middle in B2") {
  const auto r = run("--json check \"~p | ~~p\" --algebra bn:2");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "refuted");
  CHECK(j["countermodel"]["valuation"]["p"] == "{{1}}");
  CHECK(j["countermodel"]["verified"] == true);
}

TEST_CASE("check accepts a valid formula") {
  const auto r = run("check \"p -> p\" --algebra bn:3");
  CHECK(r.code == 0);
  CHECK(r.out.find("status: valid") != std::string::npos);
}

TEST_CASE("check on a poset file") {
  const auto path = std::filesystem::temp_directory_path() / "brouwer_cli_chain.txt";
  std::ofstream(path) << "elements: a b\ncovers: a<b\n";
  const auto r = run("check \"(p -> q) | (q -> p)\" --algebra poset:" + path.string());
  std::filesystem::remove(path);
  CHECK(r.code == 0);
}

TEST_CASE("witness transfers a refutation") {
  const auto r = run("--json witness --n 2 --k 1 --X1 1 --formula \"p | ~p\"");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "refuted");
}

TEST_CASE("repeated runs give identical output") {
  for (const char* args : {"--json countermodel \"((p -> q) -> p) -> p\" --max-n 2",
                           "oracle \"p | ~p\" --max-worlds 3", "witness --n 2 --k 2 --X1 1 --X2 1,2"}) {
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("bn").code == 2);
  CHECK(run("bn 0").code == 2);
  CHECK(run("check \"p &\" --algebra bn:1").code == 2);
  CHECK(run("check p --algebra nothing:1").code == 2);
  CHECK(run("countermodel p --max-n 9").code == 2);
  CHECK(run("witness --n 2 --k 1 --X1 5").code == 2);
  CHECK(run("--version").code == 0);
}

TEST_CASE("suite exit code follows the criteria") {
  const auto r = run("--json suite --only 2 --only 4");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["criteria"].size() == 2);
  CHECK(run("suite --only 12").code == 2);
}
