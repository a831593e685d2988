#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string command = env + " " + std::string(CLANLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) r.output.append(buffer, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("count") {
  RunResult r = run_cli("count --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "45\n");
  CHECK(run_cli("count --n 7").output == "26253\n");
  CHECK(run_cli("count --n 4 --sect big").output == "43\n");
  CHECK(run_cli("count --n 40").exit_code == 0);  // formulas have no enumeration bound
}

TEST_CASE("count json schema") {
  RunResult r = run_cli("count --n 2 --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json out = nlohmann::json::parse(r.output);
  CHECK(out["schema"] == "clan-lab/1");
  CHECK(out["Z"] == 11);
  CHECK(out["zeta"] == nlohmann::json::array({4, 4, 3}));
  CHECK(out["sects"]["- - + +"] == 5);
}

TEST_CASE("enumerate") {
  RunResult r = run_cli("enumerate --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "+ -\n- +\n1 1\n");
  CHECK(run_cli("enumerate --n 2 --sect big").output == "- - + +\n- 1 1 +\n1 - + 1\n1 2 1 2\n1 2 2 1\n");
  CHECK(run_cli("enumerate --n 2 --sect '- + - +'").output == "- + - +\n1 + - 1\n1 1 2 2\n");

  nlohmann::json out = nlohmann::json::parse(run_cli("enumerate --n 1 --json").output);
  CHECK(out["schema"] == "clan-lab/1");
  REQUIRE(out["clans"].size() == 3);
  CHECK(out["clans"][2]["symbols"] == nlohmann::json::array({"1", "1"}));
}

TEST_CASE("map translations") {
  CHECK(run_cli("map --from pinv --to clan --input '1,0,0;0,0,1;0,1,0'").output == "1 2 3 2 3 1\n");
  CHECK(run_cli("map --from clan --to path --input '+-123312+-'").output == "E1,N1,D5,D1,D2,E1,N1\n");
  CHECK(run_cli("map --from clan --to restricted --input '-11+'").output == "-1 3 2 -4\n");
  CHECK(run_cli("map --from restricted --to clan --input '-1 3 2 -4'").output == "- 1 1 +\n");
  CHECK(run_cli("map --from path --to clan --input 'E1,N1,D5,D1,D2,E1,N1'").output == "+ - 1 2 3 3 1 2 + -\n");
  CHECK(run_cli("map --from clan --to pinv --input '123231'").output == "1,0,0;0,0,1;0,1,0\n");
  CHECK(run_cli("map --from clan --to clan --input '2211'").output == "1 1 2 2\n");
}

TEST_CASE("hasse emission") {
  RunResult dot = run_cli("hasse --n 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(count_occurrences(dot.output, "label=") == 11);
  CHECK(count_occurrences(dot.output, "->") == 16);

  nlohmann::json out = nlohmann::json::parse(run_cli("hasse --n 2 --format json").output);
  CHECK(out["schema"] == "clan-lab/1");
  CHECK(out["elements"].size() == 11);
  CHECK(out["covers"].size() == 16);

  nlohmann::json sect = nlohmann::json::parse(run_cli("hasse --n 2 --sect big --format json").output);
  CHECK(sect["elements"].size() == 5);
}

TEST_CASE("flag matrices") {
  RunResult r = run_cli("flag --clan '11'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2√2 -1/2√2\n1/2√2 1/2√2\n");
  nlohmann::json out = nlohmann::json::parse(run_cli("flag --clan '+-' --json").output);
  CHECK(out["matrix"][0][0] == nlohmann::json{{"a", "1"}, {"b", "0"}});
}

TEST_CASE("verify suites") {
  RunResult r = run_cli("verify --suite counts --n 3");
  CHECK(r.exit_code == 0);
  CHECK(count_occurrences(r.output, "PASS") == 3);
  CHECK(count_occurrences(r.output, "FAIL") == 0);
  CHECK(run_cli("verify --suite posets --n 2").exit_code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("count").exit_code == 2);                     // missing --n
  CHECK(run_cli("map --from clan --to clan --input '+1'").exit_code == 2);
  CHECK(run_cli("enumerate --n 9").exit_code == 2);           // past the default bound
  CHECK(run_cli("hasse --n 6 --format dot").exit_code == 2);  // past the default bound
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("bound override via environment") {
  CHECK(run_cli("enumerate --n 2", "CLAN_LAB_MAX_N=1").exit_code == 2);
  RunResult r = run_cli("hasse --n 2 --format json", "CLAN_LAB_MAX_N=2");
  CHECK(r.exit_code == 0);
}
