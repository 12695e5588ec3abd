#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(MIDX_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate command") {
  const RunResult text = run_cli("enumerate --delta 1 --limit");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "total: 27 in 4 classes"));
  CHECK(contains(text.output, "homogeneity -3/2 (limit-negative)  [1]"));
  CHECK(contains(text.output, "homogeneity 0 (limit-negative)  [17]"));

  const RunResult json = run_cli("enumerate --delta 1 --limit --format json");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "enumerate");
  CHECK(doc["parameters"]["delta"] == "1");
  CHECK(doc["parameters"]["limit"] == true);
  CHECK(doc["payload"]["total"] == 27);
  const auto& first = doc["payload"]["classes"][0];
  CHECK(first["homogeneity"] == "-3/2");
  CHECK(first["count"] == 1);
  CHECK(first["elements"][0]["beta"] == "N0");
  CHECK(first["elements"][0]["noises"] == 1);
  CHECK(first["elements"][0]["fertility"] == 1);
  CHECK(first["elements"][0]["sigma_factor"] == 1);

  const RunResult latex = run_cli("enumerate --delta 1 --limit --format latex");
  CHECK(latex.exit_code == 0);
  CHECK(contains(latex.output, "\\begin{tabular}{c | c | c}"));
  CHECK(contains(latex.output, "$(-\\tfrac{3}{2})^-$ & $z_{(\\circ,0)}$ & 1"));
  CHECK(contains(latex.output, "$(0)^-$"));
}

TEST_CASE("reduced command") {
  const RunResult plain = run_cli("reduced --delta 1 --format json");
  CHECK(plain.exit_code == 0);
  CHECK(nlohmann::json::parse(plain.output)["payload"]["total"] == 17);

  const RunResult even = run_cli("reduced --delta 1 --even --format json");
  CHECK(nlohmann::json::parse(even.output)["payload"]["total"] == 12);

  const RunResult fibers = run_cli("reduced --delta 1 --with-fibers --format json");
  const auto doc = nlohmann::json::parse(fibers.output);
  bool found = false;
  for (const auto& cls : doc["payload"]["classes"]) {
    for (const auto& element : cls["elements"]) {
      if (element["beta"] == "N0^4*Q0^3") {
        found = true;
        CHECK(element["fiber_size"] == 2);
        CHECK(element["fiber"].size() == 2);
      }
    }
  }
  CHECK(found);
}

TEST_CASE("geo commands") {
  CHECK(run_cli("geo dim --noises 4").output == "3\n");
  CHECK(run_cli("geo dim --noises 6").output == "7\n");

  const RunResult basis = run_cli("geo basis --noises 2");
  CHECK(basis.exit_code == 0);
  CHECK(basis.output == "N0*N1 + 1/2*N0^2*Q0\n");

  const RunResult json = run_cli("geo basis --noises 4 --format json");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["payload"]["dimension"] == 3);
  CHECK(doc["payload"]["columns"].size() == 10);
  CHECK(doc["payload"]["kernel_basis"].size() == 3);
  CHECK(doc["payload"]["matrix"].size() == doc["payload"]["rows"].size());
}

TEST_CASE("counterterms command") {
  const RunResult json = run_cli("counterterms --delta 1 --format json");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["payload"]["total"] == 17);
  bool found = false;
  for (const auto& row : doc["payload"]["rows"]) {
    if (row["beta"] == "N0*N1") {
      found = true;
      CHECK(row["upsilon"] == "s(0)·s(1)");
      CHECK(row["sigma_factor"] == 1);
      CHECK(row["constant"] == "C[N0*N1]");
      CHECK(row["ito"] == true);
    }
  }
  CHECK(found);

  const RunResult gaussian = run_cli("counterterms --delta 1 --gaussian --format json");
  CHECK(nlohmann::json::parse(gaussian.output)["payload"]["total"] == 12);

  const RunResult text = run_cli("counterterms --delta 1");
  CHECK(contains(text.output, "+ C[N0^2*Q0]·2·G(0)·s(0)^2"));
}

TEST_CASE("verify command") {
  const RunResult ok = run_cli("verify --max-noises 2");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "PASS table1"));
  CHECK(contains(ok.output, "13/13 checks passed"));

  const RunResult fault = run_cli("verify --max-noises 2 --inject-fault grading");
  CHECK(fault.exit_code == 1);
  CHECK(contains(fault.output, "FAIL table1"));
  CHECK(contains(fault.output, "12/13 checks passed"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("enumerate --delta 3/2").exit_code == 2);
  CHECK(run_cli("enumerate --delta 0").exit_code == 2);
  CHECK(run_cli("enumerate --delta nonsense").exit_code == 2);
  CHECK(run_cli("enumerate").exit_code == 2);
  CHECK(run_cli("geo dim --noises 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("enumerate --delta 1 --format yaml").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"enumerate --delta 1/2 --limit --format json",
                           "reduced --delta 1 --with-fibers --format json",
                           "counterterms --delta 1 --format text",
                           "geo basis --noises 4 --format latex"}) {
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
  }
}
