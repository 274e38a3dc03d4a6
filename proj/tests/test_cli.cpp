#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Captures stdout; stderr goes to /dev/null unless merged by the caller.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string corpus(const std::string& rel) {
  return std::string(CORPUS_DIR) + "/" + rel;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("laws subcommand") {
  RunResult r = run_cli("laws --size 2 --mode exhaustive");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("interchange:") != std::string::npos);

  // byte-identical across runs
  RunResult again = run_cli("laws --size 2 --mode exhaustive");
  CHECK(again.out == r.out);

  RunResult rnd1 = run_cli("laws --size 4 --mode random --samples 10000 --seed 7");
  RunResult rnd2 = run_cli("laws --size 4 --mode random --samples 10000 --seed 7");
  CHECK(rnd1.exit_code == 0);
  CHECK(rnd1.out == rnd2.out);

  RunResult single = run_cli("laws --law interchange --size 2");
  CHECK(single.exit_code == 0);
  CHECK(single.out.find("interchange:") != std::string::npos);
  CHECK(single.out.find("lattice:") == std::string::npos);

  // report-only findings never gate the exit status
  RunResult literal = run_cli("laws --law predicates_literal --size 2");
  CHECK(literal.exit_code == 0);
  CHECK(literal.out.find("violation:") != std::string::npos);
  CHECK(literal.out.find("result: PASS") != std::string::npos);

  CHECK(run_cli("laws --size 5 --mode exhaustive").exit_code == 2);
  CHECK(run_cli("laws --law no_such_law").exit_code == 2);
  CHECK(run_cli("laws --mode sideways").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("laws json output conforms to the shipped schema") {
  RunResult r = run_cli("laws --size 2 --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  nlohmann::json schema =
      nlohmann::json::parse(slurp(std::string(DOCS_DIR) + "/laws-report.schema.json"));

  // structural conformance against the schema's own required lists
  for (const auto& key : schema.at("required")) {
    CHECK(doc.contains(key.get<std::string>()));
  }
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("pass").is_boolean());
  for (const auto& key :
       schema.at("properties").at("config").at("required")) {
    CHECK(doc.at("config").contains(key.get<std::string>()));
  }
  const auto& result_required =
      schema.at("properties").at("results").at("items").at("required");
  CHECK(doc.at("results").is_array());
  CHECK(doc.at("results").size() > 0);
  for (const auto& entry : doc.at("results")) {
    for (const auto& key : result_required) {
      CHECK(entry.contains(key.get<std::string>()));
    }
    CHECK(entry.at("cases").is_number_integer());
    CHECK(entry.at("violations").is_array());
  }
}

TEST_CASE("check subcommand") {
  RunResult r = run_cli("check " + corpus("thing_class_classification.cno"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(corpus("golden/thing_class_classification.listing.txt")));

  RunResult missing = run_cli("check " + corpus("no_such.cno"), true);
  CHECK(missing.exit_code == 2);

  RunResult bad = run_cli("check " + corpus("proofs/theorem1.cpf"), true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("line 2") != std::string::npos);
}

TEST_CASE("model subcommand") {
  RunResult r = run_cli("model " + corpus("thing_class_classification.cno") +
                        " --max 6 --nonempty");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(corpus("golden/thing_class_classification.model.json")));

  RunResult out_file =
      run_cli("model " + corpus("thing_class_classification.cno") +
              " --max 6 --nonempty --out /tmp/conceptory_cli_model.json");
  CHECK(out_file.exit_code == 0);
  CHECK(slurp("/tmp/conceptory_cli_model.json") == r.out);

  RunResult unsat =
      run_cli("model " + corpus("unsat_pair.cno") + " --max 3 --nonempty");
  CHECK(unsat.exit_code == 1);
  CHECK(unsat.out == "UNSAT up to n=3\n");
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify " + corpus("thing_class_classification.cno") +
                        " " + corpus("golden/thing_class_classification.model.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  CHECK(run_cli("verify " + corpus("thing_class_classification.cno") +
                " /tmp/does_not_exist.json")
            .exit_code == 2);
}

TEST_CASE("prove subcommand") {
  std::string theory = " --theory " + corpus("proofs/theorems.cno");
  RunResult ok = run_cli("prove " + corpus("proofs/theorem3.cpf") + theory);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "checked 11 steps: pass\n");

  RunResult forged =
      run_cli("prove " + corpus("proofs/mutations/m04_forged_star.cpf") + theory);
  CHECK(forged.exit_code == 1);
  CHECK(forged.out.find("step 3") != std::string::npos);

  CHECK(run_cli("prove " + corpus("proofs/theorem3.cpf") +
                " --theory /tmp/missing_theory.cno")
            .exit_code == 2);
}
