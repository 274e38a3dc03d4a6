// Command-line front end. Links the public C API only; all output goes to
// standard output, diagnostics to standard error, and identical inputs
// produce byte-identical output (no color, no timestamps).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conceptory.h"

namespace {

constexpr int kInputError = 2;

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  *out = os.str();
  return true;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cy_string_free(s);
  return out;
}

int fail_input(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return kInputError;
}

int run_laws(int size, const std::string& mode, long samples, uint64_t seed,
             const std::vector<std::string>& laws, const std::string& format) {
  std::string csv;
  for (size_t i = 0; i < laws.size(); ++i) {
    csv += (i ? "," : "") + laws[i];
  }
  char* report = nullptr;
  cy_status status =
      cy_laws_run(size, mode.c_str(), samples, seed,
                  csv.empty() ? nullptr : csv.c_str(), format.c_str(), &report);
  if (status == CY_INPUT_ERROR || status == CY_INTERNAL) {
    std::cerr << "error: " << cy_last_error() << '\n';
    return status;
  }
  std::cout << take(report);
  return status;
}

int load_theory(const std::string& path, cy_theory** out) {
  std::string text;
  if (!read_file(path, &text)) {
    return fail_input("cannot read '" + path + "'");
  }
  cy_status status = cy_theory_load(text.c_str(), out);
  if (status != CY_OK) {
    return fail_input(path + ": " + cy_last_error());
  }
  return 0;
}

int run_check(const std::string& file) {
  cy_theory* theory = nullptr;
  if (int rc = load_theory(file, &theory)) return rc;
  char* listing = nullptr;
  cy_theory_listing(theory, &listing);
  std::cout << take(listing);
  cy_theory_free(theory);
  return 0;
}

int run_model(const std::string& file, int max_universe, bool nonempty,
              const std::string& out_path) {
  cy_theory* theory = nullptr;
  if (int rc = load_theory(file, &theory)) return rc;
  char* model = nullptr;
  cy_status status =
      cy_theory_find_model(theory, max_universe, nonempty ? 1 : 0, &model);
  cy_theory_free(theory);
  if (status == CY_INPUT_ERROR || status == CY_INTERNAL) {
    std::cerr << "error: " << cy_last_error() << '\n';
    return status;
  }
  if (status == CY_FAIL) {
    std::cout << "UNSAT up to n=" << max_universe << '\n';
    return 1;
  }
  std::string json = take(model);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail_input("cannot write '" + out_path + "'");
    out << json;
  }
  std::cout << json;
  return 0;
}

int run_verify(const std::string& file, const std::string& model_path) {
  cy_theory* theory = nullptr;
  if (int rc = load_theory(file, &theory)) return rc;
  std::string model_json;
  if (!read_file(model_path, &model_json)) {
    cy_theory_free(theory);
    return fail_input("cannot read '" + model_path + "'");
  }
  char* report = nullptr;
  cy_status status = cy_theory_verify(theory, model_json.c_str(), &report);
  cy_theory_free(theory);
  if (status == CY_INPUT_ERROR || status == CY_INTERNAL) {
    std::cerr << "error: " << cy_last_error() << '\n';
    return status;
  }
  std::cout << take(report);
  return status;
}

int run_prove(const std::string& script_path, const std::string& theory_path) {
  cy_theory* theory = nullptr;
  if (!theory_path.empty()) {
    if (int rc = load_theory(theory_path, &theory)) return rc;
  }
  std::string script;
  if (!read_file(script_path, &script)) {
    cy_theory_free(theory);
    return fail_input("cannot read '" + script_path + "'");
  }
  char* report = nullptr;
  cy_status status = cy_prove(script.c_str(), theory, &report);
  cy_theory_free(theory);
  if (status == CY_INPUT_ERROR || status == CY_INTERNAL) {
    std::cerr << "error: " << cy_last_error() << '\n';
    return status;
  }
  std::cout << take(report);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conceptory: finite relational calculus, law checking, "
               "ontology consistency and proof scripts"};
  app.require_subcommand(1);

  auto* laws = app.add_subcommand("laws", "run the law suite");
  int size = 2;
  std::string mode = "exhaustive";
  long samples = 10000;
  uint64_t seed = 0;
  std::vector<std::string> law_names;
  std::string format = "text";
  laws->add_option("--size", size, "universe size");
  laws->add_option("--mode", mode, "exhaustive|random");
  laws->add_option("--samples", samples, "samples per law (random mode)");
  laws->add_option("--seed", seed, "random seed");
  laws->add_option("--law", law_names, "law selection (repeatable)");
  laws->add_option("--format", format, "text|json");

  auto* check = app.add_subcommand("check", "parse and compile an ontology");
  std::string check_file;
  check->add_option("file", check_file, "ontology file (.cno)")->required();

  auto* model = app.add_subcommand("model", "search for a bounded model");
  std::string model_file, model_out;
  int max_universe = 4;
  bool nonempty = false;
  model->add_option("file", model_file, "ontology file (.cno)")->required();
  model->add_option("--max", max_universe, "largest universe size to try");
  model->add_flag("--nonempty", nonempty, "require every class nonempty");
  model->add_option("--out", model_out, "write the model JSON here too");

  auto* verify = app.add_subcommand("verify", "evaluate a model against an ontology");
  std::string verify_file, verify_model_path;
  verify->add_option("file", verify_file, "ontology file (.cno)")->required();
  verify->add_option("model", verify_model_path, "model file (.json)")->required();

  auto* prove = app.add_subcommand("prove", "check a proof script");
  std::string script_path, theory_path;
  prove->add_option("script", script_path, "proof script (.cpf)")->required();
  prove->add_option("--theory", theory_path,
                    "ontology whose judgments become hypotheses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (laws->parsed()) return run_laws(size, mode, samples, seed, law_names, format);
  if (check->parsed()) return run_check(check_file);
  if (model->parsed()) return run_model(model_file, max_universe, nonempty, model_out);
  if (verify->parsed()) return run_verify(verify_file, verify_model_path);
  return run_prove(script_path, theory_path);
}
