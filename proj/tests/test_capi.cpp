#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "conceptory.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string corpus(const std::string& rel) {
  return std::string(CORPUS_DIR) + "/" + rel;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cy_string_free(s);
  return out;
}

struct CellHandle {
  cy_cell* ptr = nullptr;
  ~CellHandle() { cy_cell_free(ptr); }
};

struct TheoryHandle {
  cy_theory* ptr = nullptr;
  ~TheoryHandle() { cy_theory_free(ptr); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(cy_version()).find("conceptory") != std::string::npos);
}

TEST_CASE("cells through the C surface") {
  CellHandle id, f, g, fg;
  CHECK(cy_cell_identity(2, 0b11u, &id.ptr) == CY_OK);
  CHECK(cy_cell_universe(id.ptr) == 2);
  CHECK(cy_cell_dom(id.ptr) == 0b11u);
  CHECK(cy_cell_is_map(id.ptr) == 1);

  const uint8_t a1[] = {0};
  const uint8_t b1[] = {1};
  CHECK(cy_cell_make(2, 0b01u, 0b10u, a1, b1, 1, &f.ptr) == CY_OK);
  const uint8_t a2[] = {1};
  const uint8_t b2[] = {0};
  CHECK(cy_cell_make(2, 0b10u, 0b01u, a2, b2, 1, &g.ptr) == CY_OK);

  CHECK(cy_cell_compose(g.ptr, f.ptr, &fg.ptr) == CY_OK);
  CHECK(cy_cell_dom(fg.ptr) == 0b01u);
  CHECK(cy_cell_cod(fg.ptr) == 0b01u);
  uint8_t pa[4], pb[4];
  REQUIRE(cy_cell_pairs(fg.ptr, pa, pb, 4) == 1);
  CHECK(pa[0] == 0);
  CHECK(pb[0] == 0);

  CHECK(cy_cell_leq(fg.ptr, id.ptr) == 1);
  CHECK(cy_cell_leq(id.ptr, fg.ptr) == 0);

  // strict boundaries: composing the wrong way round is an input error
  CellHandle bad;
  CHECK(cy_cell_compose(f.ptr, f.ptr, &bad.ptr) == CY_INPUT_ERROR);
  CHECK(std::strlen(cy_last_error()) > 0);

  CellHandle adj;
  CHECK(cy_cell_right_adjoint(f.ptr, &adj.ptr) == CY_OK);
  CellHandle tf;
  CHECK(cy_cell_transpose(f.ptr, &tf.ptr) == CY_OK);
  CHECK(cy_cell_order_equiv(adj.ptr, tf.ptr) == 1);

  CellHandle nm, nothing;
  CHECK(cy_cell_make(2, 0b01u, 0b11u, nullptr, nullptr, 0, &nm.ptr) == CY_OK);
  CHECK(cy_cell_is_map(nm.ptr) == 0);  // empty row on element 0
  CHECK(cy_cell_right_adjoint(nm.ptr, &nothing.ptr) == CY_FAIL);

  CellHandle top, bot, comp;
  CHECK(cy_cell_top(2, &top.ptr) == CY_OK);
  CHECK(cy_cell_bottom(2, &bot.ptr) == CY_OK);
  CHECK(cy_cell_complement(bot.ptr, &comp.ptr) == CY_OK);
  CHECK(cy_cell_order_equiv(comp.ptr, top.ptr) == 1);

  CellHandle proj;
  CHECK(cy_cell_projection(3, 0b011u, 0b110u, 0, &proj.ptr) == CY_OK);
  CHECK(cy_cell_dom(proj.ptr) == 0b010u);
  CHECK(cy_cell_is_map(proj.ptr) == 1);

  CellHandle pb2;
  CHECK(cy_cell_logical_pullback(f.ptr, f.ptr, &pb2.ptr) == CY_OK);
  CHECK(cy_cell_order_equiv(pb2.ptr, f.ptr) == 1);

  CellHandle oob;
  CHECK(cy_cell_identity(42, 0, &oob.ptr) == CY_INPUT_ERROR);
}

TEST_CASE("law runs through the C surface") {
  char* report = nullptr;
  CHECK(cy_laws_run(2, "exhaustive", 0, 0, nullptr, "text", &report) == CY_OK);
  std::string text = take(report);
  CHECK(text.find("result: PASS") != std::string::npos);

  CHECK(cy_laws_run(2, "exhaustive", 0, 0, "interchange,lattice", "json",
                    &report) == CY_OK);
  std::string json = take(report);
  CHECK(json.find("\"interchange\"") != std::string::npos);
  CHECK(json.find("\"semidistrib\"") == std::string::npos);

  CHECK(cy_laws_run(2, "sideways", 0, 0, nullptr, "text", &report) ==
        CY_INPUT_ERROR);
  CHECK(cy_laws_run(4, "exhaustive", 0, 0, nullptr, "text", &report) ==
        CY_INPUT_ERROR);
  CHECK(cy_laws_run(2, "exhaustive", 0, 0, "nope", "text", &report) ==
        CY_INPUT_ERROR);
}

TEST_CASE("theories through the C surface") {
  TheoryHandle theory;
  std::string source = slurp(corpus("thing_class_classification.cno"));
  REQUIRE(cy_theory_load(source.c_str(), &theory.ptr) == CY_OK);

  char* out = nullptr;
  CHECK(cy_theory_listing(theory.ptr, &out) == CY_OK);
  CHECK(take(out) == slurp(corpus("golden/thing_class_classification.listing.txt")));

  REQUIRE(cy_theory_find_model(theory.ptr, 6, 1, &out) == CY_OK);
  std::string model = take(out);
  CHECK(model == slurp(corpus("golden/thing_class_classification.model.json")));

  CHECK(cy_theory_verify(theory.ptr, model.c_str(), &out) == CY_OK);
  CHECK(take(out).find("result: PASS") != std::string::npos);

  CHECK(cy_theory_verify(theory.ptr, "{", &out) == CY_INPUT_ERROR);

  TheoryHandle unsat;
  std::string unsat_src = slurp(corpus("unsat_pair.cno"));
  REQUIRE(cy_theory_load(unsat_src.c_str(), &unsat.ptr) == CY_OK);
  CHECK(cy_theory_find_model(unsat.ptr, 3, 1, &out) == CY_FAIL);
  CHECK(std::string(cy_last_error()).find("no model") != std::string::npos);

  TheoryHandle broken;
  CHECK(cy_theory_load("rel f : A -> B\n", &broken.ptr) == CY_INPUT_ERROR);
  CHECK(std::string(cy_last_error()).find("line 1") != std::string::npos);
}

TEST_CASE("proof scripts through the C surface") {
  TheoryHandle theory;
  std::string source = slurp(corpus("proofs/theorems.cno"));
  REQUIRE(cy_theory_load(source.c_str(), &theory.ptr) == CY_OK);

  char* out = nullptr;
  std::string script = slurp(corpus("proofs/theorem1.cpf"));
  CHECK(cy_prove(script.c_str(), theory.ptr, &out) == CY_OK);
  CHECK(take(out).find("pass") != std::string::npos);

  std::string mutation = slurp(corpus("proofs/mutations/m04_forged_star.cpf"));
  CHECK(cy_prove(mutation.c_str(), theory.ptr, &out) == CY_FAIL);
  CHECK(take(out).find("step 3") != std::string::npos);

  CHECK(cy_prove("1. nonsense [hyp]", theory.ptr, &out) == CY_INPUT_ERROR);
  // without a theory there are no names to resolve against
  CHECK(cy_prove(script.c_str(), nullptr, &out) == CY_INPUT_ERROR);
}
