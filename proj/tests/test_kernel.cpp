#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kernel/derivation.hpp"
#include "kernel/parse.hpp"
#include "kernel/rules.hpp"
#include "kernel/semantics.hpp"
#include "laws/enumerate.hpp"
#include "ontology/ontology.hpp"

using namespace conceptory;
using namespace conceptory::kernel;

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

Theory theorem_theory() {
  return onto::compile(onto::parse(slurp(corpus("proofs/theorems.cno"))));
}

SubclassFn oracle(const Theory& t) {
  return [&t](const std::string& a, const std::string& b) {
    return t.declared_subclass(a, b);
  };
}

}  // namespace

TEST_CASE("apply_rule on the displayed rules") {
  Theory t = theorem_theory();
  auto j = [&](const char* s) { return parse_judgment(s, t.sig, oracle(t)); };

  CHECK(equal(apply_rule("id_impl", {j("id(A) => id(B)")}), j("A => B")));
  CHECK(equal(apply_rule("star", {j("f => h"), j("g => g")}),
              j("g o f => g o h")));
  CHECK(equal(apply_rule("down", {j("def(A,B,down(f,A2,B2))")}),
              j("down(f,A2,B2) => f")));
  CHECK(equal(apply_rule("def_down", {j("f : A -> B"), j("A2 => A"), j("B2 => B")}),
              j("def(A,B,down(f,A2,B2))")));
  CHECK(equal(apply_rule("bounds_and", {j("f : A -> B"), j("g : B -> C")}),
              j("f & g : A & B -> B & C")));

  // wrong shape names the offending premise
  CHECK_THROWS_WITH_AS(apply_rule("id_impl", {j("f => h")}),
                       doctest::Contains("premise 1"), SchemaMismatch);
  CHECK_THROWS_AS(apply_rule("star", {j("f => h")}), SchemaMismatch);
  CHECK_THROWS_AS(apply_rule("no_such_rule", {}), SchemaMismatch);
  // axiom-style schemas are underdetermined in the forward direction
  CHECK_THROWS_AS(apply_rule("refl", {}), SchemaMismatch);
}

TEST_CASE("printer and parser round-trip") {
  Theory t = theorem_theory();
  auto roundtrip = [&](const char* s) {
    Judgment j1 = parse_judgment(s, t.sig, oracle(t));
    Judgment j2 = parse_judgment(to_string(j1), t.sig, oracle(t));
    CHECK(equal(j1, j2));
    CHECK(to_string(j1) == to_string(j2));
  };
  roundtrip("f : A -> B");
  roundtrip("down(g,B2,C2) o down(f,A2,B2) => down(g o f,A2,C2)");
  roundtrip("def(A,B,ldown(f,A2))");
  roundtrip("~f o (g o f) => top");
  roundtrip("f & g | h => top");
  roundtrip("A & !B => A | B");
  roundtrip("A ~> B => top ~> B");
  roundtrip("id(A & B) => id(A)");
  roundtrip("f => rup(lup(f,A),B)");
}

TEST_CASE("operator precedence") {
  Theory t = theorem_theory();
  auto j = [&](const char* s) { return parse_judgment(s, t.sig, oracle(t)); };
  // o binds tighter than &, & tighter than |
  CHECK(equal(j("g o f & h | f => top"), j("((g o f) & h) | f => top")));
  CHECK(to_string(j("(f | h) & h => h")) == "(f | h) & h => h");
  // ~ binds to the nearest factor
  CHECK(equal(j("~g o f => top"), j("(~g) o f => top")));
}

TEST_CASE("dot sugar") {
  Theory t = onto::compile(
      onto::parse(slurp(corpus("thing_class_classification.cno"))));
  auto j = [&](const std::string& s) {
    return parse_judgment(s, t.sig, oracle(t));
  };

  // A.f : B is a typing of the base relation
  CHECK(equal(j("Classification.classified : Thing"),
              j("classified : Classification -> Thing")));
  // on the declared domain the path is the relation itself
  CHECK(equal(j("Classification.classified => classified"),
              j("classified => classified")));
  // on a declared subclass it elaborates to the domain restriction
  Judgment elaborated = j("UpperBoundOfNumberRange.classifier => classifier");
  CHECK(to_string(elaborated) ==
        "ldown(classifier,UpperBoundOfNumberRange) => classifier");
  // elaboration is idempotent through the printer
  CHECK(equal(elaborated, j(to_string(elaborated))));
  // a redeclared path is its own symbol and wins over elaboration
  CHECK(to_string(j("UpperBoundOfNumberRange.classified => classified")) ==
        "UpperBoundOfNumberRange.classified => classified");
  // unrelated classes cannot take the attribute
  CHECK_THROWS_WITH_AS(j("ArithmeticNumber.classified => classified"),
                       doctest::Contains("not a declared subclass"), Error);
}

TEST_CASE("parse errors carry line and column") {
  Theory t = theorem_theory();
  CHECK_THROWS_WITH_AS(
      parse_script("1. f : A -> B [hyp]\n2. nonsense => f [refl]\n", t.sig,
                   oracle(t)),
      doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_judgment("f => ", t.sig, oracle(t)),
                       doctest::Contains("col 6"), Error);
  CHECK_THROWS_WITH_AS(parse_judgment("f @ g", t.sig, oracle(t)),
                       doctest::Contains("unexpected character"), Error);
  CHECK_THROWS_WITH_AS(
      parse_script("2. f : A -> B [hyp]\n", t.sig, oracle(t)),
      doctest::Contains("expected step 1"), Error);
}

TEST_CASE("a five-step definedness chain checks") {
  Theory t = theorem_theory();
  Derivation d = parse_script(
      "1. f : A -> B [hyp]\n"
      "2. A2 => A [hyp]\n"
      "3. B2 => B [hyp]\n"
      "4. def(A,B,down(f,A2,B2)) [def_down 1 2 3]\n"
      "5. down(f,A2,B2) => f [down 4]\n",
      t.sig, oracle(t));
  CHECK(check_derivation(d, t.judgments).ok);
}

TEST_CASE("hypothesis-free derivations hold in every model") {
  Theory t = theorem_theory();
  Derivation d = parse_script(
      "1. id(A) : A -> A [id_typing]\n"
      "2. id(A) => id(A) [refl]\n",
      t.sig, oracle(t));
  REQUIRE(check_derivation(d, t.judgments).ok);
  SoundnessConfig cfg;
  SoundnessReport r = soundness_sample(d, cfg);
  CHECK(r.pass());
  CHECK(r.hyp_models == r.candidates);  // nothing to assume
  CHECK_FALSE(r.vacuous);
}

TEST_CASE("the six theorem scripts check") {
  Theory t = theorem_theory();
  for (int i = 1; i <= 6; ++i) {
    std::string path = corpus("proofs/theorem" + std::to_string(i) + ".cpf");
    Derivation d = parse_script(slurp(path), t.sig, oracle(t));
    CheckReport r = check_derivation(d, t.judgments);
    INFO("theorem " << i << ": " << r.reason);
    CHECK(r.ok);
  }
}

TEST_CASE("mutation scripts are rejected at the intended step") {
  Theory t = theorem_theory();
  struct Case {
    const char* file;
    int step;
  };
  const Case cases[] = {
      {"m01_forward_reference.cpf", 4}, {"m02_unknown_rule.cpf", 2},
      {"m03_not_a_hypothesis.cpf", 1},  {"m04_forged_star.cpf", 3},
      {"m05_missing_def_premise.cpf", 2}, {"m06_swapped_def_premises.cpf", 4},
      {"m07_univ_down_arity.cpf", 6},   {"m08_reversed_id_impl.cpf", 3},
      {"m09_broken_transitivity.cpf", 3}, {"m10_hypothesis_with_premises.cpf", 2},
  };
  for (const Case& c : cases) {
    Derivation d = parse_script(slurp(corpus("proofs/mutations/") + c.file),
                                t.sig, oracle(t));
    CheckReport r = check_derivation(d, t.judgments);
    INFO(c.file << ": " << r.reason);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_step == c.step);
  }
}

TEST_CASE("evaluation over models") {
  ModelAssignment m;
  m.universe = 2;
  Universe u = make_universe(2);
  m.classes["A"] = make_subset(u, {0});
  m.classes["B"] = make_subset(u, {0, 1});
  m.rels["f"] = make_cell(m.classes["A"], m.classes["B"], {{0, 1}});

  Signature sig;
  sig.classes = {"A", "B"};
  sig.rels = {{"f", "A", "B"}};
  auto j = [&](const char* s) { return parse_judgment(s, sig, nullptr); };

  CHECK(eval_judgment(j("id(A) => id(B)"), m));       // S(A) inside S(B)
  CHECK_FALSE(eval_judgment(j("id(B) => id(A)"), m));
  CHECK(eval_judgment(j("f : A -> B"), m));
  CHECK(eval_judgment(j("f : B -> B"), m));  // boundaries contained, not equal
  CHECK_FALSE(eval_judgment(j("f : A -> A"), m));
  CHECK(eval_judgment(j("def(A,B,down(f,A,B))"), m));
  CHECK_FALSE(eval_judgment(j("def(A,B,up(f,A,A))"), m));  // B not inside A
  CHECK(eval_judgment(j("down(f,A,B) => f"), m));
  CHECK_THROWS_AS(eval_judgment(j("f o f => f"), m), BoundaryMismatch);

  ModelAssignment empty;
  empty.universe = 2;
  CHECK_THROWS_AS(eval_judgment(j("f => f"), empty), UnboundName);
}

TEST_CASE("the uniqueness encoding means injectivity") {
  Universe u = make_universe(2);
  Signature sig;
  sig.classes = {"A", "B"};
  sig.rels = {{"f", "A", "B"}};
  Judgment unique = parse_judgment("~f o f => id(A)", sig, nullptr);

  for (const Cell1& cell : laws::all_cells(u)) {
    ModelAssignment m;
    m.universe = 2;
    m.classes["A"] = cell.dom_set();
    m.classes["B"] = cell.cod_set();
    m.rels["f"] = cell;
    bool injective = true;
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int a2 = 0; a2 < 2; ++a2) {
        if (a1 != a2 && (cell.rows[a1] & cell.rows[a2])) injective = false;
      }
    }
    CHECK(eval_judgment(unique, m) == injective);
  }
}

TEST_CASE("distributivity instances hold in every sampled model") {
  Signature sig;
  sig.classes = {"A", "B", "C", "A2", "B2"};
  sig.rels = {{"f", "B", "C"}, {"g", "A", "B"}};
  Judgment inst = parse_judgment(
      "rdown(f,B2) o ldown(g,A2) => down(f o g,A2,B2)", sig, nullptr);
  Judgment back = parse_judgment(
      "down(f o g,A2,B2) => rdown(f,B2) o ldown(g,A2)", sig, nullptr);

  SoundnessConfig cfg;
  cfg.universe_size = 2;
  uint64_t composable = 0;
  uint64_t holds = 0;
  for_each_model({"A", "B", "C", "A2", "B2"}, {"f", "g"}, {}, cfg,
                 [&](const ModelAssignment& m) {
                   bool fwd, bwd;
                   try {
                     fwd = eval_judgment(inst, m);
                     bwd = eval_judgment(back, m);
                   } catch (const Error&) {
                     // non-composable assignment; the instance denotes
                     // nothing there
                     return;
                   }
                   ++composable;
                   if (fwd && bwd) ++holds;
                 });
  CHECK(composable > 0);
  CHECK(holds == composable);
}

TEST_CASE("derivation soundness sampling") {
  Theory t = theorem_theory();
  Derivation d =
      parse_script(slurp(corpus("proofs/theorem5.cpf")), t.sig, oracle(t));
  REQUIRE(check_derivation(d, t.judgments).ok);
  SoundnessConfig cfg;
  SoundnessReport r = soundness_sample(d, cfg);
  CHECK(r.pass());
  CHECK(r.hyp_models > 0);
  CHECK_FALSE(r.vacuous);

  // sampled mode at a larger universe
  cfg.exhaustive = false;
  cfg.universe_size = 4;
  cfg.samples = 2000;
  cfg.seed = 11;
  SoundnessReport rs = soundness_sample(d, cfg);
  CHECK(rs.pass());
}

TEST_CASE("vacuously sound derivations are flagged") {
  Signature sig;
  sig.classes = {"A"};
  Theory t;
  t.sig = sig;
  Judgment absurd = parse_judgment("top => bottom", sig, nullptr);
  t.judgments = {absurd};
  Derivation d;
  d.steps.push_back({1, absurd, "hyp", {}});
  REQUIRE(check_derivation(d, t.judgments).ok);
  SoundnessConfig cfg;
  cfg.universe_size = 1;
  SoundnessReport r = soundness_sample(d, cfg);
  CHECK(r.vacuous);
  CHECK(r.pass());
}

TEST_CASE("per-rule soundness spot checks at n=2") {
  SoundnessConfig cfg;
  for (const char* name : {"star", "univ_down", "univ_up", "distrib_down_fwd",
                           "bounds_and", "id_mono", "trans", "compl_join"}) {
    const Rule* rule = find_rule(name);
    REQUIRE(rule != nullptr);
    SoundnessReport r = rule_soundness(*rule, cfg);
    INFO(name);
    CHECK(r.violations == 0);
    CHECK(r.hyp_models > 0);
  }
}
