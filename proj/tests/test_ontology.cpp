#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ontology/ontology.hpp"

using namespace conceptory;
using namespace conceptory::onto;

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

Theory load(const std::string& text) { return compile(parse(text)); }

std::string listing(const Theory& t) {
  std::ostringstream os;
  for (const auto& j : t.judgments) os << kernel::to_string(j) << '\n';
  return os.str();
}

}  // namespace

TEST_CASE("parsing declarations") {
  OntologySource src = parse(
      "class Thing\n"
      "class Classification <= Thing\n"
      "rel classified : Classification -> Thing\n");
  CHECK(src.decls.size() == 3);

  CHECK(parse("").decls.empty());
  CHECK(parse("// just a comment\n").decls.empty());

  CHECK_THROWS_WITH_AS(parse("rel f : A -> B\n"),
                       doctest::Contains("use before declaration"), Error);
  CHECK_THROWS_WITH_AS(parse("class A\nclass A\n"),
                       doctest::Contains("duplicate name"), Error);
  CHECK_THROWS_WITH_AS(parse("class down\n"),
                       doctest::Contains("reserved word"), Error);
  CHECK_THROWS_WITH_AS(parse("class A\nclass B <= A\nwhatever B\n"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse("class A\nrel f : A -> A\ncard A.f [0,*]\n"),
                       doctest::Contains("constrains nothing"), Error);
}

TEST_CASE("compiled judgment forms") {
  Theory t = load(
      "class A\nclass B\nclass C\n"
      "class Sub <= A\n"
      "rel f : A -> B\n"
      "card A.f [1,*]\n"
      "card A.f [0,1]\n"
      "unique A.f\n"
      "oneof (B, C)\n"
      "abstract A => B | C\n");
  CHECK(listing(t) ==
        "Sub => A\n"
        "f : A -> B\n"
        "id(A) => ~f o f\n"
        "f o ~f => id(B)\n"
        "~f o f => id(A)\n"
        "B & C => bottom\n"
        "A => B | C\n");
}

TEST_CASE("one-of over many names covers all unordered pairs") {
  Theory t = load("class A\nclass B\nclass C\nclass D\noneof (A, B, C, D)\n");
  CHECK(listing(t) ==
        "A & (B | C | D) => bottom\n"
        "B & (C | D) => bottom\n"
        "C & D => bottom\n");
}

TEST_CASE("redeclaration emits the equivalence pair and a fresh symbol") {
  Theory t = load(
      "class Thing\nclass Number <= Thing\n"
      "class Classification <= Thing\n"
      "class Bound <= Classification\n"
      "rel classified : Classification -> Thing\n"
      "redeclare Bound.classified : Number\n");
  CHECK(t.sig.rel("Bound.classified") != nullptr);
  CHECK(t.sig.rel("Bound.classified")->dom == "Bound");
  CHECK(t.sig.rel("Bound.classified")->cod == "Number");
  std::string l = listing(t);
  CHECK(l.find("Bound.classified => down(classified,Bound,Number)") !=
        std::string::npos);
  CHECK(l.find("down(classified,Bound,Number) => Bound.classified") !=
        std::string::npos);

  CHECK_THROWS_WITH_AS(
      load("class T\nclass A <= T\nclass B <= T\nrel f : A -> T\n"
           "redeclare B.f : T\n"),
      doctest::Contains("subclass"), Error);
}

TEST_CASE("cardinality on a subclass restricts the attribute first") {
  Theory t = load(
      "class T\nclass A <= T\nclass Sub <= A\n"
      "rel f : A -> T\n"
      "card Sub.f [1,*]\n");
  std::string l = listing(t);
  CHECK(l.find("id(Sub) => ~ldown(f,Sub) o ldown(f,Sub)") != std::string::npos);
}

TEST_CASE("golden corpus listing") {
  Theory t = load(slurp(corpus("thing_class_classification.cno")));
  CHECK(listing(t) == slurp(corpus("golden/thing_class_classification.listing.txt")));
}

TEST_CASE("find_model on the corpus") {
  Theory mini = load(slurp(corpus("thing_class_classification.cno")));
  auto model = find_model(mini, 6, true);
  REQUIRE(model.has_value());
  CHECK(write_model(mini, *model) ==
        slurp(corpus("golden/thing_class_classification.model.json")));
  CHECK(verify_model(mini, *model).pass());

  // an inconsistent theory has no nonempty model at any bound we try
  Theory unsat = load(slurp(corpus("unsat_pair.cno")));
  CHECK_FALSE(find_model(unsat, 3, true).has_value());
  // but the all-empty assignment trivially satisfies it
  auto empty_ok = find_model(unsat, 2, false);
  REQUIRE(empty_ok.has_value());
  CHECK(empty_ok->classes.at("A").empty());
  CHECK(verify_model(unsat, *empty_ok).pass());

  // the empty theory has the one-point model with nothing assigned
  Theory empty = load("");
  auto m = find_model(empty, 1, false);
  REQUIRE(m.has_value());
  CHECK(m->universe == 1);
  CHECK(m->classes.empty());
  CHECK(verify_model(empty, *m).pass());

  CHECK_THROWS_AS(find_model(empty, 17, false), Error);
}

TEST_CASE("every found model verifies") {
  for (const char* file :
       {"thing_class_classification.cno", "vehicle_partition.cno",
        "registry_unique.cno", "unsat_pair.cno"}) {
    Theory t = load(slurp(corpus(file)));
    for (int bound = 1; bound <= 3; ++bound) {
      for (bool nonempty : {false, true}) {
        auto m = find_model(t, bound, nonempty);
        if (!m) continue;
        INFO(file << " bound=" << bound << " nonempty=" << nonempty);
        CHECK(verify_model(t, *m).pass());
        if (nonempty) {
          for (const auto& [name, s] : m->classes) CHECK_FALSE(s.empty());
        }
      }
    }
  }
}

TEST_CASE("the partition corpus needs three elements when nonempty") {
  Theory t = load(slurp(corpus("vehicle_partition.cno")));
  CHECK_FALSE(find_model(t, 2, true).has_value());
  auto m = find_model(t, 4, true);
  REQUIRE(m.has_value());
  CHECK(m->universe == 3);
  // the partition is honest: the three subtypes are disjoint
  CHECK(subset_and(m->classes.at("Car"), m->classes.at("Bike")).empty());
  CHECK(subset_and(m->classes.at("Car"), m->classes.at("Boat")).empty());
  CHECK(subset_and(m->classes.at("Bike"), m->classes.at("Boat")).empty());
}

TEST_CASE("verify reports the judgment that breaks") {
  Theory t = load(slurp(corpus("thing_class_classification.cno")));
  auto model = find_model(t, 6, true);
  REQUIRE(model.has_value());

  // removing the classified pair leaves an instance unclassified
  ModelAssignment broken = *model;
  Cell1& cell = broken.rels.at("classified");
  Cell1 cleared = make_cell(cell.dom_set(), cell.cod_set(), {});
  cell = cleared;
  VerifyReport report = verify_model(t, broken);
  CHECK_FALSE(report.pass());
  bool card_failed = false;
  for (const auto& e : report.entries) {
    if (e.judgment == "id(Classification) => ~classified o classified") {
      card_failed = !e.holds;
    }
  }
  CHECK(card_failed);

  ModelAssignment missing = *model;
  missing.rels.erase("classifier");
  CHECK_THROWS_AS(verify_model(t, missing), UnboundName);
}

TEST_CASE("model JSON round trip and validation") {
  Theory t = load(slurp(corpus("thing_class_classification.cno")));
  auto model = find_model(t, 6, true);
  REQUIRE(model.has_value());
  std::string json = write_model(t, *model);
  ModelAssignment back = read_model(t, json);
  CHECK(write_model(t, back) == json);

  CHECK_THROWS_AS(read_model(t, "not json"), Error);
  CHECK_THROWS_AS(read_model(t, "{}"), Error);
  CHECK_THROWS_WITH_AS(
      read_model(t, R"({"universe": 1, "classes": {"Thing": [5]}})"),
      doctest::Contains("outside"), Error);
}

TEST_CASE("axioms participate like any other judgment") {
  Theory t = load(
      "class A\nclass B\n"
      "rel f : A -> B\n"
      "axiom id(A) => ~f o f\n"
      "axiom A => B\n");
  CHECK(t.judgments.size() == 3);
  auto m = find_model(t, 2, true);
  REQUIRE(m.has_value());
  CHECK(verify_model(t, *m).pass());
}
