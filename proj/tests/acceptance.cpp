// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is pinned — tolerances are exact, no calibration knobs.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kernel/derivation.hpp"
#include "kernel/parse.hpp"
#include "kernel/rules.hpp"
#include "kernel/semantics.hpp"
#include "laws/enumerate.hpp"
#include "laws/laws.hpp"
#include "laws/sampler.hpp"
#include "ontology/ontology.hpp"

using namespace conceptory;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
              what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string corpus(const std::string& rel) {
  return std::string(CORPUS_DIR) + "/" + rel;
}

bool total_on_dom(const Cell1& f) {
  for (int a : elements_of(f.dom_set())) {
    if (f.rows[a] == 0) return false;
  }
  return true;
}

bool at_most_one_image(const Cell1& f) {
  for (int a = 0; a < f.n; ++a) {
    if (__builtin_popcount(f.rows[a]) > 1) return false;
  }
  return true;
}

bool injective_rows(const Cell1& f) {
  for (int a1 = 0; a1 < f.n; ++a1) {
    for (int a2 = a1 + 1; a2 < f.n; ++a2) {
      if (f.rows[a1] & f.rows[a2]) return false;
    }
  }
  return true;
}

// independent adjunction search: scan every candidate with the right
// boundaries for the unit/counit pair
struct AdjointSearch {
  bool found = false;
  bool adjoint_is_transpose = true;
};

AdjointSearch search_adjoint(const Cell1& f) {
  AdjointSearch result;
  Cell1 id_a = identity(f.dom_set());
  Cell1 id_b = identity(f.cod_set());
  Cell1 tf = transpose(f);
  for (const Cell1& g : laws::cells_between(f.cod_set(), f.dom_set())) {
    if (leq(id_a, compose(g, f)) && leq(compose(f, g), id_b)) {
      result.found = true;
      if (!order_equiv(g, tf)) result.adjoint_is_transpose = false;
    }
  }
  return result;
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  laws::SuiteConfig cfg;
  cfg.universe_size = 2;
  cfg.mode = laws::Mode::exhaustive;
  laws::LawReport rep = laws::run_suite(cfg);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  bool clean = true;
  uint64_t cases = 0;
  for (const auto& r : rep.results) {
    cases += r.cases_checked;
    if (r.gating && !r.violations.empty()) clean = false;
  }
  bool cells_ok = laws::all_cells(make_universe(2)).size() == 47;
  std::ostringstream detail;
  detail << cases << " cases over 47 one-cells in " << secs << "s";
  report(1, "exhaustive law suite at n=2 is clean within 30s",
         clean && cells_ok && secs < 30.0 && rep.pass(), detail.str());
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
  laws::SuiteConfig cfg;
  cfg.universe_size = 4;
  cfg.mode = laws::Mode::random;
  cfg.samples = 10000;
  cfg.seed = 1;
  laws::LawReport a = laws::run_suite(cfg);
  laws::LawReport b = laws::run_suite(cfg);
  bool clean = a.pass();
  bool enough = true;
  for (const auto& r : a.results) {
    if (!r.skipped && r.cases_checked < 10000) enough = false;
  }
  bool identical = laws::to_text(a) == laws::to_text(b) &&
                   laws::to_json(a) == laws::to_json(b);
  report(2, "random suite at n=4 (seed 1, >=10^4 samples/law) is clean and "
            "byte-identical across runs",
         clean && enough && identical);
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
  bool ok = true;
  for (const Cell1& f : laws::all_cells(make_universe(2))) {
    bool oracle = total_on_dom(f) && at_most_one_image(f);
    AdjointSearch adj = search_adjoint(f);
    if (is_map(f) != oracle || adj.found != oracle ||
        !adj.adjoint_is_transpose) {
      ok = false;
    }
  }
  laws::Sampler rng(41);
  Universe u4 = make_universe(4);
  for (int i = 0; i < 10000 && ok; ++i) {
    Cell1 f = rng.cell(u4);
    bool oracle = total_on_dom(f) && at_most_one_image(f);
    AdjointSearch adj = search_adjoint(f);
    ok = is_map(f) == oracle && adj.found == oracle &&
         adj.adjoint_is_transpose;
  }
  report(3, "map <=> total+functional <=> adjunction search, adjoint = "
            "transpose (n=2 exhaustive, n=4 sampled)",
         ok);
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
  kernel::Signature sig;
  sig.classes = {"A", "B"};
  sig.rels = {{"f", "A", "B"}};
  kernel::Judgment lower = kernel::parse_judgment("id(A) => ~f o f", sig, nullptr);
  kernel::Judgment upper = kernel::parse_judgment("f o ~f => id(B)", sig, nullptr);
  kernel::Judgment unique = kernel::parse_judgment("~f o f => id(A)", sig, nullptr);

  bool ok = true;
  for (const Cell1& cell : laws::all_cells(make_universe(2))) {
    kernel::ModelAssignment m;
    m.universe = 2;
    m.classes["A"] = cell.dom_set();
    m.classes["B"] = cell.cod_set();
    m.rels["f"] = cell;
    if (kernel::eval_judgment(lower, m) != total_on_dom(cell)) ok = false;
    if (kernel::eval_judgment(upper, m) != at_most_one_image(cell)) ok = false;
    if (kernel::eval_judgment(unique, m) != injective_rows(cell)) ok = false;
  }
  report(4, "the three cardinality encodings are exactly their counting "
            "properties on all 47 cells",
         ok);
}

// --- criterion 5 -----------------------------------------------------------

void criterion5() {
  Universe u = make_universe(3);
  bool ok = true;
  uint64_t cases = 0;
  for (uint32_t c = 0; c <= u.mask() && ok; ++c) {
    Subset cod{u.size, c};
    for (uint32_t d1 = 0; d1 <= u.mask() && ok; ++d1) {
      for (const Cell1& f : laws::cells_between(Subset{u.size, d1}, cod)) {
        for (uint32_t d2 = 0; d2 <= u.mask() && ok; ++d2) {
          for (const Cell1& g : laws::cells_between(Subset{u.size, d2}, cod)) {
            ++cases;
            Cell1 q = logical_pullback(f, g);
            if (!(restrict_dom(f, q.dom_set()) == q) ||
                !(restrict_dom(g, q.dom_set()) == q)) {
              ok = false;
              break;
            }
            laws::for_each_submask(d1 & d2, [&](uint32_t dp) {
              Subset dd{u.size, dp};
              if (restrict_dom(f, dd) == restrict_dom(g, dd) &&
                  !leq(restrict_dom(f, dd), q)) {
                ok = false;
              }
            });
          }
        }
      }
    }
  }
  report(5, "logical pullback satisfies both restriction equations and "
            "dominates every agreeing domain (n=3 exhaustive)",
         ok, std::to_string(cases) + " codomain-sharing pairs");
}

// --- criterion 6 -----------------------------------------------------------

void criterion6() {
  onto::Theory t =
      onto::compile(onto::parse(slurp(corpus("thing_class_classification.cno"))));
  std::ostringstream listing;
  for (const auto& j : t.judgments) listing << kernel::to_string(j) << '\n';
  bool golden_listing =
      listing.str() == slurp(corpus("golden/thing_class_classification.listing.txt"));

  auto model = onto::find_model(t, 6, true);
  bool model_found = model.has_value();
  bool golden_model =
      model_found &&
      onto::write_model(t, *model) ==
          slurp(corpus("golden/thing_class_classification.model.json"));

  bool redeclared_ok = true;
  for (int bound = 1; bound <= 4; ++bound) {
    for (bool nonempty : {false, true}) {
      auto m = onto::find_model(t, bound, nonempty);
      if (!m) continue;
      Cell1 parent = m->rels.at("classified");
      Cell1 expected = restrict_cell(
          parent, m->classes.at("UpperBoundOfNumberRange"),
          m->classes.at("ArithmeticNumber"));
      if (!(m->rels.at("UpperBoundOfNumberRange.classified") == expected)) {
        redeclared_ok = false;
      }
    }
  }
  report(6, "mini corpus compiles to the golden judgment forms, has a model "
            "at n<=6 nonempty, and every found model restricts the "
            "redeclared attribute exactly",
         golden_listing && model_found && golden_model && redeclared_ok);
}

// --- criterion 7 -----------------------------------------------------------

void criterion7() {
  onto::Theory t =
      onto::compile(onto::parse(slurp(corpus("proofs/theorems.cno"))));
  auto oracle = [&t](const std::string& a, const std::string& b) {
    return t.declared_subclass(a, b);
  };

  bool scripts_ok = true;
  for (int i = 1; i <= 6; ++i) {
    auto d = kernel::parse_script(
        slurp(corpus("proofs/theorem" + std::to_string(i) + ".cpf")), t.sig,
        oracle);
    if (!kernel::check_derivation(d, t.judgments).ok) scripts_ok = false;
  }

  struct Mutation {
    const char* file;
    int step;
  };
  const Mutation mutations[] = {
      {"m01_forward_reference.cpf", 4}, {"m02_unknown_rule.cpf", 2},
      {"m03_not_a_hypothesis.cpf", 1},  {"m04_forged_star.cpf", 3},
      {"m05_missing_def_premise.cpf", 2}, {"m06_swapped_def_premises.cpf", 4},
      {"m07_univ_down_arity.cpf", 6},   {"m08_reversed_id_impl.cpf", 3},
      {"m09_broken_transitivity.cpf", 3}, {"m10_hypothesis_with_premises.cpf", 2},
  };
  bool mutations_ok = true;
  for (const Mutation& mu : mutations) {
    auto d = kernel::parse_script(slurp(corpus("proofs/mutations/") + mu.file),
                                  t.sig, oracle);
    auto r = kernel::check_derivation(d, t.judgments);
    if (r.ok || r.failing_step != mu.step) mutations_ok = false;
  }

  bool rules_ok = true;
  uint64_t rule_models = 0;
  kernel::SoundnessConfig cfg;
  for (const auto& rule : kernel::rule_table()) {
    auto r = kernel::rule_soundness(rule, cfg);
    rule_models += r.hyp_models;
    if (r.violations != 0) rules_ok = false;
  }
  report(7, "six theorem scripts check, ten mutations fail at the intended "
            "steps, per-rule soundness at n=2 is clean",
         scripts_ok && mutations_ok && rules_ok,
         std::to_string(rule_models) + " premise-satisfying models");
}

// --- criterion 8 -----------------------------------------------------------

// independent oracle: enumerate the full assignment space in the same
// canonical order without any of the finder's pruning
std::optional<kernel::ModelAssignment> brute_first_model(const onto::Theory& t,
                                                         int max_universe,
                                                         bool nonempty) {
  for (int n = 1; n <= max_universe; ++n) {
    Universe u = make_universe(n);
    kernel::ModelAssignment m;
    m.universe = n;
    std::optional<kernel::ModelAssignment> found;
    std::function<void(size_t)> classes = [&](size_t ci) {
      if (found) return;
      if (ci == t.sig.classes.size()) {
        std::function<void(size_t)> rels = [&](size_t ri) {
          if (found) return;
          if (ri == t.sig.rels.size()) {
            for (const auto& j : t.judgments) {
              try {
                if (!kernel::eval_judgment(j, m)) return;
              } catch (const Error&) {
                return;
              }
            }
            found = m;
            return;
          }
          const auto& rs = t.sig.rels[ri];
          for (const Cell1& cell : laws::cells_between(
                   m.classes.at(rs.dom), m.classes.at(rs.cod))) {
            m.rels[rs.name] = cell;
            rels(ri + 1);
            if (found) return;
          }
          m.rels.erase(rs.name);
        };
        rels(0);
        return;
      }
      for (uint32_t bits = nonempty ? 1 : 0; bits <= u.mask(); ++bits) {
        m.classes[t.sig.classes[ci]] = Subset{n, bits};
        classes(ci + 1);
        if (found) return;
      }
      m.classes.erase(t.sig.classes[ci]);
    };
    classes(0);
    if (found) return found;
  }
  return std::nullopt;
}

void criterion8() {
  bool ok = true;
  for (const char* file :
       {"thing_class_classification.cno", "vehicle_partition.cno",
        "registry_unique.cno", "unsat_pair.cno"}) {
    onto::Theory t = onto::compile(onto::parse(slurp(corpus(file))));
    for (bool nonempty : {false, true}) {
      auto brute = brute_first_model(t, 2, nonempty);
      auto fast = onto::find_model(t, 2, nonempty);
      if (brute.has_value() != fast.has_value()) {
        ok = false;
        continue;
      }
      if (!brute) continue;
      if (brute->universe != fast->universe ||
          !(brute->classes == fast->classes) || !(brute->rels == fast->rels)) {
        ok = false;
      }
      if (!onto::verify_model(t, *fast).pass()) ok = false;
    }
  }
  report(8, "find_model agrees with exhaustive assignment enumeration at "
            "n<=2 on all corpus theories",
         ok);
}

// --- criterion 9 -----------------------------------------------------------

void criterion9() {
  laws::SuiteConfig cfg;
  cfg.universe_size = 2;
  cfg.mode = laws::Mode::exhaustive;
  cfg.laws = {"hypothesis"};
  laws::LawReport a = laws::run_suite(cfg);
  laws::LawReport b = laws::run_suite(cfg);
  bool deterministic = laws::to_text(a) == laws::to_text(b) &&
                       laws::to_json(a) == laws::to_json(b);
  bool completed = a.results.size() == 1 && !a.results[0].skipped &&
                   a.results[0].cases_checked > 0;
  bool nongating = !a.results[0].gating;
  report(9, "hypothesis search at n=2 completes deterministically with a "
            "stable report and gates nothing",
         deterministic && completed && nongating);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures;
}
