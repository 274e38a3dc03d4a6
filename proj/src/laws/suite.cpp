#include <algorithm>

#include "laws/laws.hpp"
#include "laws/laws_internal.hpp"

namespace conceptory::laws {

const std::vector<LawInfo>& registry() {
  static const std::vector<LawInfo> laws = {
      {"category", true, false, "units, associativity, preorder structure"},
      {"interchange", true, false, "composition is monotone in both factors"},
      {"restriction_universality", true, false, "restriction is the universal lower cell"},
      {"extension_universality", true, false, "extension is the universal upper cell"},
      {"absorption", true, false, "identity whiskering absorbs into the canonical arrows"},
      {"distrib", true, false, "one-sided restrictions/extensions compose exactly"},
      {"semidistrib", true, false, "semidistributivity inclusions"},
      {"functoriality", true, false, "monotone restriction/extension with (co)monoidal units"},
      {"monoidal_witnesses", true, false, "witness equations of the monoidal structure"},
      {"predicates", true, false, "adjunction-style predicates survive down/up"},
      {"predicates_literal", false, false, "same, under the literal composition order"},
      {"maps", true, false, "maps survive down/up; projections/injections are maps"},
      {"involution", true, false, "transpose, modular law, adjoint = transpose"},
      {"lattice", true, false, "boundary equations, lattice bounds, boolean laws"},
      {"theorems", true, false, "the six derived theorems, semantically"},
      {"hypothesis", false, true, "2-functoriality counterexample search"},
  };
  return laws;
}

LawResult run_law(const std::string& name, const SuiteConfig& cfg) {
  if (name == "category") return check_category(cfg);
  if (name == "interchange") return check_interchange(cfg);
  if (name == "restriction_universality") return check_restriction_universality(cfg);
  if (name == "extension_universality") return check_extension_universality(cfg);
  if (name == "absorption") return check_absorption(cfg);
  if (name == "distrib") return check_distrib(cfg);
  if (name == "semidistrib") return check_semidistrib(cfg);
  if (name == "functoriality") return check_functoriality(cfg);
  if (name == "monoidal_witnesses") return check_monoidal_witnesses(cfg);
  if (name == "predicates") return check_predicates(cfg, Convention::unit_counit);
  if (name == "predicates_literal") return check_predicates(cfg, Convention::literal_order);
  if (name == "maps") return check_maps(cfg);
  if (name == "involution") return check_involution(cfg);
  if (name == "lattice") return check_lattice(cfg);
  if (name == "theorems") return check_theorems(cfg);
  if (name == "hypothesis") return search_hypothesis(cfg);
  throw InputError("unknown law: " + name);
}

LawReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  for (const std::string& name : cfg.laws) {
    bool known = std::any_of(registry().begin(), registry().end(),
                             [&](const LawInfo& l) { return l.name == name; });
    if (!known) throw InputError("unknown law: " + name);
  }
  LawReport report;
  report.config = cfg;
  for (const LawInfo& info : registry()) {
    bool selected = cfg.laws.empty() ||
                    std::find(cfg.laws.begin(), cfg.laws.end(), info.name) !=
                        cfg.laws.end();
    if (!selected) continue;
    report.results.push_back(run_law(info.name, cfg));
  }
  return report;
}

CaseStatus replay(const std::string& law, const Violation& v) {
  CaseStatus s = replay_basic(law, v);
  if (s != CaseStatus::unknown_law) return s;
  return replay_struct(law, v);
}

}  // namespace conceptory::laws
