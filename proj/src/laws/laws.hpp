#ifndef CONCEPTORY_LAWS_LAWS_HPP
#define CONCEPTORY_LAWS_LAWS_HPP

#include <string>
#include <vector>

#include "laws/report.hpp"

// Machine verification of the model's laws: every proposition, corollary and
// witness equation checked by exhaustive enumeration at small universes and
// by seeded random sampling at larger ones. Violations carry the full cells
// so a failure can be replayed in isolation.

namespace conceptory::laws {

/// Composition-order reading for the four adjunction-style predicates. The
/// source formulas type-check oddly under their own stated order, so both
/// readings are implemented; only the unit/counit one is asserted.
enum class Convention { unit_counit, literal_order };

struct LawInfo {
  std::string name;
  bool gating;           // failures gate the suite (and the CLI exit status)
  bool exhaustive_only;  // skipped (with a note) in random mode
  std::string summary;
};

/// All laws in canonical run order.
const std::vector<LawInfo>& registry();

/// The four adjunction-style predicates over a 1-cell, k in 1..4. `search`
/// scans every cell of the universe for a witness (the definition used by
/// exhaustive runs); `direct` decides via canonical maximal witnesses, which
/// is what random sampling at larger universes uses. The two must agree —
/// a test pins that equivalence exhaustively.
bool adjunction_predicate_search(const Cell1& f, int k, Convention convention);
bool adjunction_predicate_direct(const Cell1& f, int k, Convention convention);

LawResult check_category(const SuiteConfig& cfg);
LawResult check_interchange(const SuiteConfig& cfg);
LawResult check_restriction_universality(const SuiteConfig& cfg);
LawResult check_extension_universality(const SuiteConfig& cfg);
LawResult check_absorption(const SuiteConfig& cfg);
LawResult check_distrib(const SuiteConfig& cfg);
LawResult check_semidistrib(const SuiteConfig& cfg);
LawResult check_functoriality(const SuiteConfig& cfg);
LawResult check_monoidal_witnesses(const SuiteConfig& cfg);
LawResult check_predicates(const SuiteConfig& cfg, Convention convention);
LawResult check_maps(const SuiteConfig& cfg);
LawResult check_involution(const SuiteConfig& cfg);
LawResult check_lattice(const SuiteConfig& cfg);
LawResult check_theorems(const SuiteConfig& cfg);
LawResult search_hypothesis(const SuiteConfig& cfg);

/// Runs one registry law by name (predicates_literal selects the reported-only
/// literal-order convention).
LawResult run_law(const std::string& name, const SuiteConfig& cfg);

/// Runs the configured selection (default: everything) in registry order.
LawReport run_suite(const SuiteConfig& cfg);

enum class CaseStatus { pass, fail, inapplicable, unknown_law };

/// Re-evaluates the single case recorded in a violation. A recorded
/// violation must come back as `fail`.
CaseStatus replay(const std::string& law, const Violation& v);

}  // namespace conceptory::laws

#endif
