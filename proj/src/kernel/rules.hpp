#ifndef CONCEPTORY_KERNEL_RULES_HPP
#define CONCEPTORY_KERNEL_RULES_HPP

#include <map>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "kernel/terms.hpp"

// Inference rules as data. Matching is first-order syntactic unification of
// rule schemas against concrete judgments: no associativity or
// commutativity is built in, so scripts spell out any rebracketing.

namespace conceptory::kernel {

struct SchemaMismatch : Error {
  explicit SchemaMismatch(const std::string& what)
      : Error(ErrorCode::input, what) {}
};

struct RuleSchema {
  std::vector<Judgment> premises;
  Judgment conclusion;
};

/// Tier: "core" rules are the displayed inference rules of the calculus,
/// "structural" ones carry the typing/definedness bookkeeping that the
/// display leaves implicit, "propositional" is the Boolean algebra base
/// (registered for both class- and relation-level implications).
struct Rule {
  std::string name;
  std::string tier;
  std::vector<RuleSchema> schemas;
};

const std::vector<Rule>& rule_table();
const Rule* find_rule(const std::string& name);

struct Subst {
  std::map<std::string, ClassPtr> cls;
  std::map<std::string, RelPtr> rel;
};

bool match(const ClassPtr& pattern, const ClassPtr& instance, Subst& s);
bool match(const RelPtr& pattern, const RelPtr& instance, Subst& s);
bool match(const Judgment& pattern, const Judgment& instance, Subst& s);

ClassPtr substitute(const ClassPtr& pattern, const Subst& s);
RelPtr substitute(const RelPtr& pattern, const Subst& s);
Judgment substitute(const Judgment& pattern, const Subst& s);

/// Forward application: unify the premises against the rule's premise
/// schemas and return the instantiated conclusion. Throws SchemaMismatch
/// when the shape or arity is wrong (naming the first premise that fails)
/// or when the premises alone do not determine the conclusion (axiom-style
/// schemas; those are checked against a claimed judgment instead).
Judgment apply_rule(const std::string& rule,
                    const std::vector<Judgment>& premises);

/// Checker-side matching: does (premises, conclusion) instantiate one of
/// the rule's schemas under a single substitution?
bool matches_rule(const Rule& rule, const std::vector<Judgment>& premises,
                  const Judgment& conclusion, std::string* why);

}  // namespace conceptory::kernel

#endif
