#ifndef CONCEPTORY_KERNEL_SEMANTICS_HPP
#define CONCEPTORY_KERNEL_SEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/cells.hpp"
#include "kernel/derivation.hpp"
#include "kernel/rules.hpp"
#include "kernel/terms.hpp"

// Semantic bridge: judgments evaluated over concrete models. Class terms
// denote subsets, relation terms denote 1-cells, implications denote the
// subset order / pair-set order.

namespace conceptory::kernel {

struct ModelAssignment {
  int universe = 1;
  std::map<std::string, Subset> classes;
  std::map<std::string, Cell1> rels;
};

Subset eval_class(const ClassPtr& t, const ModelAssignment& m);

/// Throws UnboundName for unassigned names; BoundaryMismatch /
/// NotASuperobject surface from the model when a term is ill-composed.
Cell1 eval_rel(const RelPtr& t, const ModelAssignment& m);

bool eval_judgment(const Judgment& j, const ModelAssignment& m);

struct SoundnessConfig {
  int universe_size = 2;
  bool exhaustive = true;  // exhaustive needs universe_size <= 2
  long samples = 10000;
  uint64_t seed = 0;
};

struct SoundnessReport {
  uint64_t candidates = 0;   // models enumerated or sampled
  uint64_t hyp_models = 0;   // models satisfying every hypothesis
  uint64_t ill_formed = 0;   // hypotheses held but a conclusion term was
                             // not denotable (skipped, counted)
  uint64_t violations = 0;
  bool vacuous = false;      // no model satisfied the hypotheses
  std::vector<std::string> examples;  // printable violating models

  bool pass() const { return violations == 0; }
};

std::string to_string(const ModelAssignment& m);

/// Enumerates (or samples) models over exactly the given names; class
/// inclusions and typings among `constraints` prune the search early.
/// Typed relation names range over all cells whose boundaries sit inside
/// the evaluated class sets.
void for_each_model(
    const std::vector<std::string>& classes,
    const std::vector<std::string>& rels,
    const std::vector<Judgment>& constraints, const SoundnessConfig& cfg,
    const std::function<void(const ModelAssignment&)>& visit);

/// Checks the derivation's hypotheses-to-conclusion implication over
/// models of its signature: whenever every "hyp" step holds, the last
/// step's judgment must hold.
SoundnessReport soundness_sample(const Derivation& d,
                                 const SoundnessConfig& cfg);

/// Per-rule schematic soundness: metavariables become fresh names, premise
/// instances guide the model enumeration, the conclusion must hold in
/// every premise-satisfying model where it denotes.
SoundnessReport rule_soundness(const Rule& rule, const SoundnessConfig& cfg);

}  // namespace conceptory::kernel

#endif
