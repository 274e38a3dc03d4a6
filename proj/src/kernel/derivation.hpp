#ifndef CONCEPTORY_KERNEL_DERIVATION_HPP
#define CONCEPTORY_KERNEL_DERIVATION_HPP

#include <string>
#include <vector>

#include "kernel/terms.hpp"

namespace conceptory::kernel {

/// One proof step: a judgment plus its justification — "hyp", or a rule
/// name with the indices of earlier steps used as premises.
struct Step {
  int index = 0;
  Judgment judgment;
  std::string rule;
  std::vector<int> premises;
};

struct Derivation {
  std::vector<Step> steps;
};

struct CheckReport {
  bool ok = true;
  int failing_step = 0;  // 1-based when !ok
  std::string reason;
};

/// Structural checking only: every step must be a hypothesis or a correct
/// rule instance over strictly earlier steps. Deterministic and total; a
/// rejection pinpoints exactly one step.
CheckReport check_derivation(const Derivation& d,
                             const std::vector<Judgment>& hyps);

}  // namespace conceptory::kernel

#endif
