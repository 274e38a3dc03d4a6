#include "kernel/derivation.hpp"

#include "kernel/rules.hpp"

namespace conceptory::kernel {

CheckReport check_derivation(const Derivation& d,
                             const std::vector<Judgment>& hyps) {
  auto fail = [](int step, std::string reason) {
    CheckReport r;
    r.ok = false;
    r.failing_step = step;
    r.reason = std::move(reason);
    return r;
  };

  for (size_t i = 0; i < d.steps.size(); ++i) {
    const Step& step = d.steps[i];
    int index = static_cast<int>(i) + 1;
    if (step.index != index) {
      return fail(index, "steps must be numbered 1..N in order");
    }
    if (step.rule == "hyp") {
      if (!step.premises.empty()) {
        return fail(index, "a hypothesis step takes no premises");
      }
      bool found = false;
      for (const Judgment& h : hyps) {
        if (equal(h, step.judgment)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return fail(index, to_string(step.judgment) +
                               " is not among the hypotheses");
      }
      continue;
    }
    const Rule* rule = find_rule(step.rule);
    if (!rule) {
      return fail(index, "unknown rule '" + step.rule + "'");
    }
    std::vector<Judgment> premises;
    for (int p : step.premises) {
      if (p < 1 || p >= index) {
        return fail(index, "premise " + std::to_string(p) +
                               " must reference an earlier step");
      }
      premises.push_back(d.steps[p - 1].judgment);
    }
    std::string why;
    if (!matches_rule(*rule, premises, step.judgment, &why)) {
      return fail(index, step.rule + ": " + why);
    }
  }
  return {};
}

}  // namespace conceptory::kernel
