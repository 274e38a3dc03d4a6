#ifndef CONCEPTORY_LAWS_LAWS_INTERNAL_HPP
#define CONCEPTORY_LAWS_LAWS_INTERNAL_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "core/cells.hpp"
#include "laws/enumerate.hpp"
#include "laws/laws.hpp"
#include "laws/report.hpp"
#include "laws/sampler.hpp"

namespace conceptory::laws::detail {

// Reports stay readable when something does go wrong; twenty concrete
// counterexamples are plenty to debug with.
constexpr size_t kMaxViolations = 20;

class Recorder {
 public:
  Recorder(std::string name, bool gating) {
    result_.name = std::move(name);
    result_.gating = gating;
    start_ = std::chrono::steady_clock::now();
  }

  void tally(uint64_t k = 1) { result_.cases_checked += k; }

  void fail(Violation v) {
    ++failures_;
    if (result_.violations.size() < kMaxViolations) {
      result_.violations.push_back(std::move(v));
    }
  }

  void note(std::string text) { result_.note = std::move(text); }

  uint64_t failures() const { return failures_; }

  LawResult finish() {
    result_.elapsed = std::chrono::steady_clock::now() - start_;
    if (failures_ > result_.violations.size()) {
      result_.note += (result_.note.empty() ? "" : "; ");
      result_.note += std::to_string(failures_ - result_.violations.size()) +
                      " further violations not recorded";
    }
    return std::move(result_);
  }

 private:
  LawResult result_;
  uint64_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

/// Shared enumeration state for one exhaustive run.
struct Ctx {
  Universe u;
  std::vector<Subset> subsets;
  std::vector<Cell1> cells;
  std::vector<std::vector<const Cell1*>> by_dom;
  std::vector<std::vector<const Cell1*>> by_cod;

  explicit Ctx(Universe uni) : u(uni) {
    subsets = all_subsets(u);
    cells = all_cells(u);
    by_dom.resize(1u << u.size);
    by_cod.resize(1u << u.size);
    for (const Cell1& c : cells) {
      by_dom[c.dom].push_back(&c);
      by_cod[c.cod].push_back(&c);
    }
  }
};

inline uint32_t row_support(const Cell1& f) {
  uint32_t s = 0;
  for (int a = 0; a < f.n; ++a) {
    if (f.rows[a]) s |= 1u << a;
  }
  return s;
}

inline uint32_t col_support(const Cell1& f) {
  uint32_t s = 0;
  for (int a = 0; a < f.n; ++a) s |= f.rows[a];
  return s;
}

/// Vertical composition: (x -> y) then (y -> z), joint cell must match
/// exactly.
inline TwoCell vcompose(const TwoCell& first, const TwoCell& second) {
  if (!(first.dst == second.src)) {
    throw NoSuchTwoCell("vertical composition: joint cells differ");
  }
  return TwoCell(first.src, second.dst);
}

/// Horizontal composition beta * alpha : beta.src o alpha.src ->
/// beta.dst o alpha.dst (alpha's cells applied first).
inline TwoCell hcompose(const TwoCell& beta, const TwoCell& alpha) {
  return TwoCell(compose(beta.src, alpha.src), compose(beta.dst, alpha.dst));
}

Violation make_violation(std::string detail,
                         std::vector<std::pair<std::string, Cell1>> cells,
                         std::vector<std::pair<std::string, Subset>> subsets);

/// Tri-state accumulator for replaying a recorded case: every applicable
/// assertion is re-run; premises that do not hold make a part inapplicable.
struct ReplayAcc {
  bool applicable = false;
  bool ok = true;

  void check(bool premises, bool assertion) {
    if (!premises) return;
    applicable = true;
    ok = ok && assertion;
  }
};

}  // namespace conceptory::laws::detail

namespace conceptory::laws {
// Per-file replay dispatchers (single-case re-evaluation of a violation).
CaseStatus replay_basic(const std::string& law, const Violation& v);
CaseStatus replay_struct(const std::string& law, const Violation& v);
}  // namespace conceptory::laws

#endif
