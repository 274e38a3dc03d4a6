#ifndef CONCEPTORY_LAWS_REPORT_HPP
#define CONCEPTORY_LAWS_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/cells.hpp"

namespace conceptory::laws {

enum class Mode { exhaustive, random };

/// One law-suite run. Exhaustive mode enumerates every instance (universe
/// sizes 1..3); random mode draws seeded samples (sizes up to 8).
struct SuiteConfig {
  int universe_size = 2;
  Mode mode = Mode::exhaustive;
  long samples = 10000;
  uint64_t seed = 0;
  std::vector<std::string> laws;  // empty = the whole registry
};

/// Throws InputError when the config is outside the supported envelope.
void validate(const SuiteConfig& cfg);

/// A concrete counterexample: every cell and subset that entered the failed
/// check, labeled as the check names them, so the case can be replayed.
struct Violation {
  std::string detail;
  std::vector<std::pair<std::string, Cell1>> cells;
  std::vector<std::pair<std::string, Subset>> subsets;

  const Cell1* cell(const std::string& label) const;
  const Subset* subset(const std::string& label) const;
};

struct LawResult {
  std::string name;
  bool gating = true;
  bool skipped = false;
  std::string note;  // enumeration space or skip reason
  uint64_t cases_checked = 0;
  std::vector<Violation> violations;
  // Wall-clock time; deliberately absent from the canonical serializations
  // so that identical inputs keep producing byte-identical reports.
  std::chrono::duration<double> elapsed{0};

  bool pass() const { return violations.empty(); }
};

struct LawReport {
  SuiteConfig config;
  std::vector<LawResult> results;

  /// True when no gating law has violations (skips do not fail the suite).
  bool pass() const;
};

std::string to_text(const LawReport& report);
std::string to_json(const LawReport& report);

}  // namespace conceptory::laws

#endif
