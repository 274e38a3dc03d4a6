#include "laws/report.hpp"

#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"
#include "laws/laws.hpp"
#include "laws/laws_internal.hpp"

namespace conceptory::laws {

void validate(const SuiteConfig& cfg) {
  make_universe(cfg.universe_size);
  if (cfg.mode == Mode::exhaustive && cfg.universe_size > 3) {
    throw InputError("exhaustive law runs support universe sizes 1..3");
  }
  if (cfg.mode == Mode::random) {
    if (cfg.universe_size > 8) {
      throw InputError("random law runs support universe sizes 1..8");
    }
    if (cfg.samples < 1) {
      throw InputError("random law runs need at least 1 sample");
    }
  }
}

uint64_t derive_seed(uint64_t suite_seed, const std::string& law_name) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : law_name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  Sampler s(suite_seed ^ h);
  return s.next();
}

const Cell1* Violation::cell(const std::string& label) const {
  for (const auto& [name, c] : cells) {
    if (name == label) return &c;
  }
  return nullptr;
}

const Subset* Violation::subset(const std::string& label) const {
  for (const auto& [name, s] : subsets) {
    if (name == label) return &s;
  }
  return nullptr;
}

namespace detail {

Violation make_violation(std::string detail,
                         std::vector<std::pair<std::string, Cell1>> cells,
                         std::vector<std::pair<std::string, Subset>> subsets) {
  Violation v;
  v.detail = std::move(detail);
  v.cells = std::move(cells);
  v.subsets = std::move(subsets);
  return v;
}

}  // namespace detail

bool LawReport::pass() const {
  for (const LawResult& r : results) {
    if (r.gating && !r.violations.empty()) return false;
  }
  return true;
}

namespace {

const char* mode_name(Mode m) {
  return m == Mode::exhaustive ? "exhaustive" : "random";
}

}  // namespace

std::string to_text(const LawReport& report) {
  std::ostringstream os;
  os << "conceptory law report (schema 1)\n";
  os << "config: size=" << report.config.universe_size
     << " mode=" << mode_name(report.config.mode)
     << " samples=" << report.config.samples << " seed=" << report.config.seed
     << " laws=";
  if (report.config.laws.empty()) {
    os << "all";
  } else {
    for (size_t i = 0; i < report.config.laws.size(); ++i) {
      os << (i ? "," : "") << report.config.laws[i];
    }
  }
  os << '\n';
  for (const LawResult& r : report.results) {
    if (r.skipped) {
      os << r.name << ": skipped (" << r.note << ")\n";
      continue;
    }
    os << r.name << ": cases=" << r.cases_checked
       << " violations=" << r.violations.size()
       << (r.gating ? "" : " [report-only]") << '\n';
    if (!r.note.empty()) os << "  note: " << r.note << '\n';
    for (const Violation& v : r.violations) {
      os << "  violation: " << v.detail << '\n';
      for (const auto& [label, c] : v.cells) {
        os << "    " << label << " = " << to_string(c) << '\n';
      }
      for (const auto& [label, s] : v.subsets) {
        os << "    " << label << " = " << to_string(s) << '\n';
      }
    }
  }
  os << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string to_json(const LawReport& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["schema"] = 1;
  json cfg;
  cfg["universe_size"] = report.config.universe_size;
  cfg["mode"] = mode_name(report.config.mode);
  cfg["samples"] = report.config.samples;
  cfg["seed"] = report.config.seed;
  cfg["laws"] = report.config.laws;
  root["config"] = std::move(cfg);
  json results = json::array();
  for (const LawResult& r : report.results) {
    json jr;
    jr["name"] = r.name;
    jr["gating"] = r.gating;
    jr["skipped"] = r.skipped;
    jr["note"] = r.note;
    jr["cases"] = r.cases_checked;
    json violations = json::array();
    for (const Violation& v : r.violations) {
      json jv;
      jv["detail"] = v.detail;
      json cells;
      for (const auto& [label, c] : v.cells) {
        json jc;
        jc["dom"] = elements_of(c.dom_set());
        jc["cod"] = elements_of(c.cod_set());
        json pairs = json::array();
        for (auto [a, b] : c.pairs()) pairs.push_back(json::array({a, b}));
        jc["pairs"] = std::move(pairs);
        cells[label] = std::move(jc);
      }
      jv["cells"] = std::move(cells);
      json subs;
      for (const auto& [label, s] : v.subsets) subs[label] = elements_of(s);
      jv["subsets"] = std::move(subs);
      violations.push_back(std::move(jv));
    }
    jr["violations"] = std::move(violations);
    results.push_back(std::move(jr));
  }
  root["results"] = std::move(results);
  root["pass"] = report.pass();
  return root.dump(2) + "\n";
}

}  // namespace conceptory::laws
