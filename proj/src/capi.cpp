#include "conceptory.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/cells.hpp"
#include "core/errors.hpp"
#include "kernel/derivation.hpp"
#include "kernel/parse.hpp"
#include "kernel/theory.hpp"
#include "laws/laws.hpp"
#include "ontology/ontology.hpp"

using conceptory::Cell1;
using conceptory::Error;
using conceptory::ErrorCode;
using conceptory::Subset;
using conceptory::Universe;

struct cy_cell {
  Cell1 cell;
};

struct cy_theory {
  conceptory::kernel::Theory theory;
};

namespace {

thread_local std::string g_last_error;

cy_status map_error(const Error& e) {
  g_last_error = e.what();
  return e.code() == ErrorCode::internal ? CY_INTERNAL : CY_INPUT_ERROR;
}

template <class F>
cy_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CY_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cy_status out_cell(Cell1 cell, cy_cell** out) {
  *out = new cy_cell{std::move(cell)};
  return CY_OK;
}

Subset bits_subset(const Cell1& ref, uint32_t bits) {
  return conceptory::subset_bits(Universe{ref.n}, bits);
}

}  // namespace

extern "C" {

const char* cy_version(void) { return "conceptory 1.0.0"; }

const char* cy_last_error(void) { return g_last_error.c_str(); }

void cy_string_free(char* s) { std::free(s); }

cy_status cy_cell_make(int universe, uint32_t dom_bits, uint32_t cod_bits,
                       const uint8_t* pair_a, const uint8_t* pair_b,
                       size_t pair_count, cy_cell** out) {
  return guarded([&] {
    Universe u = conceptory::make_universe(universe);
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < pair_count; ++i) {
      pairs.emplace_back(pair_a[i], pair_b[i]);
    }
    return out_cell(conceptory::make_cell(conceptory::subset_bits(u, dom_bits),
                                          conceptory::subset_bits(u, cod_bits),
                                          pairs),
                    out);
  });
}

cy_status cy_cell_identity(int universe, uint32_t bits, cy_cell** out) {
  return guarded([&] {
    Universe u = conceptory::make_universe(universe);
    return out_cell(conceptory::identity(conceptory::subset_bits(u, bits)), out);
  });
}

cy_status cy_cell_top(int universe, cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::top(conceptory::make_universe(universe)), out);
  });
}

cy_status cy_cell_bottom(int universe, cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::bottom(conceptory::make_universe(universe)), out);
  });
}

void cy_cell_free(cy_cell* cell) { delete cell; }

int cy_cell_universe(const cy_cell* cell) { return cell->cell.n; }
uint32_t cy_cell_dom(const cy_cell* cell) { return cell->cell.dom; }
uint32_t cy_cell_cod(const cy_cell* cell) { return cell->cell.cod; }

size_t cy_cell_pairs(const cy_cell* cell, uint8_t* a_out, uint8_t* b_out,
                     size_t cap) {
  auto pairs = cell->cell.pairs();
  for (size_t i = 0; i < pairs.size() && i < cap; ++i) {
    a_out[i] = static_cast<uint8_t>(pairs[i].first);
    b_out[i] = static_cast<uint8_t>(pairs[i].second);
  }
  return pairs.size();
}

cy_status cy_cell_compose(const cy_cell* f, const cy_cell* g, cy_cell** out) {
  return guarded(
      [&] { return out_cell(conceptory::compose(f->cell, g->cell), out); });
}

cy_status cy_cell_meet(const cy_cell* f, const cy_cell* g, cy_cell** out) {
  return guarded(
      [&] { return out_cell(conceptory::meet(f->cell, g->cell), out); });
}

cy_status cy_cell_join(const cy_cell* f, const cy_cell* g, cy_cell** out) {
  return guarded(
      [&] { return out_cell(conceptory::join(f->cell, g->cell), out); });
}

cy_status cy_cell_complement(const cy_cell* f, cy_cell** out) {
  return guarded([&] { return out_cell(conceptory::complement(f->cell), out); });
}

cy_status cy_cell_impl(const cy_cell* f, const cy_cell* g, cy_cell** out) {
  return guarded(
      [&] { return out_cell(conceptory::impl(f->cell, g->cell), out); });
}

cy_status cy_cell_transpose(const cy_cell* f, cy_cell** out) {
  return guarded([&] { return out_cell(conceptory::transpose(f->cell), out); });
}

cy_status cy_cell_restrict(const cy_cell* f, uint32_t dom_bits,
                           uint32_t cod_bits, cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::restrict_cell(f->cell,
                                              bits_subset(f->cell, dom_bits),
                                              bits_subset(f->cell, cod_bits)),
                    out);
  });
}

cy_status cy_cell_extend(const cy_cell* f, uint32_t dom_bits, uint32_t cod_bits,
                         cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::extend_cell(f->cell,
                                            bits_subset(f->cell, dom_bits),
                                            bits_subset(f->cell, cod_bits)),
                    out);
  });
}

cy_status cy_cell_restrict_dom(const cy_cell* f, uint32_t bits, cy_cell** out) {
  return guarded([&] {
    return out_cell(
        conceptory::restrict_dom(f->cell, bits_subset(f->cell, bits)), out);
  });
}

cy_status cy_cell_restrict_cod(const cy_cell* f, uint32_t bits, cy_cell** out) {
  return guarded([&] {
    return out_cell(
        conceptory::restrict_cod(f->cell, bits_subset(f->cell, bits)), out);
  });
}

cy_status cy_cell_extend_dom(const cy_cell* f, uint32_t bits, cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::extend_dom(f->cell, bits_subset(f->cell, bits)),
                    out);
  });
}

cy_status cy_cell_extend_cod(const cy_cell* f, uint32_t bits, cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::extend_cod(f->cell, bits_subset(f->cell, bits)),
                    out);
  });
}

cy_status cy_cell_logical_pullback(const cy_cell* f, const cy_cell* g,
                                   cy_cell** out) {
  return guarded([&] {
    return out_cell(conceptory::logical_pullback(f->cell, g->cell), out);
  });
}

cy_status cy_cell_projection(int universe, uint32_t a_bits, uint32_t b_bits,
                             int right_side, cy_cell** out) {
  return guarded([&] {
    Universe u = conceptory::make_universe(universe);
    return out_cell(conceptory::projection(
                        conceptory::subset_bits(u, a_bits),
                        conceptory::subset_bits(u, b_bits),
                        right_side ? conceptory::Side::right
                                   : conceptory::Side::left),
                    out);
  });
}

cy_status cy_cell_injection(int universe, uint32_t a_bits, uint32_t b_bits,
                            int right_side, cy_cell** out) {
  return guarded([&] {
    Universe u = conceptory::make_universe(universe);
    return out_cell(conceptory::injection(
                        conceptory::subset_bits(u, a_bits),
                        conceptory::subset_bits(u, b_bits),
                        right_side ? conceptory::Side::right
                                   : conceptory::Side::left),
                    out);
  });
}

int cy_cell_leq(const cy_cell* f, const cy_cell* g) {
  try {
    return conceptory::leq(f->cell, g->cell) ? 1 : 0;
  } catch (const Error& e) {
    map_error(e);
    return -1;
  }
}

int cy_cell_order_equiv(const cy_cell* f, const cy_cell* g) {
  try {
    return conceptory::order_equiv(f->cell, g->cell) ? 1 : 0;
  } catch (const Error& e) {
    map_error(e);
    return -1;
  }
}

int cy_cell_is_map(const cy_cell* f) {
  return conceptory::is_map(f->cell) ? 1 : 0;
}

cy_status cy_cell_right_adjoint(const cy_cell* f, cy_cell** out) {
  return guarded([&]() -> cy_status {
    auto adj = conceptory::right_adjoint(f->cell);
    if (!adj) {
      g_last_error = "cell is not a map; no right adjoint exists";
      return CY_FAIL;
    }
    return out_cell(*adj, out);
  });
}

cy_status cy_laws_run(int universe_size, const char* mode, long samples,
                      uint64_t seed, const char* laws_csv, const char* format,
                      char** out_report) {
  return guarded([&]() -> cy_status {
    namespace laws = conceptory::laws;
    laws::SuiteConfig cfg;
    cfg.universe_size = universe_size;
    std::string mode_s = mode ? mode : "exhaustive";
    if (mode_s == "exhaustive") {
      cfg.mode = laws::Mode::exhaustive;
    } else if (mode_s == "random") {
      cfg.mode = laws::Mode::random;
    } else {
      throw conceptory::InputError("mode must be 'exhaustive' or 'random'");
    }
    cfg.samples = samples;
    cfg.seed = seed;
    if (laws_csv && *laws_csv) {
      std::string csv = laws_csv;
      size_t start = 0;
      while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        std::string name = csv.substr(start, comma - start);
        if (!name.empty()) cfg.laws.push_back(name);
        start = comma + 1;
      }
    }
    laws::LawReport report = laws::run_suite(cfg);
    std::string fmt = format ? format : "text";
    if (fmt == "json") {
      *out_report = dup_string(laws::to_json(report));
    } else if (fmt == "text") {
      *out_report = dup_string(laws::to_text(report));
    } else {
      throw conceptory::InputError("format must be 'text' or 'json'");
    }
    return report.pass() ? CY_OK : CY_FAIL;
  });
}

cy_status cy_theory_load(const char* source_text, cy_theory** out) {
  return guarded([&] {
    auto src = conceptory::onto::parse(source_text ? source_text : "");
    *out = new cy_theory{conceptory::onto::compile(src)};
    return CY_OK;
  });
}

void cy_theory_free(cy_theory* t) { delete t; }

cy_status cy_theory_listing(const cy_theory* t, char** out) {
  return guarded([&] {
    std::ostringstream os;
    for (const auto& j : t->theory.judgments) {
      os << conceptory::kernel::to_string(j) << '\n';
    }
    *out = dup_string(os.str());
    return CY_OK;
  });
}

cy_status cy_theory_find_model(const cy_theory* t, int max_universe,
                               int nonempty, char** out_model_json) {
  return guarded([&]() -> cy_status {
    auto model =
        conceptory::onto::find_model(t->theory, max_universe, nonempty != 0);
    if (!model) {
      g_last_error = "no model up to universe size " +
                     std::to_string(max_universe) +
                     " (bounded search; not a proof of inconsistency)";
      return CY_FAIL;
    }
    *out_model_json = dup_string(conceptory::onto::write_model(t->theory, *model));
    return CY_OK;
  });
}

cy_status cy_theory_verify(const cy_theory* t, const char* model_json,
                           char** out_report) {
  return guarded([&]() -> cy_status {
    auto m = conceptory::onto::read_model(t->theory, model_json ? model_json : "");
    auto report = conceptory::onto::verify_model(t->theory, m);
    std::ostringstream os;
    for (const auto& e : report.entries) {
      os << (e.holds ? "[ok] " : "[no] ") << e.judgment;
      if (!e.error.empty()) os << "  (" << e.error << ")";
      os << '\n';
    }
    os << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
    *out_report = dup_string(os.str());
    return report.pass() ? CY_OK : CY_FAIL;
  });
}

cy_status cy_prove(const char* script_text, const cy_theory* theory,
                   char** out_report) {
  return guarded([&]() -> cy_status {
    namespace kernel = conceptory::kernel;
    static const kernel::Theory empty_theory;
    const kernel::Theory& thy = theory ? theory->theory : empty_theory;
    kernel::Derivation d = kernel::parse_script(
        script_text ? script_text : "", thy.sig,
        [&thy](const std::string& a, const std::string& b) {
          return thy.declared_subclass(a, b);
        });
    kernel::CheckReport report = kernel::check_derivation(d, thy.judgments);
    std::ostringstream os;
    if (report.ok) {
      os << "checked " << d.steps.size() << " steps: pass\n";
    } else {
      os << "step " << report.failing_step << ": " << report.reason << '\n';
      os << "result: FAIL\n";
    }
    *out_report = dup_string(os.str());
    return report.ok ? CY_OK : CY_FAIL;
  });
}

}  // extern "C"
