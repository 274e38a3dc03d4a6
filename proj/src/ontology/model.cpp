#include <algorithm>
#include <functional>

#include <json.hpp>

#include "core/errors.hpp"
#include "ontology/ontology.hpp"

namespace conceptory::onto {

namespace {

using kernel::eval_class;
using kernel::eval_judgment;
using kernel::Judgment;
using kernel::RelSig;
using kernel::RelTerm;

struct NameSets {
  std::vector<std::vector<std::string>> classes;
  std::vector<std::vector<std::string>> rels;
};

NameSets collect(const Theory& t) {
  NameSets ns;
  for (const Judgment& j : t.judgments) {
    std::vector<std::string> cs, rs;
    kernel::collect_names(j, cs, rs);
    ns.classes.push_back(std::move(cs));
    ns.rels.push_back(std::move(rs));
  }
  return ns;
}

// Row-wise pruning for the three cardinality shapes, recognized
// structurally against the relation currently being assigned.
struct RowConstraints {
  bool total = false;       // rows inside the id class must be nonempty
  uint32_t total_set = 0;
  bool functional = false;  // rows are at most singletons inside the id class
  uint32_t functional_set = 0;
  bool injective = false;   // rows pairwise disjoint, support inside id class
  uint32_t injective_set = 0;
};

bool is_name(const kernel::RelPtr& r, const std::string& n) {
  return r && r->kind == RelTerm::Kind::name && r->name == n;
}

bool is_transpose_of(const kernel::RelPtr& r, const std::string& n) {
  return r && r->kind == RelTerm::Kind::transpose && is_name(r->lhs, n);
}

RowConstraints row_constraints(const Theory& t, const std::string& rel,
                               const kernel::ModelAssignment& m) {
  RowConstraints rc;
  for (const Judgment& j : t.judgments) {
    if (j.kind != Judgment::Kind::rel_impl) continue;
    const auto& a = j.rel_a;
    const auto& b = j.rel_b;
    try {
      if (a->kind == RelTerm::Kind::identity && b->kind == RelTerm::Kind::comp &&
          is_transpose_of(b->lhs, rel) && is_name(b->rhs, rel)) {
        rc.total = true;
        rc.total_set |= eval_class(a->c1, m).bits;
      }
      if (b->kind == RelTerm::Kind::identity && a->kind == RelTerm::Kind::comp &&
          is_name(a->lhs, rel) && is_transpose_of(a->rhs, rel)) {
        rc.functional = true;
        rc.functional_set |= eval_class(b->c1, m).bits;
      }
      if (b->kind == RelTerm::Kind::identity && a->kind == RelTerm::Kind::comp &&
          is_transpose_of(a->lhs, rel) && is_name(a->rhs, rel)) {
        rc.injective = true;
        rc.injective_set |= eval_class(b->c1, m).bits;
      }
    } catch (const Error&) {
      // class set not evaluable yet; skip the prune, the full check runs
      // once the judgment's names are assigned
    }
  }
  return rc;
}

struct Search {
  const Theory& t;
  Universe u;
  bool nonempty;
  NameSets names;
  kernel::ModelAssignment m;
  std::optional<kernel::ModelAssignment> found;

  bool partial_ok() {
    for (size_t i = 0; i < t.judgments.size(); ++i) {
      bool ready = true;
      for (const std::string& n : names.classes[i]) {
        if (!m.classes.count(n)) ready = false;
      }
      for (const std::string& n : names.rels[i]) {
        if (!m.rels.count(n)) ready = false;
      }
      if (!ready) continue;
      try {
        if (!eval_judgment(t.judgments[i], m)) return false;
      } catch (const Error&) {
        return false;
      }
    }
    return true;
  }

  bool assign_class(size_t ci) {
    if (ci == t.sig.classes.size()) return assign_rel(0);
    for (uint32_t bits = nonempty ? 1 : 0; bits <= u.mask(); ++bits) {
      m.classes[t.sig.classes[ci]] = Subset{u.size, bits};
      if (partial_ok() && assign_class(ci + 1)) return true;
    }
    m.classes.erase(t.sig.classes[ci]);
    return false;
  }

  bool assign_rel(size_t ri) {
    if (ri == t.sig.rels.size()) {
      found = m;
      return true;
    }
    const RelSig& rs = t.sig.rels[ri];
    Subset sa = m.classes.at(rs.dom);
    Subset sb = m.classes.at(rs.cod);
    RowConstraints rc = row_constraints(t, rs.name, m);
    Cell1 cell;
    cell.n = u.size;
    cell.dom = sa.bits;
    cell.cod = sb.bits;
    return assign_row(ri, cell, rc, u.size - 1);
  }

  // Rows filled from the highest element down so that the pair bitmask
  // grows in ascending numeric order, keeping the first model canonical.
  bool assign_row(size_t ri, Cell1& cell, const RowConstraints& rc, int row) {
    const RelSig& rs = t.sig.rels[ri];
    if (row < 0) {
      m.rels[rs.name] = cell;
      if (partial_ok() && assign_rel(ri + 1)) return true;
      m.rels.erase(rs.name);
      return false;
    }
    if (!cell.dom_set().contains(row)) {
      cell.rows[row] = 0;
      return assign_row(ri, cell, rc, row - 1);
    }
    uint32_t region = cell.cod;
    uint32_t choice = 0;
    for (;;) {
      bool ok = true;
      if (rc.total && ((rc.total_set >> row) & 1u) && choice == 0) ok = false;
      if (ok && rc.functional && __builtin_popcount(choice) > 1) ok = false;
      if (ok && rc.functional && choice != 0 &&
          (choice & ~rc.functional_set) != 0) {
        ok = false;
      }
      if (ok && rc.injective && choice != 0) {
        if (((rc.injective_set >> row) & 1u) == 0) {
          ok = false;
        } else {
          for (int r2 = row + 1; r2 < u.size; ++r2) {
            if (cell.rows[r2] & choice) ok = false;
          }
        }
      }
      if (ok) {
        cell.rows[row] = static_cast<uint16_t>(choice);
        if (assign_row(ri, cell, rc, row - 1)) return true;
      }
      if (choice == region) break;
      choice = (choice - region) & region;
    }
    cell.rows[row] = 0;
    return false;
  }
};

}  // namespace

std::optional<ModelAssignment> find_model(const Theory& t, int max_universe,
                                          bool nonempty) {
  if (max_universe < 1 || max_universe > kMaxUniverse) {
    throw InputError("universe bound must be in 1.." +
                     std::to_string(kMaxUniverse));
  }
  for (int n = 1; n <= max_universe; ++n) {
    Search s{t, make_universe(n), nonempty, collect(t), {}, {}};
    s.m.universe = n;
    if (s.assign_class(0)) return s.found;
  }
  return std::nullopt;
}

bool VerifyReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const VerifyEntry& e) { return e.holds; });
}

VerifyReport verify_model(const Theory& t, const ModelAssignment& m) {
  for (const std::string& c : t.sig.classes) {
    if (!m.classes.count(c)) {
      throw UnboundName("model assigns no set to class '" + c + "'");
    }
  }
  for (const RelSig& r : t.sig.rels) {
    if (!m.rels.count(r.name)) {
      throw UnboundName("model assigns no relation to '" + r.name + "'");
    }
  }
  VerifyReport report;
  for (const Judgment& j : t.judgments) {
    VerifyEntry e;
    e.judgment = kernel::to_string(j);
    try {
      e.holds = eval_judgment(j, m);
    } catch (const Error& err) {
      e.holds = false;
      e.error = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string write_model(const Theory& t, const ModelAssignment& m) {
  using json = nlohmann::ordered_json;
  json root;
  root["universe"] = m.universe;
  json classes;
  for (const std::string& c : t.sig.classes) {
    classes[c] = elements_of(m.classes.at(c));
  }
  root["classes"] = std::move(classes);
  json rels;
  for (const RelSig& r : t.sig.rels) {
    const Cell1& cell = m.rels.at(r.name);
    json jr;
    jr["dom"] = r.dom;
    jr["cod"] = r.cod;
    json pairs = json::array();
    for (auto [a, b] : cell.pairs()) pairs.push_back(json::array({a, b}));
    jr["pairs"] = std::move(pairs);
    rels[r.name] = std::move(jr);
  }
  root["rels"] = std::move(rels);
  return root.dump(2) + "\n";
}

ModelAssignment read_model(const Theory& t, const std::string& json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("model file is not valid JSON: ") + e.what());
  }
  ModelAssignment m;
  try {
    m.universe = root.at("universe").get<int>();
    Universe u = make_universe(m.universe);
    for (const std::string& c : t.sig.classes) {
      std::vector<int> elems =
          root.at("classes").at(c).get<std::vector<int>>();
      m.classes[c] = make_subset(u, elems);
    }
    for (const RelSig& r : t.sig.rels) {
      const auto& jr = root.at("rels").at(r.name);
      if (jr.at("dom").get<std::string>() != r.dom ||
          jr.at("cod").get<std::string>() != r.cod) {
        throw InputError("relation '" + r.name +
                         "' declares different boundaries than the theory");
      }
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : jr.at("pairs")) {
        pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      }
      m.rels[r.name] =
          make_cell(m.classes.at(r.dom), m.classes.at(r.cod), pairs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
  return m;
}

}  // namespace conceptory::onto
