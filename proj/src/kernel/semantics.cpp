#include "kernel/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "laws/enumerate.hpp"
#include "laws/sampler.hpp"

namespace conceptory::kernel {

namespace {

// Restriction evaluated by the defining mask formula. Total: it agrees
// with the core restriction operator whenever the definedness side
// conditions hold, and still denotes a well-formed cell when a model
// assigns a relation smaller boundaries than its declared classes.
Cell1 masked_restrict(const Cell1& f, const Subset& a, const Subset& b) {
  Cell1 h;
  h.n = f.n;
  h.dom = a.bits;
  h.cod = b.bits;
  for (int r = 0; r < f.n; ++r) {
    if (a.contains(r)) h.rows[r] = f.rows[r] & static_cast<uint16_t>(b.bits);
  }
  return h;
}

}  // namespace

Subset eval_class(const ClassPtr& t, const ModelAssignment& m) {
  Universe u{m.universe};
  switch (t->kind) {
    case ClassTerm::Kind::name: {
      auto it = m.classes.find(t->name);
      if (it == m.classes.end()) {
        throw UnboundName("class name '" + t->name + "' is not assigned");
      }
      return it->second;
    }
    case ClassTerm::Kind::var:
      throw UnboundName("metavariable in a semantic context");
    case ClassTerm::Kind::top:
      return full_subset(u);
    case ClassTerm::Kind::bottom:
      return empty_subset(u);
    case ClassTerm::Kind::conj:
      return subset_and(eval_class(t->lhs, m), eval_class(t->rhs, m));
    case ClassTerm::Kind::disj:
      return subset_or(eval_class(t->lhs, m), eval_class(t->rhs, m));
    case ClassTerm::Kind::neg:
      return subset_not(eval_class(t->lhs, m));
    case ClassTerm::Kind::impl:
      return subset_or(subset_not(eval_class(t->lhs, m)),
                       eval_class(t->rhs, m));
  }
  throw InputError("malformed class term");
}

Cell1 eval_rel(const RelPtr& t, const ModelAssignment& m) {
  Universe u{m.universe};
  switch (t->kind) {
    case RelTerm::Kind::name: {
      auto it = m.rels.find(t->name);
      if (it == m.rels.end()) {
        throw UnboundName("relation name '" + t->name + "' is not assigned");
      }
      return it->second;
    }
    case RelTerm::Kind::var:
      throw UnboundName("metavariable in a semantic context");
    case RelTerm::Kind::top:
      return top(u);
    case RelTerm::Kind::bottom:
      return bottom(u);
    case RelTerm::Kind::identity:
      return identity(eval_class(t->c1, m));
    case RelTerm::Kind::comp:
      return compose(eval_rel(t->lhs, m), eval_rel(t->rhs, m));
    case RelTerm::Kind::transpose:
      return transpose(eval_rel(t->lhs, m));
    case RelTerm::Kind::down:
      return masked_restrict(eval_rel(t->lhs, m), eval_class(t->c1, m),
                             eval_class(t->c2, m));
    case RelTerm::Kind::up:
      return extend_cell(eval_rel(t->lhs, m), eval_class(t->c1, m),
                         eval_class(t->c2, m));
    case RelTerm::Kind::ldown: {
      Cell1 f = eval_rel(t->lhs, m);
      return masked_restrict(f, eval_class(t->c1, m), f.cod_set());
    }
    case RelTerm::Kind::rdown: {
      Cell1 f = eval_rel(t->lhs, m);
      return masked_restrict(f, f.dom_set(), eval_class(t->c1, m));
    }
    case RelTerm::Kind::lup: {
      Cell1 f = eval_rel(t->lhs, m);
      return extend_dom(f, eval_class(t->c1, m));
    }
    case RelTerm::Kind::rup: {
      Cell1 f = eval_rel(t->lhs, m);
      return extend_cod(f, eval_class(t->c1, m));
    }
    case RelTerm::Kind::conj:
      return meet(eval_rel(t->lhs, m), eval_rel(t->rhs, m));
    case RelTerm::Kind::disj:
      return join(eval_rel(t->lhs, m), eval_rel(t->rhs, m));
    case RelTerm::Kind::neg:
      return complement(eval_rel(t->lhs, m));
  }
  throw InputError("malformed relation term");
}

namespace {

bool eval_typing(const RelPtr& f, const ClassPtr& a, const ClassPtr& b,
                 const ModelAssignment& m) {
  Cell1 cell = eval_rel(f, m);
  return subset_leq(cell.dom_set(), eval_class(a, m)) &&
         subset_leq(cell.cod_set(), eval_class(b, m));
}

}  // namespace

bool eval_judgment(const Judgment& j, const ModelAssignment& m) {
  switch (j.kind) {
    case Judgment::Kind::class_impl:
      return subset_leq(eval_class(j.cls_a, m), eval_class(j.cls_b, m));
    case Judgment::Kind::rel_impl:
      return leq(eval_rel(j.rel_a, m), eval_rel(j.rel_b, m));
    case Judgment::Kind::typing:
      return eval_typing(j.rel_a, j.cls_a, j.cls_b, m);
    case Judgment::Kind::defined: {
      // The definedness side conditions: the typing of the operand at the
      // outer boundaries plus the class inclusions of the rule that
      // introduces the operator.
      const RelPtr& app = j.app;
      if (!eval_typing(app->lhs, j.cls_a, j.cls_b, m)) return false;
      Subset sa = eval_class(j.cls_a, m);
      Subset sb = eval_class(j.cls_b, m);
      switch (app->kind) {
        case RelTerm::Kind::down:
          return subset_leq(eval_class(app->c1, m), sa) &&
                 subset_leq(eval_class(app->c2, m), sb);
        case RelTerm::Kind::up:
          return subset_leq(sa, eval_class(app->c1, m)) &&
                 subset_leq(sb, eval_class(app->c2, m));
        case RelTerm::Kind::ldown:
          return subset_leq(eval_class(app->c1, m), sa);
        case RelTerm::Kind::rdown:
          return subset_leq(eval_class(app->c1, m), sb);
        case RelTerm::Kind::lup:
          return subset_leq(sa, eval_class(app->c1, m));
        case RelTerm::Kind::rup:
          return subset_leq(sb, eval_class(app->c1, m));
        default:
          throw InputError("def over a non-boundary operator");
      }
    }
  }
  throw InputError("malformed judgment");
}

std::string to_string(const ModelAssignment& m) {
  std::ostringstream os;
  os << "universe=" << m.universe;
  for (const auto& [name, s] : m.classes) {
    os << ' ' << name << '=' << conceptory::to_string(s);
  }
  for (const auto& [name, c] : m.rels) {
    os << ' ' << name << '=' << conceptory::to_string(c);
  }
  return os.str();
}

namespace {

struct SearchState {
  const std::vector<std::string>& classes;
  const std::vector<std::string>& rels;
  const std::vector<Judgment>& constraints;
  Universe u;
  const std::function<void(const ModelAssignment&)>& visit;
  ModelAssignment m;
  // constraint -> names it needs
  std::vector<std::vector<std::string>> needs_cls;
  std::vector<std::vector<std::string>> needs_rel;
};

bool names_assigned(const SearchState& st, size_t ci) {
  for (const std::string& n : st.needs_cls[ci]) {
    if (!st.m.classes.count(n)) return false;
  }
  for (const std::string& n : st.needs_rel[ci]) {
    if (!st.m.rels.count(n)) return false;
  }
  return true;
}

/// Constraints whose names are all assigned must hold; evaluation errors
/// reject the partial model.
bool constraints_ok(const SearchState& st) {
  for (size_t i = 0; i < st.constraints.size(); ++i) {
    if (!names_assigned(st, i)) continue;
    try {
      if (!eval_judgment(st.constraints[i], st.m)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

/// The declared typing of a relation name, when a constraint provides one
/// with evaluable boundary classes.
bool typed_region(const std::vector<Judgment>& constraints,
                  const ModelAssignment& m, const std::string& rel, Subset* sa,
                  Subset* sb) {
  for (const Judgment& j : constraints) {
    if (j.kind != Judgment::Kind::typing) continue;
    if (j.rel_a->kind != RelTerm::Kind::name || j.rel_a->name != rel) continue;
    try {
      *sa = eval_class(j.cls_a, m);
      *sb = eval_class(j.cls_b, m);
      return true;
    } catch (const Error&) {
      continue;
    }
  }
  return false;
}

void assign_rel(SearchState& st, size_t ri);

void assign_class(SearchState& st, size_t ci) {
  if (ci == st.classes.size()) {
    assign_rel(st, 0);
    return;
  }
  for (uint32_t bits = 0; bits <= st.u.mask(); ++bits) {
    st.m.classes[st.classes[ci]] = Subset{st.u.size, bits};
    if (constraints_ok(st)) assign_class(st, ci + 1);
  }
  st.m.classes.erase(st.classes[ci]);
}

void assign_rel(SearchState& st, size_t ri) {
  if (ri == st.rels.size()) {
    st.visit(st.m);
    return;
  }
  Subset sa = full_subset(st.u), sb = full_subset(st.u);
  typed_region(st.constraints, st.m, st.rels[ri], &sa, &sb);
  laws::for_each_submask(sa.bits, [&](uint32_t dom_bits) {
    laws::for_each_submask(sb.bits, [&](uint32_t cod_bits) {
      for (const Cell1& cell : laws::cells_between(Subset{st.u.size, dom_bits},
                                                   Subset{st.u.size, cod_bits})) {
        st.m.rels[st.rels[ri]] = cell;
        if (constraints_ok(st)) assign_rel(st, ri + 1);
      }
    });
  });
  st.m.rels.erase(st.rels[ri]);
}

}  // namespace

void for_each_model(
    const std::vector<std::string>& classes,
    const std::vector<std::string>& rels,
    const std::vector<Judgment>& constraints, const SoundnessConfig& cfg,
    const std::function<void(const ModelAssignment&)>& visit) {
  Universe u = make_universe(cfg.universe_size);
  if (cfg.exhaustive && cfg.universe_size > 2) {
    throw InputError("exhaustive model enumeration supports universe <= 2");
  }
  if (cfg.exhaustive) {
    SearchState st{classes, rels, constraints, u, visit, {}, {}, {}};
    st.m.universe = u.size;
    for (const Judgment& j : constraints) {
      std::vector<std::string> cs, rs;
      collect_names(j, cs, rs);
      st.needs_cls.push_back(std::move(cs));
      st.needs_rel.push_back(std::move(rs));
    }
    assign_class(st, 0);
    return;
  }
  laws::Sampler rng(cfg.seed);
  for (long i = 0; i < cfg.samples; ++i) {
    ModelAssignment m;
    m.universe = u.size;
    for (const std::string& c : classes) m.classes[c] = rng.subset(u);
    for (const std::string& r : rels) {
      Subset sa = full_subset(u), sb = full_subset(u);
      typed_region(constraints, m, r, &sa, &sb);
      m.rels[r] = rng.cell_between(rng.subset_of(sa), rng.subset_of(sb));
    }
    visit(m);
  }
}

namespace {

SoundnessReport implication_soundness(const std::vector<Judgment>& hyps,
                                      const Judgment& conclusion,
                                      const SoundnessConfig& cfg) {
  std::vector<std::string> classes, rels;
  for (const Judgment& h : hyps) collect_names(h, classes, rels);
  collect_names(conclusion, classes, rels);

  SoundnessReport report;
  for_each_model(classes, rels, hyps, cfg, [&](const ModelAssignment& m) {
    ++report.candidates;
    // Exhaustive enumeration prunes on the hypotheses already; sampled
    // models still need the filter.
    for (const Judgment& h : hyps) {
      try {
        if (!eval_judgment(h, m)) return;
      } catch (const Error&) {
        return;
      }
    }
    ++report.hyp_models;
    try {
      if (!eval_judgment(conclusion, m)) {
        ++report.violations;
        if (report.examples.size() < 5) {
          report.examples.push_back(to_string(m));
        }
      }
    } catch (const Error&) {
      ++report.ill_formed;
    }
  });
  report.vacuous = report.hyp_models == 0;
  return report;
}

}  // namespace

SoundnessReport soundness_sample(const Derivation& d,
                                 const SoundnessConfig& cfg) {
  std::vector<Judgment> hyps;
  for (const Step& s : d.steps) {
    if (s.rule == "hyp") hyps.push_back(s.judgment);
  }
  if (d.steps.empty()) throw InputError("empty derivation");
  return implication_soundness(hyps, d.steps.back().judgment, cfg);
}

SoundnessReport rule_soundness(const Rule& rule, const SoundnessConfig& cfg) {
  SoundnessReport total;
  for (const RuleSchema& schema : rule.schemas) {
    // metavariables become fresh names
    std::vector<std::string> cvars, rvars;
    auto walk = [&](const Judgment& j) {
      std::function<void(const ClassPtr&)> wc = [&](const ClassPtr& t) {
        if (!t) return;
        if (t->kind == ClassTerm::Kind::var &&
            std::find(cvars.begin(), cvars.end(), t->name) == cvars.end()) {
          cvars.push_back(t->name);
        }
        wc(t->lhs);
        wc(t->rhs);
      };
      std::function<void(const RelPtr&)> wr = [&](const RelPtr& t) {
        if (!t) return;
        if (t->kind == RelTerm::Kind::var &&
            std::find(rvars.begin(), rvars.end(), t->name) == rvars.end()) {
          rvars.push_back(t->name);
        }
        wr(t->lhs);
        wr(t->rhs);
        wc(t->c1);
        wc(t->c2);
      };
      wr(j.rel_a);
      wr(j.rel_b);
      wc(j.cls_a);
      wc(j.cls_b);
      wr(j.app);
    };
    for (const Judgment& p : schema.premises) walk(p);
    walk(schema.conclusion);

    Subst inst;
    for (const std::string& v : cvars) inst.cls[v] = cls_name("C_" + v);
    for (const std::string& v : rvars) inst.rel[v] = rel_name("r_" + v);
    std::vector<Judgment> premises;
    for (const Judgment& p : schema.premises) {
      premises.push_back(substitute(p, inst));
    }
    Judgment conclusion = substitute(schema.conclusion, inst);

    SoundnessReport r = implication_soundness(premises, conclusion, cfg);
    total.candidates += r.candidates;
    total.hyp_models += r.hyp_models;
    total.ill_formed += r.ill_formed;
    total.violations += r.violations;
    for (const std::string& e : r.examples) {
      if (total.examples.size() < 5) total.examples.push_back(e);
    }
  }
  total.vacuous = total.hyp_models == 0;
  return total;
}

}  // namespace conceptory::kernel
