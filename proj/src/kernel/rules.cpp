#include "kernel/rules.hpp"

namespace conceptory::kernel {

bool match(const ClassPtr& pattern, const ClassPtr& instance, Subst& s) {
  if (!pattern || !instance) return pattern == instance;
  if (pattern->kind == ClassTerm::Kind::var) {
    auto it = s.cls.find(pattern->name);
    if (it != s.cls.end()) return equal(it->second, instance);
    s.cls[pattern->name] = instance;
    return true;
  }
  if (pattern->kind != instance->kind) return false;
  if (pattern->kind == ClassTerm::Kind::name) {
    return pattern->name == instance->name;
  }
  return match(pattern->lhs, instance->lhs, s) &&
         match(pattern->rhs, instance->rhs, s);
}

bool match(const RelPtr& pattern, const RelPtr& instance, Subst& s) {
  if (!pattern || !instance) return pattern == instance;
  if (pattern->kind == RelTerm::Kind::var) {
    auto it = s.rel.find(pattern->name);
    if (it != s.rel.end()) return equal(it->second, instance);
    s.rel[pattern->name] = instance;
    return true;
  }
  if (pattern->kind != instance->kind) return false;
  if (pattern->kind == RelTerm::Kind::name) {
    return pattern->name == instance->name;
  }
  return match(pattern->lhs, instance->lhs, s) &&
         match(pattern->rhs, instance->rhs, s) &&
         match(pattern->c1, instance->c1, s) &&
         match(pattern->c2, instance->c2, s);
}

bool match(const Judgment& pattern, const Judgment& instance, Subst& s) {
  if (pattern.kind != instance.kind) return false;
  return match(pattern.rel_a, instance.rel_a, s) &&
         match(pattern.rel_b, instance.rel_b, s) &&
         match(pattern.cls_a, instance.cls_a, s) &&
         match(pattern.cls_b, instance.cls_b, s) &&
         match(pattern.app, instance.app, s);
}

ClassPtr substitute(const ClassPtr& pattern, const Subst& s) {
  if (!pattern) return nullptr;
  switch (pattern->kind) {
    case ClassTerm::Kind::var: {
      auto it = s.cls.find(pattern->name);
      if (it == s.cls.end()) {
        throw SchemaMismatch("metavariable " + pattern->name +
                             " not determined by the premises");
      }
      return it->second;
    }
    case ClassTerm::Kind::name:
    case ClassTerm::Kind::top:
    case ClassTerm::Kind::bottom:
      return pattern;
    case ClassTerm::Kind::neg:
      return cls_not(substitute(pattern->lhs, s));
    case ClassTerm::Kind::conj:
      return cls_and(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
    case ClassTerm::Kind::disj:
      return cls_or(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
    case ClassTerm::Kind::impl:
      return cls_impl(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
  }
  return pattern;
}

RelPtr substitute(const RelPtr& pattern, const Subst& s) {
  if (!pattern) return nullptr;
  switch (pattern->kind) {
    case RelTerm::Kind::var: {
      auto it = s.rel.find(pattern->name);
      if (it == s.rel.end()) {
        throw SchemaMismatch("metavariable " + pattern->name +
                             " not determined by the premises");
      }
      return it->second;
    }
    case RelTerm::Kind::name:
    case RelTerm::Kind::top:
    case RelTerm::Kind::bottom:
      return pattern;
    case RelTerm::Kind::identity:
      return rel_id(substitute(pattern->c1, s));
    case RelTerm::Kind::comp:
      return rel_comp(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
    case RelTerm::Kind::transpose:
      return rel_transpose(substitute(pattern->lhs, s));
    case RelTerm::Kind::neg:
      return rel_not(substitute(pattern->lhs, s));
    case RelTerm::Kind::conj:
      return rel_and(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
    case RelTerm::Kind::disj:
      return rel_or(substitute(pattern->lhs, s), substitute(pattern->rhs, s));
    case RelTerm::Kind::down:
      return rel_down(substitute(pattern->lhs, s), substitute(pattern->c1, s),
                      substitute(pattern->c2, s));
    case RelTerm::Kind::up:
      return rel_up(substitute(pattern->lhs, s), substitute(pattern->c1, s),
                    substitute(pattern->c2, s));
    case RelTerm::Kind::ldown:
      return rel_ldown(substitute(pattern->lhs, s), substitute(pattern->c1, s));
    case RelTerm::Kind::rdown:
      return rel_rdown(substitute(pattern->lhs, s), substitute(pattern->c1, s));
    case RelTerm::Kind::lup:
      return rel_lup(substitute(pattern->lhs, s), substitute(pattern->c1, s));
    case RelTerm::Kind::rup:
      return rel_rup(substitute(pattern->lhs, s), substitute(pattern->c1, s));
  }
  return pattern;
}

Judgment substitute(const Judgment& pattern, const Subst& s) {
  switch (pattern.kind) {
    case Judgment::Kind::typing:
      return typing(substitute(pattern.rel_a, s), substitute(pattern.cls_a, s),
                    substitute(pattern.cls_b, s));
    case Judgment::Kind::rel_impl:
      return rel_impl(substitute(pattern.rel_a, s), substitute(pattern.rel_b, s));
    case Judgment::Kind::class_impl:
      return class_impl(substitute(pattern.cls_a, s),
                        substitute(pattern.cls_b, s));
    case Judgment::Kind::defined:
      return defined(substitute(pattern.cls_a, s), substitute(pattern.cls_b, s),
                     substitute(pattern.app, s));
  }
  throw SchemaMismatch("malformed judgment pattern");
}

namespace {

std::vector<Rule> build_rules() {
  ClassPtr A = cls_var("A"), B = cls_var("B"), C = cls_var("C"), D = cls_var("D");
  ClassPtr A0 = cls_var("A0"), B0 = cls_var("B0"), C0 = cls_var("C0");
  ClassPtr A2 = cls_var("A2"), B2 = cls_var("B2");
  RelPtr f = rel_var("f"), g = rel_var("g"), gp = rel_var("gp");
  RelPtr f1 = rel_var("f1"), f2 = rel_var("f2"), g1 = rel_var("g1"),
         g2 = rel_var("g2");

  std::vector<Rule> rules;
  auto add = [&](std::string name, std::string tier,
                 std::vector<Judgment> premises, Judgment conclusion) {
    for (Rule& r : rules) {
      if (r.name == name) {
        r.schemas.push_back({std::move(premises), std::move(conclusion)});
        return;
      }
    }
    rules.push_back(
        {std::move(name), std::move(tier),
         {RuleSchema{std::move(premises), std::move(conclusion)}}});
  };

  // displayed rules
  add("id_impl", "core", {rel_impl(rel_id(A), rel_id(B))}, class_impl(A, B));
  add("def_down", "core",
      {typing(f, A, B), class_impl(A2, A), class_impl(B2, B)},
      defined(A, B, rel_down(f, A2, B2)));
  add("def_up", "core", {typing(f, A, B), class_impl(A, A2), class_impl(B, B2)},
      defined(A, B, rel_up(f, A2, B2)));
  add("star", "core", {rel_impl(f1, g1), rel_impl(f2, g2)},
      rel_impl(rel_comp(f2, f1), rel_comp(g2, g1)));
  add("down", "core", {defined(A, B, rel_down(f, A2, B2))},
      rel_impl(rel_down(f, A2, B2), f));
  add("univ_down", "core",
      {defined(A, B, rel_down(f, A2, B2)), typing(gp, A2, B2), rel_impl(gp, f)},
      rel_impl(gp, rel_down(f, A2, B2)));
  add("up", "core", {defined(A, B, rel_up(f, A2, B2))},
      rel_impl(f, rel_up(f, A2, B2)));
  add("univ_up", "core",
      {defined(A, B, rel_up(f, A2, B2)), typing(gp, A2, B2), rel_impl(f, gp)},
      rel_impl(rel_up(f, A2, B2), gp));
  // The displayed distributivity axioms carry no premises; typing premises
  // are required here so the instances stay well-formed under evaluation.
  {
    std::vector<Judgment> prem = {typing(g, A0, B0), typing(f, B0, C0),
                                  class_impl(A, A0), class_impl(B, C0)};
    RelPtr lhs = rel_comp(rel_rdown(f, B), rel_ldown(g, A));
    RelPtr rhs = rel_down(rel_comp(f, g), A, B);
    add("distrib_down_fwd", "core", prem, rel_impl(lhs, rhs));
    add("distrib_down_bwd", "core", prem, rel_impl(rhs, lhs));
  }
  {
    std::vector<Judgment> prem = {typing(g, A0, B0), typing(f, B0, C0),
                                  class_impl(A0, A), class_impl(C0, B)};
    RelPtr lhs = rel_comp(rel_rup(f, B), rel_lup(g, A));
    RelPtr rhs = rel_up(rel_comp(f, g), A, B);
    add("distrib_up_fwd", "core", prem, rel_impl(lhs, rhs));
    add("distrib_up_bwd", "core", prem, rel_impl(rhs, lhs));
  }
  add("bounds_and", "core", {typing(f, A, B), typing(g, C, D)},
      typing(rel_and(f, g), cls_and(A, C), cls_and(B, D)));
  add("bounds_or", "core", {typing(f, A, B), typing(g, C, D)},
      typing(rel_or(f, g), cls_or(A, C), cls_or(B, D)));

  // structural bookkeeping
  add("id_typing", "structural", {}, typing(rel_id(A), A, A));
  add("comp_typing", "structural", {typing(f, A, B), typing(g, B, C)},
      typing(rel_comp(g, f), A, C));
  add("transpose_typing", "structural", {typing(f, A, B)},
      typing(rel_transpose(f), B, A));
  add("down_typing", "structural", {defined(A, B, rel_down(f, A2, B2))},
      typing(rel_down(f, A2, B2), A2, B2));
  add("up_typing", "structural", {defined(A, B, rel_up(f, A2, B2))},
      typing(rel_up(f, A2, B2), A2, B2));
  add("def_ldown", "structural", {typing(f, A, B), class_impl(A2, A)},
      defined(A, B, rel_ldown(f, A2)));
  add("def_rdown", "structural", {typing(f, A, B), class_impl(B2, B)},
      defined(A, B, rel_rdown(f, B2)));
  add("def_lup", "structural", {typing(f, A, B), class_impl(A, A2)},
      defined(A, B, rel_lup(f, A2)));
  add("def_rup", "structural", {typing(f, A, B), class_impl(B, B2)},
      defined(A, B, rel_rup(f, B2)));
  add("ldown_typing", "structural", {defined(A, B, rel_ldown(f, A2))},
      typing(rel_ldown(f, A2), A2, B));
  add("rdown_typing", "structural", {defined(A, B, rel_rdown(f, B2))},
      typing(rel_rdown(f, B2), A, B2));
  add("lup_typing", "structural", {defined(A, B, rel_lup(f, A2))},
      typing(rel_lup(f, A2), A2, B));
  add("rup_typing", "structural", {defined(A, B, rel_rup(f, B2))},
      typing(rel_rup(f, B2), A, B2));
  add("ldown_impl", "structural", {defined(A, B, rel_ldown(f, A2))},
      rel_impl(rel_ldown(f, A2), f));
  add("rdown_impl", "structural", {defined(A, B, rel_rdown(f, B2))},
      rel_impl(rel_rdown(f, B2), f));
  add("lup_impl", "structural", {defined(A, B, rel_lup(f, A2))},
      rel_impl(f, rel_lup(f, A2)));
  add("rup_impl", "structural", {defined(A, B, rel_rup(f, B2))},
      rel_impl(f, rel_rup(f, B2)));
  add("id_mono", "structural", {class_impl(A, B)},
      rel_impl(rel_id(A), rel_id(B)));

  // propositional base, registered at both levels
  ClassPtr x = cls_var("x"), y = cls_var("y"), z = cls_var("z");
  RelPtr rx = rel_var("x"), ry = rel_var("y"), rz = rel_var("z");
  auto add2 = [&](const std::string& name, std::vector<Judgment> cls_prem,
                  Judgment cls_conc, std::vector<Judgment> rel_prem,
                  Judgment rel_conc) {
    add(name, "propositional", std::move(cls_prem), std::move(cls_conc));
    add(name, "propositional", std::move(rel_prem), std::move(rel_conc));
  };
  add2("refl", {}, class_impl(x, x), {}, rel_impl(rx, rx));
  add2("trans", {class_impl(x, y), class_impl(y, z)}, class_impl(x, z),
       {rel_impl(rx, ry), rel_impl(ry, rz)}, rel_impl(rx, rz));
  add2("and_intro", {class_impl(x, y), class_impl(x, z)},
       class_impl(x, cls_and(y, z)), {rel_impl(rx, ry), rel_impl(rx, rz)},
       rel_impl(rx, rel_and(ry, rz)));
  add2("and_elim_l", {}, class_impl(cls_and(x, y), x), {},
       rel_impl(rel_and(rx, ry), rx));
  add2("and_elim_r", {}, class_impl(cls_and(x, y), y), {},
       rel_impl(rel_and(rx, ry), ry));
  add2("or_intro_l", {}, class_impl(x, cls_or(x, y)), {},
       rel_impl(rx, rel_or(rx, ry)));
  add2("or_intro_r", {}, class_impl(y, cls_or(x, y)), {},
       rel_impl(ry, rel_or(rx, ry)));
  add2("or_elim", {class_impl(x, z), class_impl(y, z)},
       class_impl(cls_or(x, y), z), {rel_impl(rx, rz), rel_impl(ry, rz)},
       rel_impl(rel_or(rx, ry), rz));
  add2("top_intro", {}, class_impl(x, cls_top()), {},
       rel_impl(rx, rel_top()));
  add2("bottom_elim", {}, class_impl(cls_bottom(), x), {},
       rel_impl(rel_bottom(), rx));
  add2("compl_meet", {}, class_impl(cls_and(x, cls_not(x)), cls_bottom()), {},
       rel_impl(rel_and(rx, rel_not(rx)), rel_bottom()));
  add2("compl_join", {}, class_impl(cls_top(), cls_or(x, cls_not(x))), {},
       rel_impl(rel_top(), rel_or(rx, rel_not(rx))));
  add2("distrib_meet", {},
       class_impl(cls_and(x, cls_or(y, z)),
                  cls_or(cls_and(x, y), cls_and(x, z))),
       {},
       rel_impl(rel_and(rx, rel_or(ry, rz)),
                rel_or(rel_and(rx, ry), rel_and(rx, rz))));
  add2("distrib_meet_inv", {},
       class_impl(cls_or(cls_and(x, y), cls_and(x, z)),
                  cls_and(x, cls_or(y, z))),
       {},
       rel_impl(rel_or(rel_and(rx, ry), rel_and(rx, rz)),
                rel_and(rx, rel_or(ry, rz))));
  add2("dneg_intro", {}, class_impl(x, cls_not(cls_not(x))), {},
       rel_impl(rx, rel_not(rel_not(rx))));
  add2("dneg_elim", {}, class_impl(cls_not(cls_not(x)), x), {},
       rel_impl(rel_not(rel_not(rx)), rx));
  // Heyting residuation; the term language has implication on classes only.
  add("impl_mp", "propositional", {},
      class_impl(cls_and(x, cls_impl(x, y)), y));
  add("impl_intro", "propositional", {class_impl(cls_and(x, y), z)},
      class_impl(x, cls_impl(y, z)));
  add("impl_elim", "propositional", {class_impl(x, cls_impl(y, z))},
      class_impl(cls_and(x, y), z));

  return rules;
}

}  // namespace

const std::vector<Rule>& rule_table() {
  static const std::vector<Rule> rules = build_rules();
  return rules;
}

const Rule* find_rule(const std::string& name) {
  for (const Rule& r : rule_table()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

bool try_schema(const RuleSchema& schema, const std::vector<Judgment>& premises,
                Subst& s, std::string* why) {
  if (schema.premises.size() != premises.size()) {
    if (why) {
      *why = "expects " + std::to_string(schema.premises.size()) +
             " premises, got " + std::to_string(premises.size());
    }
    return false;
  }
  for (size_t i = 0; i < premises.size(); ++i) {
    if (!match(schema.premises[i], premises[i], s)) {
      if (why) {
        *why = "premise " + std::to_string(i + 1) + " (" +
               to_string(premises[i]) + ") does not fit the schema";
      }
      return false;
    }
  }
  return true;
}

}  // namespace

Judgment apply_rule(const std::string& rule,
                    const std::vector<Judgment>& premises) {
  const Rule* r = find_rule(rule);
  if (!r) throw SchemaMismatch("unknown rule: " + rule);
  std::string why;
  for (const RuleSchema& schema : r->schemas) {
    Subst s;
    std::string schema_why;
    if (!try_schema(schema, premises, s, &schema_why)) {
      if (why.empty()) why = schema_why;
      continue;
    }
    return substitute(schema.conclusion, s);
  }
  throw SchemaMismatch(rule + ": " + (why.empty() ? "no schema matched" : why));
}

bool matches_rule(const Rule& rule, const std::vector<Judgment>& premises,
                  const Judgment& conclusion, std::string* why) {
  std::string first;
  for (const RuleSchema& schema : rule.schemas) {
    Subst s;
    std::string schema_why;
    if (!try_schema(schema, premises, s, &schema_why)) {
      if (first.empty()) first = schema_why;
      continue;
    }
    if (match(schema.conclusion, conclusion, s)) return true;
    if (first.empty()) {
      first = "conclusion " + to_string(conclusion) +
              " does not follow from these premises";
    }
  }
  if (why) *why = first.empty() ? "no schema matched" : first;
  return false;
}

}  // namespace conceptory::kernel
