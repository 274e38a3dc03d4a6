#ifndef CONCEPTORY_KERNEL_TERMS_HPP
#define CONCEPTORY_KERNEL_TERMS_HPP

#include <memory>
#include <string>
#include <vector>

// The formal language: class terms, relationship terms and the four
// judgment forms. Terms are immutable shared trees; `var` nodes are
// metavariables and appear only inside rule schemas.

namespace conceptory::kernel {

struct ClassTerm;
struct RelTerm;
using ClassPtr = std::shared_ptr<const ClassTerm>;
using RelPtr = std::shared_ptr<const RelTerm>;

struct ClassTerm {
  enum class Kind { name, var, top, bottom, conj, disj, neg, impl };
  Kind kind;
  std::string name;  // name / var
  ClassPtr lhs, rhs;  // conj/disj/impl both, neg lhs
};

struct RelTerm {
  enum class Kind {
    name,
    var,
    top,
    bottom,
    identity,   // id(A)
    comp,       // lhs o rhs, rhs applied first
    transpose,  // ~lhs
    down,       // down(lhs, c1, c2)
    up,
    ldown,  // ldown(lhs, c1): domain restriction
    rdown,  // rdown(lhs, c1): codomain restriction
    lup,    // lup(lhs, c1): domain extension
    rup,    // rup(lhs, c1): codomain extension
    conj,
    disj,
    neg,
  };
  Kind kind;
  std::string name;
  RelPtr lhs, rhs;
  ClassPtr c1, c2;
};

// constructors
ClassPtr cls_name(std::string n);
ClassPtr cls_var(std::string n);
ClassPtr cls_top();
ClassPtr cls_bottom();
ClassPtr cls_and(ClassPtr a, ClassPtr b);
ClassPtr cls_or(ClassPtr a, ClassPtr b);
ClassPtr cls_not(ClassPtr a);
ClassPtr cls_impl(ClassPtr a, ClassPtr b);

RelPtr rel_name(std::string n);
RelPtr rel_var(std::string n);
RelPtr rel_top();
RelPtr rel_bottom();
RelPtr rel_id(ClassPtr a);
RelPtr rel_comp(RelPtr outer, RelPtr inner);
RelPtr rel_transpose(RelPtr f);
RelPtr rel_down(RelPtr f, ClassPtr a, ClassPtr b);
RelPtr rel_up(RelPtr f, ClassPtr a, ClassPtr b);
RelPtr rel_ldown(RelPtr f, ClassPtr a);
RelPtr rel_rdown(RelPtr f, ClassPtr b);
RelPtr rel_lup(RelPtr f, ClassPtr a);
RelPtr rel_rup(RelPtr f, ClassPtr b);
RelPtr rel_and(RelPtr a, RelPtr b);
RelPtr rel_or(RelPtr a, RelPtr b);
RelPtr rel_not(RelPtr a);

bool equal(const ClassPtr& a, const ClassPtr& b);
bool equal(const RelPtr& a, const RelPtr& b);

/// Typing "f : A -> B", implications at both levels, and definedness
/// "def(A, B, app)" where app is one of the six boundary operators.
struct Judgment {
  enum class Kind { typing, rel_impl, class_impl, defined };
  Kind kind;
  RelPtr rel_a, rel_b;    // typing: the relation; rel_impl: both sides
  ClassPtr cls_a, cls_b;  // typing: boundaries; class_impl: both; defined: outer
  RelPtr app;             // defined: the boundary-operator application
};

Judgment typing(RelPtr f, ClassPtr a, ClassPtr b);
Judgment rel_impl(RelPtr a, RelPtr b);
Judgment class_impl(ClassPtr a, ClassPtr b);
Judgment defined(ClassPtr a, ClassPtr b, RelPtr app);

bool equal(const Judgment& a, const Judgment& b);

std::string to_string(const ClassPtr& t);
std::string to_string(const RelPtr& t);
std::string to_string(const Judgment& j);

/// All class / relation names referenced by a judgment, each in first-use
/// order without duplicates.
void collect_names(const Judgment& j, std::vector<std::string>& classes,
                   std::vector<std::string>& rels);

}  // namespace conceptory::kernel

#endif
