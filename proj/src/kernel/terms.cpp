#include "kernel/terms.hpp"

#include <algorithm>
#include <sstream>

namespace conceptory::kernel {

namespace {

ClassPtr mk_cls(ClassTerm t) { return std::make_shared<const ClassTerm>(std::move(t)); }
RelPtr mk_rel(RelTerm t) { return std::make_shared<const RelTerm>(std::move(t)); }

}  // namespace

ClassPtr cls_name(std::string n) {
  return mk_cls({ClassTerm::Kind::name, std::move(n), nullptr, nullptr});
}
ClassPtr cls_var(std::string n) {
  return mk_cls({ClassTerm::Kind::var, std::move(n), nullptr, nullptr});
}
ClassPtr cls_top() { return mk_cls({ClassTerm::Kind::top, {}, nullptr, nullptr}); }
ClassPtr cls_bottom() {
  return mk_cls({ClassTerm::Kind::bottom, {}, nullptr, nullptr});
}
ClassPtr cls_and(ClassPtr a, ClassPtr b) {
  return mk_cls({ClassTerm::Kind::conj, {}, std::move(a), std::move(b)});
}
ClassPtr cls_or(ClassPtr a, ClassPtr b) {
  return mk_cls({ClassTerm::Kind::disj, {}, std::move(a), std::move(b)});
}
ClassPtr cls_not(ClassPtr a) {
  return mk_cls({ClassTerm::Kind::neg, {}, std::move(a), nullptr});
}
ClassPtr cls_impl(ClassPtr a, ClassPtr b) {
  return mk_cls({ClassTerm::Kind::impl, {}, std::move(a), std::move(b)});
}

RelPtr rel_name(std::string n) {
  RelTerm t;
  t.kind = RelTerm::Kind::name;
  t.name = std::move(n);
  return mk_rel(std::move(t));
}
RelPtr rel_var(std::string n) {
  RelTerm t;
  t.kind = RelTerm::Kind::var;
  t.name = std::move(n);
  return mk_rel(std::move(t));
}
RelPtr rel_top() {
  RelTerm t;
  t.kind = RelTerm::Kind::top;
  return mk_rel(std::move(t));
}
RelPtr rel_bottom() {
  RelTerm t;
  t.kind = RelTerm::Kind::bottom;
  return mk_rel(std::move(t));
}
RelPtr rel_id(ClassPtr a) {
  RelTerm t;
  t.kind = RelTerm::Kind::identity;
  t.c1 = std::move(a);
  return mk_rel(std::move(t));
}
RelPtr rel_comp(RelPtr outer, RelPtr inner) {
  RelTerm t;
  t.kind = RelTerm::Kind::comp;
  t.lhs = std::move(outer);
  t.rhs = std::move(inner);
  return mk_rel(std::move(t));
}
RelPtr rel_transpose(RelPtr f) {
  RelTerm t;
  t.kind = RelTerm::Kind::transpose;
  t.lhs = std::move(f);
  return mk_rel(std::move(t));
}

namespace {
RelPtr boundary_op(RelTerm::Kind k, RelPtr f, ClassPtr a, ClassPtr b) {
  RelTerm t;
  t.kind = k;
  t.lhs = std::move(f);
  t.c1 = std::move(a);
  t.c2 = std::move(b);
  return mk_rel(std::move(t));
}
}  // namespace

RelPtr rel_down(RelPtr f, ClassPtr a, ClassPtr b) {
  return boundary_op(RelTerm::Kind::down, std::move(f), std::move(a), std::move(b));
}
RelPtr rel_up(RelPtr f, ClassPtr a, ClassPtr b) {
  return boundary_op(RelTerm::Kind::up, std::move(f), std::move(a), std::move(b));
}
RelPtr rel_ldown(RelPtr f, ClassPtr a) {
  return boundary_op(RelTerm::Kind::ldown, std::move(f), std::move(a), nullptr);
}
RelPtr rel_rdown(RelPtr f, ClassPtr b) {
  return boundary_op(RelTerm::Kind::rdown, std::move(f), std::move(b), nullptr);
}
RelPtr rel_lup(RelPtr f, ClassPtr a) {
  return boundary_op(RelTerm::Kind::lup, std::move(f), std::move(a), nullptr);
}
RelPtr rel_rup(RelPtr f, ClassPtr b) {
  return boundary_op(RelTerm::Kind::rup, std::move(f), std::move(b), nullptr);
}
RelPtr rel_and(RelPtr a, RelPtr b) {
  RelTerm t;
  t.kind = RelTerm::Kind::conj;
  t.lhs = std::move(a);
  t.rhs = std::move(b);
  return mk_rel(std::move(t));
}
RelPtr rel_or(RelPtr a, RelPtr b) {
  RelTerm t;
  t.kind = RelTerm::Kind::disj;
  t.lhs = std::move(a);
  t.rhs = std::move(b);
  return mk_rel(std::move(t));
}
RelPtr rel_not(RelPtr a) {
  RelTerm t;
  t.kind = RelTerm::Kind::neg;
  t.lhs = std::move(a);
  return mk_rel(std::move(t));
}

bool equal(const ClassPtr& a, const ClassPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

bool equal(const RelPtr& a, const RelPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs) &&
         equal(a->c1, b->c1) && equal(a->c2, b->c2);
}

Judgment typing(RelPtr f, ClassPtr a, ClassPtr b) {
  Judgment j;
  j.kind = Judgment::Kind::typing;
  j.rel_a = std::move(f);
  j.cls_a = std::move(a);
  j.cls_b = std::move(b);
  return j;
}
Judgment rel_impl(RelPtr a, RelPtr b) {
  Judgment j;
  j.kind = Judgment::Kind::rel_impl;
  j.rel_a = std::move(a);
  j.rel_b = std::move(b);
  return j;
}
Judgment class_impl(ClassPtr a, ClassPtr b) {
  Judgment j;
  j.kind = Judgment::Kind::class_impl;
  j.cls_a = std::move(a);
  j.cls_b = std::move(b);
  return j;
}
Judgment defined(ClassPtr a, ClassPtr b, RelPtr app) {
  Judgment j;
  j.kind = Judgment::Kind::defined;
  j.cls_a = std::move(a);
  j.cls_b = std::move(b);
  j.app = std::move(app);
  return j;
}

bool equal(const Judgment& a, const Judgment& b) {
  if (a.kind != b.kind) return false;
  return equal(a.rel_a, b.rel_a) && equal(a.rel_b, b.rel_b) &&
         equal(a.cls_a, b.cls_a) && equal(a.cls_b, b.cls_b) &&
         equal(a.app, b.app);
}

namespace {

// precedence: unary 5, o 4, & 3, | 2, ~> 1
void print_cls(std::ostringstream& os, const ClassPtr& t, int parent);
void print_rel(std::ostringstream& os, const RelPtr& t, int parent);

void wrap(std::ostringstream& os, bool need, auto&& body) {
  if (need) os << '(';
  body();
  if (need) os << ')';
}

void print_cls(std::ostringstream& os, const ClassPtr& t, int parent) {
  switch (t->kind) {
    case ClassTerm::Kind::name:
    case ClassTerm::Kind::var:
      os << t->name;
      break;
    case ClassTerm::Kind::top:
      os << "top";
      break;
    case ClassTerm::Kind::bottom:
      os << "bottom";
      break;
    case ClassTerm::Kind::neg:
      os << '!';
      print_cls(os, t->lhs, 5);
      break;
    case ClassTerm::Kind::conj:
      wrap(os, parent > 3, [&] {
        print_cls(os, t->lhs, 3);
        os << " & ";
        print_cls(os, t->rhs, 4);
      });
      break;
    case ClassTerm::Kind::disj:
      wrap(os, parent > 2, [&] {
        print_cls(os, t->lhs, 2);
        os << " | ";
        print_cls(os, t->rhs, 3);
      });
      break;
    case ClassTerm::Kind::impl:
      wrap(os, parent > 1, [&] {
        print_cls(os, t->lhs, 2);
        os << " ~> ";
        print_cls(os, t->rhs, 1);
      });
      break;
  }
}

void print_rel(std::ostringstream& os, const RelPtr& t, int parent) {
  switch (t->kind) {
    case RelTerm::Kind::name:
    case RelTerm::Kind::var:
      os << t->name;
      break;
    case RelTerm::Kind::top:
      os << "top";
      break;
    case RelTerm::Kind::bottom:
      os << "bottom";
      break;
    case RelTerm::Kind::identity:
      os << "id(";
      print_cls(os, t->c1, 0);
      os << ')';
      break;
    case RelTerm::Kind::transpose:
      os << '~';
      print_rel(os, t->lhs, 5);
      break;
    case RelTerm::Kind::neg:
      os << '!';
      print_rel(os, t->lhs, 5);
      break;
    case RelTerm::Kind::comp:
      wrap(os, parent > 4, [&] {
        print_rel(os, t->lhs, 4);
        os << " o ";
        print_rel(os, t->rhs, 5);
      });
      break;
    case RelTerm::Kind::conj:
      wrap(os, parent > 3, [&] {
        print_rel(os, t->lhs, 3);
        os << " & ";
        print_rel(os, t->rhs, 4);
      });
      break;
    case RelTerm::Kind::disj:
      wrap(os, parent > 2, [&] {
        print_rel(os, t->lhs, 2);
        os << " | ";
        print_rel(os, t->rhs, 3);
      });
      break;
    case RelTerm::Kind::down:
    case RelTerm::Kind::up: {
      os << (t->kind == RelTerm::Kind::down ? "down(" : "up(");
      print_rel(os, t->lhs, 0);
      os << ',';
      print_cls(os, t->c1, 0);
      os << ',';
      print_cls(os, t->c2, 0);
      os << ')';
      break;
    }
    case RelTerm::Kind::ldown:
    case RelTerm::Kind::rdown:
    case RelTerm::Kind::lup:
    case RelTerm::Kind::rup: {
      const char* head = t->kind == RelTerm::Kind::ldown   ? "ldown("
                         : t->kind == RelTerm::Kind::rdown ? "rdown("
                         : t->kind == RelTerm::Kind::lup   ? "lup("
                                                           : "rup(";
      os << head;
      print_rel(os, t->lhs, 0);
      os << ',';
      print_cls(os, t->c1, 0);
      os << ')';
      break;
    }
  }
}

}  // namespace

std::string to_string(const ClassPtr& t) {
  std::ostringstream os;
  print_cls(os, t, 0);
  return os.str();
}

std::string to_string(const RelPtr& t) {
  std::ostringstream os;
  print_rel(os, t, 0);
  return os.str();
}

std::string to_string(const Judgment& j) {
  std::ostringstream os;
  switch (j.kind) {
    case Judgment::Kind::typing:
      print_rel(os, j.rel_a, 0);
      os << " : ";
      print_cls(os, j.cls_a, 0);
      os << " -> ";
      print_cls(os, j.cls_b, 0);
      break;
    case Judgment::Kind::rel_impl:
      print_rel(os, j.rel_a, 0);
      os << " => ";
      print_rel(os, j.rel_b, 0);
      break;
    case Judgment::Kind::class_impl:
      print_cls(os, j.cls_a, 0);
      os << " => ";
      print_cls(os, j.cls_b, 0);
      break;
    case Judgment::Kind::defined:
      os << "def(";
      print_cls(os, j.cls_a, 0);
      os << ',';
      print_cls(os, j.cls_b, 0);
      os << ',';
      print_rel(os, j.app, 0);
      os << ')';
      break;
  }
  return os.str();
}

namespace {

void add_name(std::vector<std::string>& v, const std::string& n) {
  if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
}

void collect_cls(const ClassPtr& t, std::vector<std::string>& classes) {
  if (!t) return;
  if (t->kind == ClassTerm::Kind::name) add_name(classes, t->name);
  collect_cls(t->lhs, classes);
  collect_cls(t->rhs, classes);
}

void collect_rel(const RelPtr& t, std::vector<std::string>& classes,
                 std::vector<std::string>& rels) {
  if (!t) return;
  if (t->kind == RelTerm::Kind::name) add_name(rels, t->name);
  collect_rel(t->lhs, classes, rels);
  collect_rel(t->rhs, classes, rels);
  collect_cls(t->c1, classes);
  collect_cls(t->c2, classes);
}

}  // namespace

void collect_names(const Judgment& j, std::vector<std::string>& classes,
                   std::vector<std::string>& rels) {
  collect_rel(j.rel_a, classes, rels);
  collect_rel(j.rel_b, classes, rels);
  collect_cls(j.cls_a, classes);
  collect_cls(j.cls_b, classes);
  collect_rel(j.app, classes, rels);
}

}  // namespace conceptory::kernel
