#include <algorithm>

#include "core/errors.hpp"
#include "kernel/parse.hpp"
#include "ontology/ontology.hpp"

namespace conceptory::onto {

namespace {

using kernel::Lexer;
using kernel::Signature;
using kernel::TermParser;
using kernel::Token;

const char* kReserved[] = {"class",  "rel",   "abstract", "oneof", "redeclare",
                           "card",   "unique", "axiom",   "id",    "down",
                           "up",     "ldown", "rdown",    "lup",   "rup",
                           "top",    "bottom", "def",     "o",     "hyp",
                           "nonempty"};

bool reserved(const std::string& s) {
  return std::find(std::begin(kReserved), std::end(kReserved), s) !=
         std::end(kReserved);
}

struct ParseState {
  Lexer lex;
  Signature sig;
  // plain-name subclass edges from class declarations, for dot sugar
  std::vector<std::pair<std::string, std::string>> edges;

  explicit ParseState(const std::string& text) : lex(text) {}

  bool subclass(const std::string& sub, const std::string& sup) const {
    if (sub == sup) return true;
    std::vector<std::string> frontier = {sub}, seen = {sub};
    while (!frontier.empty()) {
      std::string cur = frontier.back();
      frontier.pop_back();
      for (const auto& [a, b] : edges) {
        if (a != cur) continue;
        if (b == sup) return true;
        if (std::find(seen.begin(), seen.end(), b) == seen.end()) {
          seen.push_back(b);
          frontier.push_back(b);
        }
      }
    }
    return false;
  }

  Token expect_ident(const char* what) {
    Token t = lex.next();
    if (t.kind != Token::Kind::ident) Lexer::fail(t, std::string("expected ") + what);
    return t;
  }

  Token expect_sym(const std::string& s) {
    Token t = lex.next();
    if (t.kind != Token::Kind::sym || t.text != s) {
      Lexer::fail(t, "expected '" + s + "'");
    }
    return t;
  }

  std::string declared_class(const char* what) {
    Token t = expect_ident(what);
    if (!sig.has_class(t.text)) {
      Lexer::fail(t, std::string("use before declaration: '") + t.text +
                         "' is not a declared class");
    }
    return t.text;
  }

  void declare_name(const Token& t) {
    if (reserved(t.text)) {
      Lexer::fail(t, "'" + t.text + "' is a reserved word");
    }
    if (sig.has_class(t.text) || sig.rel(t.text)) {
      Lexer::fail(t, "duplicate name '" + t.text + "'");
    }
  }
};

}  // namespace

OntologySource parse(const std::string& text) {
  ParseState st(text);
  OntologySource src;

  while (st.lex.peek().kind != Token::Kind::eof) {
    Token head = st.lex.next();
    if (head.kind != Token::Kind::ident) {
      Lexer::fail(head, "expected a declaration");
    }
    int line = head.line;
    if (head.text == "class") {
      Token name = st.expect_ident("a class name");
      st.declare_name(name);
      kernel::ClassPtr super;
      if (st.lex.peek().kind == Token::Kind::sym && st.lex.peek().text == "<=") {
        st.lex.next();
        TermParser tp(st.lex, st.sig,
                      [&](const std::string& a, const std::string& b) {
                        return st.subclass(a, b);
                      });
        super = tp.class_expr();
      }
      st.sig.classes.push_back(name.text);
      if (super && super->kind == kernel::ClassTerm::Kind::name) {
        st.edges.emplace_back(name.text, super->name);
      }
      src.decls.push_back(ClassDecl{name.text, super, line});
    } else if (head.text == "rel") {
      Token name = st.expect_ident("a relation name");
      st.declare_name(name);
      st.expect_sym(":");
      std::string dom = st.declared_class("the domain class");
      st.expect_sym("->");
      std::string cod = st.declared_class("the codomain class");
      st.sig.rels.push_back({name.text, dom, cod});
      src.decls.push_back(RelDecl{name.text, dom, cod, line});
    } else if (head.text == "abstract") {
      std::string name = st.declared_class("the abstract class");
      st.expect_sym("=>");
      std::vector<std::string> subtypes;
      subtypes.push_back(st.declared_class("a subtype"));
      while (st.lex.peek().kind == Token::Kind::sym && st.lex.peek().text == "|") {
        st.lex.next();
        subtypes.push_back(st.declared_class("a subtype"));
      }
      src.decls.push_back(AbstractDecl{name, subtypes, line});
    } else if (head.text == "oneof") {
      st.expect_sym("(");
      std::vector<std::string> names;
      names.push_back(st.declared_class("a class name"));
      st.expect_sym(",");
      names.push_back(st.declared_class("a class name"));
      while (st.lex.peek().kind == Token::Kind::sym && st.lex.peek().text == ",") {
        st.lex.next();
        names.push_back(st.declared_class("a class name"));
      }
      st.expect_sym(")");
      src.decls.push_back(OneOfDecl{names, line});
    } else if (head.text == "redeclare") {
      std::string cls = st.declared_class("the redeclaring class");
      st.expect_sym(".");
      Token rel = st.expect_ident("a relation name");
      if (!st.sig.rel(rel.text)) {
        Lexer::fail(rel, "use before declaration: '" + rel.text +
                             "' is not a declared relation");
      }
      st.expect_sym(":");
      std::string cod = st.declared_class("the new codomain");
      std::string path = cls + "." + rel.text;
      if (st.sig.rel(path)) {
        Lexer::fail(rel, "duplicate redeclaration '" + path + "'");
      }
      st.sig.rels.push_back({path, cls, cod});
      src.decls.push_back(RedeclareDecl{cls, rel.text, cod, line});
    } else if (head.text == "card") {
      std::string cls = st.declared_class("a class name");
      st.expect_sym(".");
      Token rel = st.expect_ident("a relation name");
      if (!st.sig.rel(rel.text) && !st.sig.rel(cls + "." + rel.text)) {
        Lexer::fail(rel, "use before declaration: '" + rel.text +
                             "' is not a declared relation");
      }
      st.expect_sym("[");
      Token lo = st.lex.next();
      if (lo.kind != Token::Kind::number || (lo.text != "0" && lo.text != "1")) {
        Lexer::fail(lo, "expected a lower bound of 0 or 1");
      }
      st.expect_sym(",");
      Token hi = st.lex.next();
      bool hi_star = hi.kind == Token::Kind::sym && hi.text == "*";
      if (!hi_star && !(hi.kind == Token::Kind::number && hi.text == "1")) {
        Lexer::fail(hi, "expected an upper bound of 1 or *");
      }
      st.expect_sym("]");
      if (lo.text == "0" && hi_star) {
        Lexer::fail(lo, "cardinality [0,*] constrains nothing");
      }
      src.decls.push_back(CardDecl{cls, rel.text, lo.text == "1", hi_star, line});
    } else if (head.text == "unique") {
      std::string cls = st.declared_class("a class name");
      st.expect_sym(".");
      Token rel = st.expect_ident("a relation name");
      if (!st.sig.rel(rel.text) && !st.sig.rel(cls + "." + rel.text)) {
        Lexer::fail(rel, "use before declaration: '" + rel.text +
                             "' is not a declared relation");
      }
      src.decls.push_back(UniqueDecl{cls, rel.text, line});
    } else if (head.text == "axiom") {
      TermParser tp(st.lex, st.sig,
                    [&](const std::string& a, const std::string& b) {
                      return st.subclass(a, b);
                    });
      src.decls.push_back(AxiomDecl{tp.judgment(), line});
    } else {
      Lexer::fail(head, "unknown declaration '" + head.text + "'");
    }
  }
  return src;
}

}  // namespace conceptory::onto
