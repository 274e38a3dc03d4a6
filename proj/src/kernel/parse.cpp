#include "kernel/parse.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace conceptory::kernel {

namespace {

bool is_rel_keyword(const std::string& s) {
  return s == "id" || s == "down" || s == "up" || s == "ldown" ||
         s == "rdown" || s == "lup" || s == "rup";
}

}  // namespace

Lexer::Lexer(const std::string& text) {
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, int l, int c) {
    tokens_.push_back({k, std::move(t), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      push(Token::Kind::ident, text.substr(i, j - i), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      push(Token::Kind::number, text.substr(i, j - i), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "=>" || two == "->" || two == "~>" || two == "<=") {
      push(Token::Kind::sym, two, tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (std::string(".:,()[]&|!~*").find(c) != std::string::npos) {
      push(Token::Kind::sym, std::string(1, c), tl, tc);
      ++i;
      ++col;
      continue;
    }
    throw InputError("line " + std::to_string(tl) + ", col " +
                     std::to_string(tc) + ": unexpected character '" +
                     std::string(1, c) + "'");
  }
  tokens_.push_back({Token::Kind::eof, "", line, col});
}

const Token& Lexer::peek(size_t ahead) const {
  size_t idx = pos_ + ahead;
  if (idx >= tokens_.size()) idx = tokens_.size() - 1;
  return tokens_[idx];
}

Token Lexer::next() {
  const Token& t = peek();
  if (t.kind != Token::Kind::eof) ++pos_;
  return t;
}

void Lexer::fail(const Token& at, const std::string& msg) {
  throw InputError("line " + std::to_string(at.line) + ", col " +
                   std::to_string(at.col) + ": " + msg);
}

TermParser::TermParser(Lexer& lex, const Signature& sig, SubclassFn subclass)
    : lex_(lex), sig_(sig), subclass_(std::move(subclass)) {}

Token TermParser::expect_sym(const std::string& s) {
  Token t = lex_.next();
  if (t.kind != Token::Kind::sym || t.text != s) {
    Lexer::fail(t, "expected '" + s + "'");
  }
  return t;
}

Token TermParser::expect_ident() {
  Token t = lex_.next();
  if (t.kind != Token::Kind::ident) Lexer::fail(t, "expected a name");
  return t;
}

ClassPtr TermParser::class_primary() {
  const Token& t = lex_.peek();
  if (t.kind == Token::Kind::sym && t.text == "!") {
    lex_.next();
    return cls_not(class_primary());
  }
  if (t.kind == Token::Kind::sym && t.text == "(") {
    lex_.next();
    ClassPtr inner = class_expr();
    expect_sym(")");
    return inner;
  }
  if (t.kind == Token::Kind::ident) {
    if (t.text == "top") {
      lex_.next();
      return cls_top();
    }
    if (t.text == "bottom") {
      lex_.next();
      return cls_bottom();
    }
    if (sig_.has_class(t.text)) {
      return cls_name(lex_.next().text);
    }
    if (sig_.rel(t.text)) {
      Lexer::fail(t, "'" + t.text + "' is a relation name, expected a class");
    }
    Lexer::fail(t, "unknown class name '" + t.text + "'");
  }
  Lexer::fail(t, "expected a class expression");
}

ClassPtr TermParser::class_and() {
  ClassPtr lhs = class_primary();
  while (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "&") {
    lex_.next();
    lhs = cls_and(lhs, class_primary());
  }
  return lhs;
}

ClassPtr TermParser::class_or() {
  ClassPtr lhs = class_and();
  while (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "|") {
    lex_.next();
    lhs = cls_or(lhs, class_and());
  }
  return lhs;
}

ClassPtr TermParser::class_expr() {
  ClassPtr lhs = class_or();
  if (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "~>") {
    lex_.next();
    return cls_impl(lhs, class_expr());  // right-assoc
  }
  return lhs;
}

RelPtr TermParser::resolve_rel_name(const Token& tok) {
  // path sugar: C.f
  if (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "." &&
      lex_.peek(1).kind == Token::Kind::ident) {
    lex_.next();
    Token member = expect_ident();
    std::string path = tok.text + "." + member.text;
    if (sig_.rel(path)) return rel_name(path);
    const RelSig* base = sig_.rel(member.text);
    if (!sig_.has_class(tok.text)) {
      Lexer::fail(tok, "unknown class name '" + tok.text + "' in '" + path + "'");
    }
    if (!base) {
      Lexer::fail(member, "unknown relation name '" + member.text + "'");
    }
    if (base->dom == tok.text) return rel_name(member.text);
    if (subclass_ && subclass_(tok.text, base->dom)) {
      return rel_ldown(rel_name(member.text), cls_name(tok.text));
    }
    Lexer::fail(tok, "'" + tok.text + "' is not a declared subclass of '" +
                         base->dom + "', cannot elaborate '" + path + "'");
  }
  if (sig_.rel(tok.text)) return rel_name(tok.text);
  if (sig_.has_class(tok.text)) {
    Lexer::fail(tok, "'" + tok.text + "' is a class name, expected a relation");
  }
  Lexer::fail(tok, "unknown relation name '" + tok.text + "'");
}

RelPtr TermParser::rel_primary() {
  const Token& t = lex_.peek();
  if (t.kind == Token::Kind::sym && t.text == "~") {
    lex_.next();
    return rel_transpose(rel_primary());
  }
  if (t.kind == Token::Kind::sym && t.text == "!") {
    lex_.next();
    return rel_not(rel_primary());
  }
  if (t.kind == Token::Kind::sym && t.text == "(") {
    lex_.next();
    RelPtr inner = rel_expr();
    expect_sym(")");
    return inner;
  }
  if (t.kind == Token::Kind::ident) {
    if (t.text == "top") {
      lex_.next();
      return rel_top();
    }
    if (t.text == "bottom") {
      lex_.next();
      return rel_bottom();
    }
    if (t.text == "id") {
      lex_.next();
      expect_sym("(");
      ClassPtr a = class_expr();
      expect_sym(")");
      return rel_id(a);
    }
    if (t.text == "down" || t.text == "up") {
      bool is_down = t.text == "down";
      lex_.next();
      expect_sym("(");
      RelPtr f = rel_expr();
      expect_sym(",");
      ClassPtr a = class_expr();
      expect_sym(",");
      ClassPtr b = class_expr();
      expect_sym(")");
      return is_down ? rel_down(f, a, b) : rel_up(f, a, b);
    }
    if (t.text == "ldown" || t.text == "rdown" || t.text == "lup" ||
        t.text == "rup") {
      std::string op = lex_.next().text;
      expect_sym("(");
      RelPtr f = rel_expr();
      expect_sym(",");
      ClassPtr a = class_expr();
      expect_sym(")");
      if (op == "ldown") return rel_ldown(f, a);
      if (op == "rdown") return rel_rdown(f, a);
      if (op == "lup") return rel_lup(f, a);
      return rel_rup(f, a);
    }
    Token tok = lex_.next();
    return resolve_rel_name(tok);
  }
  Lexer::fail(t, "expected a relation expression");
}

RelPtr TermParser::rel_comp_level() {
  RelPtr lhs = rel_primary();
  while (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "o") {
    lex_.next();
    lhs = rel_comp(lhs, rel_primary());
  }
  return lhs;
}

RelPtr TermParser::rel_and_level() {
  RelPtr lhs = rel_comp_level();
  while (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "&") {
    lex_.next();
    lhs = rel_and(lhs, rel_comp_level());
  }
  return lhs;
}

RelPtr TermParser::rel_or_level() {
  RelPtr lhs = rel_and_level();
  while (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == "|") {
    lex_.next();
    lhs = rel_or(lhs, rel_and_level());
  }
  return lhs;
}

RelPtr TermParser::rel_expr() { return rel_or_level(); }

Judgment TermParser::judgment() {
  const Token& t = lex_.peek();
  // def(A, B, <boundary op>)
  if (t.kind == Token::Kind::ident && t.text == "def") {
    lex_.next();
    expect_sym("(");
    ClassPtr a = class_expr();
    expect_sym(",");
    ClassPtr b = class_expr();
    expect_sym(",");
    Token at = lex_.peek();
    RelPtr app = rel_expr();
    expect_sym(")");
    switch (app->kind) {
      case RelTerm::Kind::down:
      case RelTerm::Kind::up:
      case RelTerm::Kind::ldown:
      case RelTerm::Kind::rdown:
      case RelTerm::Kind::lup:
      case RelTerm::Kind::rup:
        break;
      default:
        Lexer::fail(at, "def expects a boundary-operator application");
    }
    return defined(a, b, app);
  }
  // typing sugar A.f : B
  if (t.kind == Token::Kind::ident && lex_.peek(1).text == "." &&
      lex_.peek(2).kind == Token::Kind::ident && lex_.peek(3).text == ":") {
    Token cls = lex_.next();
    lex_.next();  // dot
    Token member = lex_.next();
    lex_.next();  // colon
    if (!sig_.has_class(cls.text)) {
      Lexer::fail(cls, "unknown class name '" + cls.text + "'");
    }
    std::string path = cls.text + "." + member.text;
    RelPtr f;
    if (sig_.rel(path)) {
      f = rel_name(path);
    } else if (sig_.rel(member.text)) {
      f = rel_name(member.text);
    } else {
      Lexer::fail(member, "unknown relation name '" + member.text + "'");
    }
    ClassPtr b = class_expr();
    return typing(f, cls_name(cls.text), b);
  }
  // Route on the first identifier when it decides class vs relation;
  // otherwise try the relation reading and fall back.
  bool prefer_rel;
  bool ambiguous = false;
  if (t.kind == Token::Kind::ident && !is_rel_keyword(t.text) &&
      t.text != "top" && t.text != "bottom") {
    prefer_rel = sig_.rel(t.text) != nullptr ||
                 (lex_.peek(1).text == "." &&
                  lex_.peek(2).kind == Token::Kind::ident);
  } else if (t.kind == Token::Kind::sym && t.text == "~") {
    prefer_rel = true;
  } else if (t.kind == Token::Kind::ident && is_rel_keyword(t.text)) {
    prefer_rel = true;
  } else {
    prefer_rel = true;
    ambiguous = true;
  }
  size_t start = lex_.position();
  if (prefer_rel) {
    try {
      RelPtr lhs = rel_expr();
      const Token& follow = lex_.peek();
      if (follow.kind == Token::Kind::sym && follow.text == ":") {
        lex_.next();
        ClassPtr a = class_expr();
        expect_sym("->");
        ClassPtr b = class_expr();
        return typing(lhs, a, b);
      }
      if (follow.kind == Token::Kind::sym && follow.text == "=>") {
        lex_.next();
        RelPtr rhs = rel_expr();
        return rel_impl(lhs, rhs);
      }
      Lexer::fail(follow, "expected ':' or '=>'");
    } catch (const Error&) {
      if (!ambiguous) throw;
      lex_.rewind(start);
    }
  }
  ClassPtr lhs = class_expr();
  expect_sym("=>");
  ClassPtr rhs = class_expr();
  return class_impl(lhs, rhs);
}

Derivation parse_script(const std::string& text, const Signature& sig,
                        SubclassFn subclass) {
  Lexer lex(text);
  TermParser parser(lex, sig, std::move(subclass));
  Derivation d;
  int expected = 1;
  while (lex.peek().kind != Token::Kind::eof) {
    Token num = lex.next();
    if (num.kind != Token::Kind::number) {
      Lexer::fail(num, "expected a step number");
    }
    if (std::stoi(num.text) != expected) {
      Lexer::fail(num, "expected step " + std::to_string(expected));
    }
    Token dot = lex.next();
    if (dot.kind != Token::Kind::sym || dot.text != ".") {
      Lexer::fail(dot, "expected '.' after the step number");
    }
    Step step;
    step.index = expected;
    step.judgment = parser.judgment();
    Token open = lex.next();
    if (open.kind != Token::Kind::sym || open.text != "[") {
      Lexer::fail(open, "expected '[' before the justification");
    }
    Token rule = lex.next();
    if (rule.kind != Token::Kind::ident) {
      Lexer::fail(rule, "expected a rule name");
    }
    step.rule = rule.text;
    while (lex.peek().kind == Token::Kind::number) {
      step.premises.push_back(std::stoi(lex.next().text));
    }
    Token close = lex.next();
    if (close.kind != Token::Kind::sym || close.text != "]") {
      Lexer::fail(close, "expected ']' after the justification");
    }
    d.steps.push_back(std::move(step));
    ++expected;
  }
  return d;
}

Judgment parse_judgment(const std::string& text, const Signature& sig,
                        SubclassFn subclass) {
  Lexer lex(text);
  TermParser parser(lex, sig, std::move(subclass));
  Judgment j = parser.judgment();
  if (lex.peek().kind != Token::Kind::eof) {
    Lexer::fail(lex.peek(), "unexpected trailing input");
  }
  return j;
}

}  // namespace conceptory::kernel
