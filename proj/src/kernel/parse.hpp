#ifndef CONCEPTORY_KERNEL_PARSE_HPP
#define CONCEPTORY_KERNEL_PARSE_HPP

#include <functional>
#include <string>
#include <vector>

#include "kernel/derivation.hpp"
#include "kernel/terms.hpp"
#include "kernel/theory.hpp"

// ASCII front-end for judgments and proof scripts. Identifier kinds are
// resolved against a signature, which is what disambiguates class- from
// relation-level implications; diagnostics carry line and column.
//
// Proof script, one step per line:
//   N. <judgment> [<rule> p1 p2 ...]
// with `//` comments. Dot sugar: "A.f : B" is the typing of f at A->B, and
// "C.f" in term position is f itself when C is f's declared domain, or
// ldown(f,C) when C is a declared subclass of it.

namespace conceptory::kernel {

struct Token {
  enum class Kind { ident, number, sym, eof };
  Kind kind;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text);

  const Token& peek(size_t ahead = 0) const;
  Token next();
  size_t position() const { return pos_; }
  void rewind(size_t pos) { pos_ = pos; }

  [[noreturn]] static void fail(const Token& at, const std::string& msg);

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

using SubclassFn = std::function<bool(const std::string&, const std::string&)>;

class TermParser {
 public:
  TermParser(Lexer& lex, const Signature& sig, SubclassFn subclass);

  Judgment judgment();
  ClassPtr class_expr();
  RelPtr rel_expr();

 private:
  ClassPtr class_or();
  ClassPtr class_and();
  ClassPtr class_primary();
  RelPtr rel_or_level();
  RelPtr rel_and_level();
  RelPtr rel_comp_level();
  RelPtr rel_primary();
  RelPtr resolve_rel_name(const Token& tok);
  Token expect_sym(const std::string& s);
  Token expect_ident();

  Lexer& lex_;
  const Signature& sig_;
  SubclassFn subclass_;
};

/// Parses a whole proof script. Step numbers must run 1..N.
Derivation parse_script(const std::string& text, const Signature& sig,
                        SubclassFn subclass);

/// Parses a single judgment (used by tests and the ontology axiom form).
Judgment parse_judgment(const std::string& text, const Signature& sig,
                        SubclassFn subclass);

}  // namespace conceptory::kernel

#endif
