#ifndef CONCEPTORY_ONTOLOGY_ONTOLOGY_HPP
#define CONCEPTORY_ONTOLOGY_ONTOLOGY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kernel/semantics.hpp"
#include "kernel/terms.hpp"
#include "kernel/theory.hpp"

// Ontology front-end: a small declaration language for schemas in the
// EXPRESS mold (subtyping, abstract supertypes, one-of partitions,
// redeclared attributes, cardinality and uniqueness constraints), compiled
// to judgments and decided by bounded model search.

namespace conceptory::onto {

using kernel::Judgment;
using kernel::ModelAssignment;
using kernel::Theory;

struct ClassDecl {
  std::string name;
  kernel::ClassPtr supertype;  // may be null
  int line;
};
struct RelDecl {
  std::string name, dom, cod;
  int line;
};
struct AbstractDecl {
  std::string name;
  std::vector<std::string> subtypes;
  int line;
};
struct OneOfDecl {
  std::vector<std::string> names;
  int line;
};
struct RedeclareDecl {
  std::string cls, rel, new_cod;
  int line;
};
struct CardDecl {
  std::string cls, rel;
  int lo;        // 0 or 1
  bool hi_star;  // [_, *] vs [_, 1]
  int line;
};
struct UniqueDecl {
  std::string cls, rel;
  int line;
};
struct AxiomDecl {
  Judgment judgment;
  int line;
};

using Decl = std::variant<ClassDecl, RelDecl, AbstractDecl, OneOfDecl,
                          RedeclareDecl, CardDecl, UniqueDecl, AxiomDecl>;

struct OntologySource {
  std::vector<Decl> decls;
};

/// Parses the declaration language; names must be declared before use.
/// Diagnostics carry line/column.
OntologySource parse(const std::string& text);

/// Deterministic: one construct emits its fixed judgment forms, in
/// declaration order.
Theory compile(const OntologySource& src);

/// Iterates universe sizes 1..max_universe and searches assignments in
/// canonical order (classes in declaration order by ascending subset bits,
/// then relations by ascending pair bits at their declared boundaries).
/// Absence only means "no model up to the bound".
std::optional<ModelAssignment> find_model(const Theory& t, int max_universe,
                                          bool nonempty);

struct VerifyEntry {
  std::string judgment;
  bool holds;
  std::string error;  // non-empty when evaluation failed
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool pass() const;
};

VerifyReport verify_model(const Theory& t, const ModelAssignment& m);

/// Canonical JSON image of a model; bit-exact for golden files.
std::string write_model(const Theory& t, const ModelAssignment& m);
ModelAssignment read_model(const Theory& t, const std::string& json_text);

}  // namespace conceptory::onto

#endif
