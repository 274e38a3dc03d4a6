#include "core/errors.hpp"
#include "ontology/ontology.hpp"

namespace conceptory::onto {

namespace {

using namespace kernel;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Theory compile(const OntologySource& src) {
  Theory t;
  // subclass edges seen so far, for validating redeclare/card targets
  std::vector<std::pair<std::string, std::string>> edges;
  auto subclass = [&](const std::string& sub, const std::string& sup) {
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
  };

  // The attribute path A.f denotes f itself at its declared domain and the
  // domain restriction of f on a declared subclass.
  auto attribute = [&](const std::string& cls, const std::string& rel,
                       int line) -> std::pair<RelPtr, const RelSig*> {
    if (const RelSig* path = t.sig.rel(cls + "." + rel)) {
      return {rel_name(path->name), path};
    }
    const RelSig* base = t.sig.rel(rel);
    if (!base) fail(line, "unknown relation '" + rel + "'");
    if (base->dom == cls) return {rel_name(rel), base};
    if (subclass(cls, base->dom)) {
      return {rel_ldown(rel_name(rel), cls_name(cls)), base};
    }
    fail(line, "'" + cls + "." + rel + "' names no attribute: '" + cls +
                   "' is not a declared subclass of '" + base->dom + "'");
  };

  for (const Decl& decl : src.decls) {
    if (const auto* d = std::get_if<ClassDecl>(&decl)) {
      t.sig.classes.push_back(d->name);
      if (d->supertype) {
        t.judgments.push_back(class_impl(cls_name(d->name), d->supertype));
        if (d->supertype->kind == ClassTerm::Kind::name) {
          edges.emplace_back(d->name, d->supertype->name);
        }
      }
    } else if (const auto* d = std::get_if<RelDecl>(&decl)) {
      t.sig.rels.push_back({d->name, d->dom, d->cod});
      t.judgments.push_back(
          typing(rel_name(d->name), cls_name(d->dom), cls_name(d->cod)));
    } else if (const auto* d = std::get_if<AbstractDecl>(&decl)) {
      ClassPtr cover = cls_name(d->subtypes.front());
      for (size_t i = 1; i < d->subtypes.size(); ++i) {
        cover = cls_or(cover, cls_name(d->subtypes[i]));
      }
      t.judgments.push_back(class_impl(cls_name(d->name), cover));
    } else if (const auto* d = std::get_if<OneOfDecl>(&decl)) {
      // pairwise disjointness as the cascade !(A1 & (A2 | ...)), ...,
      // !(A_{k-1} & A_k); negation states emptiness, i.e. => bottom
      for (size_t i = 0; i + 1 < d->names.size(); ++i) {
        ClassPtr rest = cls_name(d->names[i + 1]);
        for (size_t j = i + 2; j < d->names.size(); ++j) {
          rest = cls_or(rest, cls_name(d->names[j]));
        }
        t.judgments.push_back(
            class_impl(cls_and(cls_name(d->names[i]), rest), cls_bottom()));
      }
    } else if (const auto* d = std::get_if<RedeclareDecl>(&decl)) {
      const RelSig* base = t.sig.rel(d->rel);
      if (!base) fail(d->line, "unknown relation '" + d->rel + "'");
      if (!subclass(d->cls, base->dom)) {
        fail(d->line, "redeclare requires '" + d->cls +
                          "' to be a declared subclass of '" + base->dom + "'");
      }
      std::string path = d->cls + "." + d->rel;
      t.sig.rels.push_back({path, d->cls, d->new_cod});
      RelPtr restricted =
          rel_down(rel_name(d->rel), cls_name(d->cls), cls_name(d->new_cod));
      t.judgments.push_back(rel_impl(rel_name(path), restricted));
      t.judgments.push_back(rel_impl(restricted, rel_name(path)));
    } else if (const auto* d = std::get_if<CardDecl>(&decl)) {
      auto [term, sig] = attribute(d->cls, d->rel, d->line);
      if (d->lo == 1) {
        t.judgments.push_back(rel_impl(
            rel_id(cls_name(d->cls)), rel_comp(rel_transpose(term), term)));
      }
      if (!d->hi_star) {
        t.judgments.push_back(rel_impl(rel_comp(term, rel_transpose(term)),
                                       rel_id(cls_name(sig->cod))));
      }
    } else if (const auto* d = std::get_if<UniqueDecl>(&decl)) {
      auto [term, sig] = attribute(d->cls, d->rel, d->line);
      (void)sig;
      t.judgments.push_back(rel_impl(rel_comp(rel_transpose(term), term),
                                     rel_id(cls_name(d->cls))));
    } else if (const auto* d = std::get_if<AxiomDecl>(&decl)) {
      t.judgments.push_back(d->judgment);
    }
  }
  return t;
}

}  // namespace conceptory::onto
