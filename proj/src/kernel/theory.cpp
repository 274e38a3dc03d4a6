#include "kernel/theory.hpp"

#include <algorithm>

namespace conceptory::kernel {

bool Signature::has_class(const std::string& n) const {
  return std::find(classes.begin(), classes.end(), n) != classes.end();
}

const RelSig* Signature::rel(const std::string& n) const {
  for (const RelSig& r : rels) {
    if (r.name == n) return &r;
  }
  return nullptr;
}

bool Theory::declared_subclass(const std::string& sub,
                               const std::string& sup) const {
  if (sub == sup) return true;
  std::vector<std::string> frontier = {sub};
  std::vector<std::string> seen = {sub};
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    for (const Judgment& j : judgments) {
      if (j.kind != Judgment::Kind::class_impl) continue;
      if (j.cls_a->kind != ClassTerm::Kind::name ||
          j.cls_b->kind != ClassTerm::Kind::name) {
        continue;
      }
      if (j.cls_a->name != cur) continue;
      if (j.cls_b->name == sup) return true;
      if (std::find(seen.begin(), seen.end(), j.cls_b->name) == seen.end()) {
        seen.push_back(j.cls_b->name);
        frontier.push_back(j.cls_b->name);
      }
    }
  }
  return false;
}

}  // namespace conceptory::kernel
