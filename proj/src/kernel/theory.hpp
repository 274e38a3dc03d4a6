#ifndef CONCEPTORY_KERNEL_THEORY_HPP
#define CONCEPTORY_KERNEL_THEORY_HPP

#include <string>
#include <vector>

#include "kernel/terms.hpp"

namespace conceptory::kernel {

struct RelSig {
  std::string name;
  std::string dom;
  std::string cod;
};

struct Signature {
  std::vector<std::string> classes;
  std::vector<RelSig> rels;

  bool has_class(const std::string& n) const;
  const RelSig* rel(const std::string& n) const;
};

/// A signature plus its judgments, in declaration order.
struct Theory {
  Signature sig;
  std::vector<Judgment> judgments;

  /// Reflexive-transitive subclassing over the plain-name class
  /// implications among the judgments; compound supertype expressions do
  /// not contribute edges. Used by the dot-sugar elaborator.
  bool declared_subclass(const std::string& sub, const std::string& sup) const;
};

}  // namespace conceptory::kernel

#endif
