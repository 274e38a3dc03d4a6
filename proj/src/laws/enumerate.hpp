#ifndef CONCEPTORY_LAWS_ENUMERATE_HPP
#define CONCEPTORY_LAWS_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "core/cells.hpp"

namespace conceptory::laws {

/// Subsets of `mask` in ascending numeric order (includes 0 and mask itself).
template <class F>
void for_each_submask(uint32_t mask, F&& body) {
  uint32_t s = 0;
  for (;;) {
    body(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

std::vector<Subset> all_subsets(Universe u);

/// Every 1-cell of the universe in canonical order: (dom bits, cod bits,
/// pairs bits) ascending, the pair (a,b) sitting at bit a*n+b. This is the
/// documented replay/regression order; 47 cells at n=2.
std::vector<Cell1> all_cells(Universe u);

/// Cells with the given boundaries, pairs ascending.
std::vector<Cell1> cells_between(const Subset& dom, const Subset& cod);

/// Pair-set tables over the full boundary <., X, X>, built by driving the
/// core operations once per entry. Used by the exhaustive checks whose
/// predicates only depend on pair sets (composition, order, meet/join and
/// transpose all ignore boundaries), where enumerating raw cell tuples at
/// n=3 would be astronomically redundant. Requires n <= 3.
class DenseContext {
 public:
  explicit DenseContext(Universe u);

  int n() const { return n_; }
  uint32_t count() const { return count_; }       // 2^(n*n) pair sets
  uint32_t full() const { return count_ - 1; }    // the full grid

  /// Pair set of compose(cell(i), cell(j)) — j applied first.
  uint16_t compose(uint32_t i, uint32_t j) const { return comp_[i * count_ + j]; }
  uint16_t transpose(uint32_t i) const { return trans_[i]; }
  uint16_t meet(uint32_t i, uint32_t j) const { return meet_[i * count_ + j]; }
  uint16_t join(uint32_t i, uint32_t j) const { return join_[i * count_ + j]; }
  static bool included(uint32_t i, uint32_t j) { return (i & ~j) == 0; }

  /// Bits of the region A x B inside the grid.
  uint32_t region(uint32_t dom_bits, uint32_t cod_bits) const;
  uint32_t diagonal(uint32_t bits) const;

  /// <mask, X, X> as a real cell, for violation reporting.
  Cell1 cell_of(uint32_t mask) const;

 private:
  int n_;
  uint32_t count_;
  std::vector<uint16_t> comp_;
  std::vector<uint16_t> trans_;
  std::vector<uint16_t> meet_;
  std::vector<uint16_t> join_;
};

}  // namespace conceptory::laws

#endif
