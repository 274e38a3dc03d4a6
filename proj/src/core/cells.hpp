#ifndef CONCEPTORY_CORE_CELLS_HPP
#define CONCEPTORY_CORE_CELLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

// Finite relational model over a universe X = {0..n-1}, n <= 16.
//
// 0-cells are subsets of X, 1-cells are relations with explicit boundaries
// <pairs, dom, cod>, and a 2-cell f -> g exists exactly when the pair set of
// f is contained in the pair set of g (boundaries do not enter the order).
// All values are immutable; every operation is a pure function.

namespace conceptory {

constexpr int kMaxUniverse = 16;

/// Carrier set X of size n; elements are 0..n-1.
struct Universe {
  int size = 1;

  uint32_t mask() const { return (size >= 32) ? ~0u : ((1u << size) - 1u); }

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// Validates 1 <= n <= 16.
Universe make_universe(int n);

/// Subset of a universe, bit i set = element i is a member.
struct Subset {
  int n = 1;
  uint32_t bits = 0;

  bool contains(int e) const { return (bits >> e) & 1u; }
  int count() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }

  friend bool operator==(const Subset&, const Subset&) = default;
};

Subset subset_bits(Universe u, uint32_t bits);
Subset make_subset(Universe u, const std::vector<int>& elements);
Subset full_subset(Universe u);
Subset empty_subset(Universe u);
std::vector<int> elements_of(const Subset& s);

bool subset_leq(const Subset& a, const Subset& b);
Subset subset_and(const Subset& a, const Subset& b);
Subset subset_or(const Subset& a, const Subset& b);
Subset subset_not(const Subset& a);

/// 1-cell <pairs, dom, cod>: a relation pairs <= dom x cod together with its
/// boundaries. rows[a] is the image of a as a bitmask; rows of elements
/// outside dom are empty.
struct Cell1 {
  int n = 1;
  uint32_t dom = 0;
  uint32_t cod = 0;
  std::array<uint16_t, kMaxUniverse> rows{};

  Subset dom_set() const { return Subset{n, dom}; }
  Subset cod_set() const { return Subset{n, cod}; }
  bool has_pair(int a, int b) const { return (rows[a] >> b) & 1u; }
  int pair_count() const;
  bool pairs_empty() const;

  /// Pair set packed row-major into one word: bit a*n+b = (a,b). Total order
  /// on pair sets used for canonical enumeration; requires n <= 8.
  uint64_t pairs_key() const;

  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Cell1&, const Cell1&) = default;
};

Cell1 make_cell(const Subset& dom, const Subset& cod,
                const std::vector<std::pair<int, int>>& pairs);
Cell1 make_cell_rows(const Subset& dom, const Subset& cod,
                     const std::array<uint16_t, kMaxUniverse>& rows);

std::string to_string(const Subset& s);
std::string to_string(const Cell1& f);

// --- order ---------------------------------------------------------------

/// The one-and-only 2-cell criterion: pair-set inclusion, boundaries ignored.
/// A preorder, not a partial order (empty cells at different boundaries are
/// equivalent but unequal).
bool leq(const Cell1& f, const Cell1& g);

/// leq both ways.
bool order_equiv(const Cell1& f, const Cell1& g);

/// Canonical comparison by (dom bits, cod bits, pairs bits) ascending.
bool cell_less(const Cell1& f, const Cell1& g);

/// 2-cell src -> dst; constructible only when leq(src, dst).
struct TwoCell {
  Cell1 src;
  Cell1 dst;

  TwoCell(Cell1 s, Cell1 d);

  friend bool operator==(const TwoCell&, const TwoCell&) = default;
};

// --- category structure ---------------------------------------------------

/// <diagonal of A, A, A>.
Cell1 identity(const Subset& a);

/// compose(f, g) = f after g: pairs {(a,c) : exists b, (a,b) in g, (b,c) in f}
/// with boundaries <dom g, cod f>. Requires dom(f) == cod(g) exactly; no
/// silent boundary coercion (use restrict/extend explicitly).
Cell1 compose(const Cell1& f, const Cell1& g);

// --- restriction / extension ----------------------------------------------

/// <(a2 x b2) & pairs, a2, b2>; requires a2 <= dom(f), b2 <= cod(f).
Cell1 restrict_cell(const Cell1& f, const Subset& a2, const Subset& b2);

/// <pairs, a2, b2>; requires dom(f) <= a2, cod(f) <= b2.
Cell1 extend_cell(const Cell1& f, const Subset& a2, const Subset& b2);

Cell1 restrict_dom(const Cell1& f, const Subset& a2);
Cell1 restrict_cod(const Cell1& f, const Subset& b2);
Cell1 extend_dom(const Cell1& f, const Subset& a2);
Cell1 extend_cod(const Cell1& f, const Subset& b2);

/// Universal 2-cell restrict(f,a2,b2) -> f.
TwoCell restriction_arrow(const Cell1& f, const Subset& a2, const Subset& b2);

/// Universal 2-cell f -> extend(f,a2,b2).
TwoCell extension_arrow(const Cell1& f, const Subset& a2, const Subset& b2);

// --- lattice / Boolean structure -------------------------------------------

/// Componentwise: pairs, dom and cod all intersect / unite. These choices
/// make the four boundary-compatibility equations hold as exact equalities.
Cell1 meet(const Cell1& f, const Cell1& g);
Cell1 join(const Cell1& f, const Cell1& g);
Cell1 top(Universe u);
Cell1 bottom(Universe u);

/// Complement and implication live at the full boundary <., X, X>; Boolean
/// laws hold up to order_equiv, not cell equality.
Cell1 complement(const Cell1& f);
Cell1 impl(const Cell1& f, const Cell1& g);

Cell1 big_meet(const std::vector<Cell1>& s, Universe u);
Cell1 big_join(const std::vector<Cell1>& s, Universe u);

// --- involution and maps ----------------------------------------------------

/// <{(b,a) : (a,b) in pairs}, cod, dom>.
Cell1 transpose(const Cell1& f);

/// Total and single-valued on dom.
bool is_map(const Cell1& f);

/// transpose(f) when is_map(f), absent otherwise.
std::optional<Cell1> right_adjoint(const Cell1& f);

// --- hybrid composition and derived constructions --------------------------

/// f * alpha = restrict_dom(f, a2).
Cell1 hybrid_pre(const Cell1& f, const Subset& a2);

/// alpha * f = extend_cod(f, b2).
Cell1 hybrid_post(const Cell1& f, const Subset& b2);

/// Largest common domain-restriction of f and g sharing codomain C: restricts
/// f to D = {x in dom(f) & dom(g) : f and g have the same row at x}.
Cell1 logical_pullback(const Cell1& f, const Cell1& g);

enum class Side { left, right };

/// restrict_dom(identity(side), A & B); a map for every A, B.
Cell1 projection(const Subset& a, const Subset& b, Side side);

/// extend_cod(identity(side), A | B); a map for every A, B.
Cell1 injection(const Subset& a, const Subset& b, Side side);

}  // namespace conceptory

#endif
