#include "core/cells.hpp"

#include <algorithm>
#include <sstream>

namespace conceptory {

namespace {

void check_same_universe(int a, int b, const char* op) {
  if (a != b) {
    throw InputError(std::string(op) + ": operands live in different universes");
  }
}

}  // namespace

Universe make_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw Error(ErrorCode::invalid_universe,
                "universe size must be in 1.." + std::to_string(kMaxUniverse) +
                    ", got " + std::to_string(n));
  }
  return Universe{n};
}

Subset subset_bits(Universe u, uint32_t bits) {
  if ((bits & ~u.mask()) != 0) {
    throw InputError("subset contains elements outside the universe");
  }
  return Subset{u.size, bits};
}

Subset make_subset(Universe u, const std::vector<int>& elements) {
  uint32_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= u.size) {
      throw InputError("element " + std::to_string(e) +
                       " outside universe of size " + std::to_string(u.size));
    }
    bits |= 1u << e;
  }
  return Subset{u.size, bits};
}

Subset full_subset(Universe u) { return Subset{u.size, u.mask()}; }
Subset empty_subset(Universe u) { return Subset{u.size, 0}; }

std::vector<int> elements_of(const Subset& s) {
  std::vector<int> out;
  for (int e = 0; e < s.n; ++e) {
    if (s.contains(e)) out.push_back(e);
  }
  return out;
}

bool subset_leq(const Subset& a, const Subset& b) {
  check_same_universe(a.n, b.n, "subset_leq");
  return (a.bits & ~b.bits) == 0;
}

Subset subset_and(const Subset& a, const Subset& b) {
  check_same_universe(a.n, b.n, "subset_and");
  return Subset{a.n, a.bits & b.bits};
}

Subset subset_or(const Subset& a, const Subset& b) {
  check_same_universe(a.n, b.n, "subset_or");
  return Subset{a.n, a.bits | b.bits};
}

Subset subset_not(const Subset& a) {
  return Subset{a.n, ~a.bits & Universe{a.n}.mask()};
}

int Cell1::pair_count() const {
  int c = 0;
  for (int a = 0; a < n; ++a) c += __builtin_popcount(rows[a]);
  return c;
}

bool Cell1::pairs_empty() const {
  for (int a = 0; a < n; ++a) {
    if (rows[a] != 0) return false;
  }
  return true;
}

uint64_t Cell1::pairs_key() const {
  uint64_t key = 0;
  for (int a = 0; a < n; ++a) {
    key |= static_cast<uint64_t>(rows[a]) << (a * n);
  }
  return key;
}

std::vector<std::pair<int, int>> Cell1::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (has_pair(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Cell1 make_cell(const Subset& dom, const Subset& cod,
                const std::vector<std::pair<int, int>>& pairs) {
  check_same_universe(dom.n, cod.n, "make_cell");
  Cell1 f;
  f.n = dom.n;
  f.dom = dom.bits;
  f.cod = cod.bits;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= f.n || b < 0 || b >= f.n || !dom.contains(a) ||
        !cod.contains(b)) {
      throw InputError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") not inside dom x cod");
    }
    f.rows[a] |= 1u << b;
  }
  return f;
}

Cell1 make_cell_rows(const Subset& dom, const Subset& cod,
                     const std::array<uint16_t, kMaxUniverse>& rows) {
  check_same_universe(dom.n, cod.n, "make_cell_rows");
  Cell1 f;
  f.n = dom.n;
  f.dom = dom.bits;
  f.cod = cod.bits;
  f.rows = rows;
  for (int a = 0; a < f.n; ++a) {
    bool in_dom = dom.contains(a);
    if ((!in_dom && f.rows[a] != 0) || (f.rows[a] & ~cod.bits) != 0) {
      throw InputError("row " + std::to_string(a) + " escapes dom x cod");
    }
  }
  return f;
}

std::string to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const Cell1& f) {
  std::ostringstream os;
  os << '<' << '{';
  bool first = true;
  for (auto [a, b] : f.pairs()) {
    if (!first) os << ',';
    os << '(' << a << ',' << b << ')';
    first = false;
  }
  os << "}, " << to_string(f.dom_set()) << ", " << to_string(f.cod_set())
     << '>';
  return os.str();
}

bool leq(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "leq");
  for (int a = 0; a < f.n; ++a) {
    if (f.rows[a] & ~g.rows[a]) return false;
  }
  return true;
}

bool order_equiv(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "order_equiv");
  for (int a = 0; a < f.n; ++a) {
    if (f.rows[a] != g.rows[a]) return false;
  }
  return true;
}

bool cell_less(const Cell1& f, const Cell1& g) {
  if (f.dom != g.dom) return f.dom < g.dom;
  if (f.cod != g.cod) return f.cod < g.cod;
  for (int a = f.n - 1; a >= 0; --a) {
    if (f.rows[a] != g.rows[a]) return f.rows[a] < g.rows[a];
  }
  return false;
}

TwoCell::TwoCell(Cell1 s, Cell1 d) : src(std::move(s)), dst(std::move(d)) {
  if (!leq(src, dst)) {
    throw NoSuchTwoCell("no 2-cell " + to_string(src) + " -> " +
                        to_string(dst) + ": pair set not included");
  }
}

Cell1 identity(const Subset& a) {
  Cell1 f;
  f.n = a.n;
  f.dom = a.bits;
  f.cod = a.bits;
  for (int e = 0; e < a.n; ++e) {
    if (a.contains(e)) f.rows[e] = static_cast<uint16_t>(1u << e);
  }
  return f;
}

Cell1 compose(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "compose");
  if (f.dom != g.cod) {
    throw BoundaryMismatch("compose: dom " + to_string(f.dom_set()) +
                           " of outer cell != cod " + to_string(g.cod_set()) +
                           " of inner cell");
  }
  Cell1 h;
  h.n = f.n;
  h.dom = g.dom;
  h.cod = f.cod;
  for (int a = 0; a < h.n; ++a) {
    uint16_t mid = g.rows[a];
    uint16_t out = 0;
    while (mid) {
      int b = __builtin_ctz(mid);
      mid &= mid - 1;
      out |= f.rows[b];
    }
    h.rows[a] = out;
  }
  return h;
}

Cell1 restrict_cell(const Cell1& f, const Subset& a2, const Subset& b2) {
  check_same_universe(f.n, a2.n, "restrict");
  check_same_universe(f.n, b2.n, "restrict");
  if ((a2.bits & ~f.dom) != 0 || (b2.bits & ~f.cod) != 0) {
    throw NotASubobject("restrict: (" + to_string(a2) + ", " + to_string(b2) +
                        ") is not a subobject pair of (" +
                        to_string(f.dom_set()) + ", " + to_string(f.cod_set()) +
                        ")");
  }
  Cell1 h;
  h.n = f.n;
  h.dom = a2.bits;
  h.cod = b2.bits;
  for (int a = 0; a < h.n; ++a) {
    if (a2.contains(a)) h.rows[a] = f.rows[a] & b2.bits;
  }
  return h;
}

Cell1 extend_cell(const Cell1& f, const Subset& a2, const Subset& b2) {
  check_same_universe(f.n, a2.n, "extend");
  check_same_universe(f.n, b2.n, "extend");
  if ((f.dom & ~a2.bits) != 0 || (f.cod & ~b2.bits) != 0) {
    throw NotASuperobject("extend: (" + to_string(a2) + ", " + to_string(b2) +
                          ") is not a superobject pair of (" +
                          to_string(f.dom_set()) + ", " +
                          to_string(f.cod_set()) + ")");
  }
  Cell1 h = f;
  h.dom = a2.bits;
  h.cod = b2.bits;
  return h;
}

Cell1 restrict_dom(const Cell1& f, const Subset& a2) {
  return restrict_cell(f, a2, f.cod_set());
}

Cell1 restrict_cod(const Cell1& f, const Subset& b2) {
  return restrict_cell(f, f.dom_set(), b2);
}

Cell1 extend_dom(const Cell1& f, const Subset& a2) {
  return extend_cell(f, a2, f.cod_set());
}

Cell1 extend_cod(const Cell1& f, const Subset& b2) {
  return extend_cell(f, f.dom_set(), b2);
}

TwoCell restriction_arrow(const Cell1& f, const Subset& a2, const Subset& b2) {
  return TwoCell(restrict_cell(f, a2, b2), f);
}

TwoCell extension_arrow(const Cell1& f, const Subset& a2, const Subset& b2) {
  return TwoCell(f, extend_cell(f, a2, b2));
}

Cell1 meet(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "meet");
  Cell1 h;
  h.n = f.n;
  h.dom = f.dom & g.dom;
  h.cod = f.cod & g.cod;
  for (int a = 0; a < h.n; ++a) h.rows[a] = f.rows[a] & g.rows[a];
  return h;
}

Cell1 join(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "join");
  Cell1 h;
  h.n = f.n;
  h.dom = f.dom | g.dom;
  h.cod = f.cod | g.cod;
  for (int a = 0; a < h.n; ++a) h.rows[a] = f.rows[a] | g.rows[a];
  return h;
}

Cell1 top(Universe u) {
  Cell1 h;
  h.n = u.size;
  h.dom = u.mask();
  h.cod = u.mask();
  for (int a = 0; a < h.n; ++a) h.rows[a] = static_cast<uint16_t>(u.mask());
  return h;
}

Cell1 bottom(Universe u) {
  Cell1 h;
  h.n = u.size;
  return h;
}

Cell1 complement(const Cell1& f) {
  Universe u{f.n};
  Cell1 h = top(u);
  for (int a = 0; a < h.n; ++a) {
    h.rows[a] = static_cast<uint16_t>(~f.rows[a] & u.mask());
  }
  return h;
}

Cell1 impl(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "impl");
  Universe u{f.n};
  Cell1 h = top(u);
  for (int a = 0; a < h.n; ++a) {
    h.rows[a] = static_cast<uint16_t>((~f.rows[a] & u.mask()) | g.rows[a]);
  }
  return h;
}

Cell1 big_meet(const std::vector<Cell1>& s, Universe u) {
  if (s.empty()) return top(u);
  Cell1 acc = s.front();
  for (size_t i = 1; i < s.size(); ++i) acc = meet(acc, s[i]);
  return acc;
}

Cell1 big_join(const std::vector<Cell1>& s, Universe u) {
  if (s.empty()) return bottom(u);
  Cell1 acc = s.front();
  for (size_t i = 1; i < s.size(); ++i) acc = join(acc, s[i]);
  return acc;
}

Cell1 transpose(const Cell1& f) {
  Cell1 h;
  h.n = f.n;
  h.dom = f.cod;
  h.cod = f.dom;
  for (int a = 0; a < f.n; ++a) {
    uint16_t row = f.rows[a];
    while (row) {
      int b = __builtin_ctz(row);
      row &= row - 1;
      h.rows[b] |= static_cast<uint16_t>(1u << a);
    }
  }
  return h;
}

bool is_map(const Cell1& f) {
  for (int a = 0; a < f.n; ++a) {
    if (!f.dom_set().contains(a)) continue;
    if (__builtin_popcount(f.rows[a]) != 1) return false;
  }
  return true;
}

std::optional<Cell1> right_adjoint(const Cell1& f) {
  if (!is_map(f)) return std::nullopt;
  return transpose(f);
}

Cell1 hybrid_pre(const Cell1& f, const Subset& a2) {
  return restrict_dom(f, a2);
}

Cell1 hybrid_post(const Cell1& f, const Subset& b2) {
  return extend_cod(f, b2);
}

Cell1 logical_pullback(const Cell1& f, const Cell1& g) {
  check_same_universe(f.n, g.n, "logical_pullback");
  if (f.cod != g.cod) {
    throw BoundaryMismatch("logical_pullback: codomains differ, " +
                           to_string(f.cod_set()) + " vs " +
                           to_string(g.cod_set()));
  }
  uint32_t d = 0;
  for (int a = 0; a < f.n; ++a) {
    if (f.dom_set().contains(a) && g.dom_set().contains(a) &&
        f.rows[a] == g.rows[a]) {
      d |= 1u << a;
    }
  }
  return restrict_cell(f, Subset{f.n, d}, f.cod_set());
}

Cell1 projection(const Subset& a, const Subset& b, Side side) {
  Subset chosen = (side == Side::left) ? a : b;
  return restrict_dom(identity(chosen), subset_and(a, b));
}

Cell1 injection(const Subset& a, const Subset& b, Side side) {
  Subset chosen = (side == Side::left) ? a : b;
  return extend_cod(identity(chosen), subset_or(a, b));
}

}  // namespace conceptory
