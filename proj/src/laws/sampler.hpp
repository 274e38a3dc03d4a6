#ifndef CONCEPTORY_LAWS_SAMPLER_HPP
#define CONCEPTORY_LAWS_SAMPLER_HPP

#include <cstdint>
#include <string>

#include "core/cells.hpp"

namespace conceptory::laws {

/// splitmix64; self-contained so that seeded runs are byte-identical across
/// platforms and standard libraries.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, k); k >= 1.
  uint64_t below(uint64_t k) {
    uint64_t mask = k - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      uint64_t v = next() & mask;
      if (v < k) return v;
    }
  }

  bool coin() { return next() & 1u; }

  /// Uniform subset of the given bitmask.
  uint32_t submask(uint32_t mask) {
    uint32_t r = static_cast<uint32_t>(next());
    return r & mask;
  }

  Subset subset(Universe u) { return Subset{u.size, submask(u.mask())}; }

  Subset subset_of(const Subset& s) { return Subset{s.n, submask(s.bits)}; }

  Subset superset_of(const Subset& s) {
    Universe u{s.n};
    return Subset{s.n, s.bits | submask(u.mask() & ~s.bits)};
  }

  /// Uniform pairs within dom x cod.
  Cell1 cell_between(const Subset& dom, const Subset& cod) {
    Cell1 f;
    f.n = dom.n;
    f.dom = dom.bits;
    f.cod = cod.bits;
    for (int a = 0; a < f.n; ++a) {
      if (dom.contains(a)) f.rows[a] = static_cast<uint16_t>(submask(cod.bits));
    }
    return f;
  }

  /// dom, cod, then pairs, each uniform.
  Cell1 cell(Universe u) {
    Subset d = subset(u);
    Subset c = subset(u);
    return cell_between(d, c);
  }

  /// Same boundaries as f, pairs a uniform subset of f's pairs.
  Cell1 subcell_of(const Cell1& f) {
    Cell1 g = f;
    for (int a = 0; a < f.n; ++a) g.rows[a] = f.rows[a] & static_cast<uint16_t>(submask(0xffffu));
    return g;
  }

 private:
  uint64_t state_;
};

/// Stable per-law stream: derived from the suite seed and the law name so
/// that filtering the law list does not shift any law's samples.
uint64_t derive_seed(uint64_t suite_seed, const std::string& law_name);

}  // namespace conceptory::laws

#endif
