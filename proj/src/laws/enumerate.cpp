#include "laws/enumerate.hpp"

namespace conceptory::laws {

std::vector<Subset> all_subsets(Universe u) {
  std::vector<Subset> out;
  out.reserve(1u << u.size);
  for (uint32_t bits = 0; bits <= u.mask(); ++bits) {
    out.push_back(Subset{u.size, bits});
  }
  return out;
}

std::vector<Cell1> cells_between(const Subset& dom, const Subset& cod) {
  int n = dom.n;
  // Allowed bit positions a*n+b in ascending order; depositing an ascending
  // selector onto them keeps the global pair masks ascending.
  std::vector<int> positions;
  for (int a = 0; a < n; ++a) {
    if (!dom.contains(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (cod.contains(b)) positions.push_back(a * n + b);
    }
  }
  std::vector<Cell1> out;
  out.reserve(1u << positions.size());
  for (uint64_t sel = 0; sel < (1ull << positions.size()); ++sel) {
    Cell1 f;
    f.n = n;
    f.dom = dom.bits;
    f.cod = cod.bits;
    for (size_t i = 0; i < positions.size(); ++i) {
      if ((sel >> i) & 1u) {
        f.rows[positions[i] / n] |= static_cast<uint16_t>(1u << (positions[i] % n));
      }
    }
    out.push_back(f);
  }
  return out;
}

std::vector<Cell1> all_cells(Universe u) {
  std::vector<Cell1> out;
  for (uint32_t dom = 0; dom <= u.mask(); ++dom) {
    for (uint32_t cod = 0; cod <= u.mask(); ++cod) {
      auto block = cells_between(Subset{u.size, dom}, Subset{u.size, cod});
      out.insert(out.end(), block.begin(), block.end());
    }
  }
  return out;
}

DenseContext::DenseContext(Universe u) : n_(u.size) {
  if (n_ > 3) {
    throw InputError("dense pair-set tables are limited to universe size 3");
  }
  count_ = 1u << (n_ * n_);
  comp_.resize(static_cast<size_t>(count_) * count_);
  meet_.resize(static_cast<size_t>(count_) * count_);
  join_.resize(static_cast<size_t>(count_) * count_);
  trans_.resize(count_);
  for (uint32_t i = 0; i < count_; ++i) {
    trans_[i] =
        static_cast<uint16_t>(conceptory::transpose(cell_of(i)).pairs_key());
  }
  for (uint32_t i = 0; i < count_; ++i) {
    Cell1 outer = cell_of(i);
    for (uint32_t j = 0; j < count_; ++j) {
      Cell1 inner = cell_of(j);
      comp_[i * count_ + j] =
          static_cast<uint16_t>(conceptory::compose(outer, inner).pairs_key());
      meet_[i * count_ + j] =
          static_cast<uint16_t>(conceptory::meet(outer, inner).pairs_key());
      join_[i * count_ + j] =
          static_cast<uint16_t>(conceptory::join(outer, inner).pairs_key());
    }
  }
}

uint32_t DenseContext::region(uint32_t dom_bits, uint32_t cod_bits) const {
  uint32_t mask = 0;
  for (int a = 0; a < n_; ++a) {
    if ((dom_bits >> a) & 1u) mask |= cod_bits << (a * n_);
  }
  return mask;
}

uint32_t DenseContext::diagonal(uint32_t bits) const {
  uint32_t mask = 0;
  for (int a = 0; a < n_; ++a) {
    if ((bits >> a) & 1u) mask |= 1u << (a * n_ + a);
  }
  return mask;
}

Cell1 DenseContext::cell_of(uint32_t mask) const {
  Cell1 f;
  f.n = n_;
  Universe u{n_};
  f.dom = u.mask();
  f.cod = u.mask();
  for (int a = 0; a < n_; ++a) {
    f.rows[a] = static_cast<uint16_t>((mask >> (a * n_)) & u.mask());
  }
  return f;
}

}  // namespace conceptory::laws
