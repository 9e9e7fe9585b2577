#include "xfam/shifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace xfam {

namespace {

// One S_ij pass over sorted members; returns true if anything moved.
bool shift_members_inplace(std::vector<Mask>& members, int i, int j) {
  const Mask bi = element_bit(i);
  const Mask bj = element_bit(j);
  bool moved = false;
  std::vector<Mask> out;
  out.reserve(members.size());
  for (Mask a : members) {
    if ((a & bj) != 0 && (a & bi) == 0) {
      const Mask b = (a & ~bj) | bi;
      if (!std::binary_search(members.begin(), members.end(), b)) {
        out.push_back(b);
        moved = true;
        continue;
      }
    }
    out.push_back(a);
  }
  if (moved) {
    std::sort(out.begin(), out.end());
    members = std::move(out);
  }
  return moved;
}

}  // namespace

UniformFamily shift_family(const UniformFamily& f, int i, int j) {
  if (i < 1 || i >= j || j > f.ground_size)
    throw std::invalid_argument("shift requires 1 <= i < j <= ground size");
  std::vector<Mask> members = f.members;
  shift_members_inplace(members, i, j);
  // S_ij is injective on the family, so the size never changes.
  return UniformFamily{f.ground_size, f.k, std::move(members)};
}

bool is_left_compressed(const UniformFamily& f) {
  for (int j = 2; j <= f.ground_size; ++j) {
    const Mask bj = element_bit(j);
    for (int i = 1; i < j; ++i) {
      const Mask bi = element_bit(i);
      for (Mask a : f.members) {
        if ((a & bj) != 0 && (a & bi) == 0 && !f.contains((a & ~bj) | bi)) return false;
      }
    }
  }
  return true;
}

UniformFamily compress_to_fixpoint(const UniformFamily& f) {
  std::vector<Mask> members = f.members;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 2; j <= f.ground_size && !moved; ++j)
      for (int i = 1; i < j && !moved; ++i)
        moved = shift_members_inplace(members, i, j);
  }
  return UniformFamily{f.ground_size, f.k, std::move(members)};
}

FamilyPair compress_pair(const FamilyPair& p) {
  if (!is_cross_t_intersecting(p))
    throw std::domain_error("compress_pair requires a cross-t-intersecting pair");
  std::vector<Mask> am = p.a.members;
  std::vector<Mask> bm = p.b.members;
  const int hi = std::max(p.a.ground_size, p.b.ground_size);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 2; j <= hi && !moved; ++j) {
      for (int i = 1; i < j && !moved; ++i) {
        // The same (i, j) hits both families in one step (joint shift).
        bool m = false;
        if (j <= p.a.ground_size) m |= shift_members_inplace(am, i, j);
        if (j <= p.b.ground_size) m |= shift_members_inplace(bm, i, j);
        moved = m;
      }
    }
  }
  return FamilyPair{UniformFamily{p.a.ground_size, p.a.k, std::move(am)},
                    UniformFamily{p.b.ground_size, p.b.k, std::move(bm)}, p.t};
}

}  // namespace xfam
