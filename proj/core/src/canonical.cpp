#include <algorithm>
#include <numeric>

#include "xfam/constructions.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"

namespace xfam {

namespace {

constexpr int kMaxRelabelGround = 10;

Mask remap_mask(Mask a, const std::vector<int>& perm) {
  Mask out = 0;
  while (a != 0) {
    const int e = std::countr_zero(a) + 1;
    out |= element_bit(perm[static_cast<std::size_t>(e - 1)]);
    a &= a - 1;
  }
  return out;
}

std::vector<Mask> remap_members(const std::vector<Mask>& members, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(members.size());
  for (Mask a : members) out.push_back(remap_mask(a, perm));
  std::sort(out.begin(), out.end());
  return out;
}

// perm[p-1] is the image of element p; visits every permutation of [hi] that
// maps [lo] onto itself (all of S_hi when lo == hi).
template <typename Fn>
void for_each_group_perm(int lo, int hi, Fn&& fn) {
  std::vector<int> low(static_cast<std::size_t>(lo));
  std::iota(low.begin(), low.end(), 1);
  if (lo == hi) {
    do {
      fn(low);
    } while (std::next_permutation(low.begin(), low.end()));
    return;
  }
  std::vector<int> high(static_cast<std::size_t>(hi - lo));
  std::iota(high.begin(), high.end(), lo + 1);
  std::vector<int> full(static_cast<std::size_t>(hi));
  do {
    std::vector<int> high0 = high;
    do {
      std::copy(low.begin(), low.end(), full.begin());
      std::copy(high0.begin(), high0.end(), full.begin() + lo);
      fn(full);
    } while (std::next_permutation(high0.begin(), high0.end()));
  } while (std::next_permutation(low.begin(), low.end()));
}

}  // namespace

bool pair_less(const FamilyPair& x, const FamilyPair& y) {
  if (x.a.members != y.a.members) return x.a.members < y.a.members;
  return x.b.members < y.b.members;
}

FamilyPair canonical_pair(const FamilyPair& p) {
  FamilyPair c = compress_pair(p);
  const int n = c.a.ground_size, m = c.b.ground_size;
  const int lo = std::min(n, m), hi = std::max(n, m);
  if (hi > kMaxRelabelGround)
    throw capacity_error("canonicalization supports ground sizes up to 10");

  std::vector<Mask> best_a = c.a.members;
  std::vector<Mask> best_b = c.b.members;
  for_each_group_perm(lo, hi, [&](const std::vector<int>& perm) {
    std::vector<Mask> ca = remap_members(c.a.members, perm);
    if (ca > best_a) return;
    std::vector<Mask> cb = remap_members(c.b.members, perm);
    if (ca == best_a && cb >= best_b) return;
    // Only relabelings that stay left-compressed count (keeps the form
    // idempotent: compression then fixes nothing).
    UniformFamily fa{n, c.a.k, std::move(ca)};
    UniformFamily fb{m, c.b.k, std::move(cb)};
    if (is_left_compressed(fa) && is_left_compressed(fb)) {
      best_a = fa.members;
      best_b = fb.members;
    }
  });
  return FamilyPair{UniformFamily{n, c.a.k, std::move(best_a)},
                    UniformFamily{m, c.b.k, std::move(best_b)}, c.t};
}

std::string describe_pair(const FamilyPair& p) {
  const int n = p.a.ground_size, k = p.a.k;
  const int m = p.b.ground_size, l = p.b.k;
  const int t = p.t;
  if (!p.a.empty() && !p.b.empty()) {
    const Mask core = full_mask(t);
    if (p.a == star(n, k, core) && p.b == star(m, l, core)) return "star(T=[" + std::to_string(t) + "])";
    if (n == m && k == l && k >= t + 1 && 2 <= n - t && p.a == frankl_family(n, k, t, 1) &&
        p.b == frankl_family(m, l, t, 1))
      return "frankl-r1(T=[" + std::to_string(t + 2) + "])";
  }
  return "maximal-pair(|A|=" + std::to_string(p.a.size()) +
         ",|B|=" + std::to_string(p.b.size()) + ")";
}

}  // namespace xfam
