#pragma once

#include <string>
#include <vector>

#include "xfam/bigcount.hpp"
#include "xfam/family.hpp"

namespace xfam {

// F(n,k,t,r) = {A ∈ C([n],k) : |A ∩ [t+2r]| >= t+r}. r = 0 is the star on [t].
UniformFamily frankl_family(int n, int k, int t, int r);

// Σ_{w >= t+r} C(t+2r, w) · C(n-t-2r, k-w), with out-of-range binomials = 0.
BigCount frankl_family_size(int n, int k, int t, int r);

// {A ∈ C([n],k) : T ⊆ A}; size C(n-|T|, k-|T|).
UniformFamily star(int n, int k, Mask t_set);

struct AkOptimum {
  BigCount max_size;
  std::vector<int> optimal_r;  // all maximizing r (two at equality boundaries)
};
// max over 0 <= r <= (n-t)/2 of |F(n,k,t,r)|.
AkOptimum ak_optimum(int n, int k, int t);

struct ExtremalPair {
  std::string kind;  // "star" or "frankl-r1"
  Mask t_core;       // the t-set, or the (t+2)-set of the r=1 pair
  FamilyPair pair;
  BigCount product;
};

// The product-extremal pairs: the star pair on [t] always, plus the r=1 pair
// (both sides {A : |A ∩ T| >= t+1}, |T| = t+2) exactly when
// n = m = (t+1)(k-t+1) and k = l. Requires 3 <= t <= l <= k and
// min(m,n) >= (t+1)(k-t+1). Each product is C(n-t,k-t) · C(m-t,l-t).
std::vector<ExtremalPair> extremal_pairs(int n, int m, int k, int l, int t);

// Sequences A_1..A_{w+1}, B_1..B_{w+1} (w = |A ∩ B|) with A_i ∩ B_i = ∅,
// A_{i+1} ∩ B_i = ∅, A_1 = A and B_{w+1} = B, all members avoiding T ∪ {j}.
// Fresh replacement elements are the smallest available outside
// T ∪ {j} ∪ A ∪ B.
struct DisjointPath {
  std::vector<Mask> a_seq;
  std::vector<Mask> b_seq;
};
DisjointPath disjoint_pair_path(int n, int m, int k, int l, int t, int r, Mask t_set, int j,
                                Mask a, Mask b);

// A walk A_1..A_{2w} inside C(T, r+t') from B to A whose consecutive members
// meet in exactly t' elements, w = floor(|A ∩ B| / t') + 1. The members of T
// are relabeled into the canonical order (A ∩ B, then A \ B, then B \ A, then
// the rest); `relabel[p-1]` is the element placed at position p.
struct OverlapPath {
  std::vector<Mask> seq;
  std::vector<int> relabel;
};
OverlapPath constant_overlap_path(Mask t_set, int t_prime, Mask a, Mask b);

}  // namespace xfam
