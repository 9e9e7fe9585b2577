#pragma once

#include <utility>

#include "xfam/bigcount.hpp"
#include "xfam/family.hpp"

namespace xfam {

// An antichain of generator sets. Expanding (taking k-uniform up-closures)
// recovers the generated family.
struct GeneratorFamily {
  int ground_size = 0;
  std::vector<Mask> members;  // sorted, pairwise inclusion-free
  int s_plus = 0;             // max over members of their largest element; 0 for {∅}

  // Validates the antichain property; sorts and deduplicates.
  static GeneratorFamily create(int ground_size, std::vector<Mask> members);

  std::size_t size() const { return members.size(); }

  friend bool operator==(const GeneratorFamily&, const GeneratorFamily&) = default;
};

// The generators of one size class i that contain the maximal support
// element s, together with their s-dropped versions.
struct Stratum {
  int i = 0;
  std::vector<Mask> with_s;
  std::vector<Mask> dropped;  // {E \ {s} : E ∈ with_s}
};

// U(E) ∩ C([n],k): all k-sets over [n] containing E. Empty when |E| > k.
UniformFamily up_cell(Mask e, int n, int k);

// D(E) = {B ∈ C([n],k) : B ∩ [s⁺(E)] = E}.
UniformFamily down_cell(Mask e, int n, int k);

// Union of up-cells over the members.
UniformFamily expand(const GeneratorFamily& g, int n, int k);

// The canonical generating set: inclusion-minimal elements of
// {E ⊆ [n] : |E| <= k, up_cell(E) ⊆ F}. Expanding it gives back F.
GeneratorFamily minimal_generating_set(const UniformFamily& f);

// Over all generating-set pairs of a maximal left-compressed cross-t-
// intersecting pair, one minimizing s = max of the two s⁺ values, found by
// sweeping s = t, t+1, ..., k+l-t and keeping generators inside [s].
// Throws std::domain_error when the pair is not left-compressed or not
// maximal (maximality is checked through the best-response fixpoint).
std::pair<GeneratorFamily, GeneratorFamily> min_s_generating_pair(const FamilyPair& p);

// True iff the cells D(E), E ∈ g, are pairwise disjoint with union exactly f.
// Requires expand(g) == f.
bool disjoint_decomposition_check(const UniformFamily& f, const GeneratorFamily& g);

// Strata of g at its own maximal element s⁺(g); empty size classes are
// omitted.
std::vector<Stratum> strata(const GeneratorFamily& g);
// Same, at a caller-supplied element s (used with the pair-level s).
std::vector<Stratum> strata_at(const GeneratorFamily& g, int s);

struct ExchangeMove {
  FamilyPair result;
  BigCount delta_a;  // growth of A:    |g*_i(A)| · C(n-s, k-i+1)
  BigCount delta_b;  // shrinkage of B: |g*_{s+t-i}(B)| · C(m-s, l+i-s-t)
};

// The paired exchange: A₁ = A ∪ D(g*_i(A)'), B₁ = B \ D(g*_{s+t-i}(B)), with
// s = max(s⁺(g_a), s⁺(g_b)). Verifies that the realized size changes match
// the closed forms and that the result is still cross-t-intersecting
// (vacuously when a side empties). Throws std::domain_error when either
// stratum is empty.
ExchangeMove exchange_move(const FamilyPair& p, const GeneratorFamily& g_a,
                           const GeneratorFamily& g_b, int i);

// |∇F| · C(n,j) >= |F| · C(n,j+1) for the upper shadow ∇F of a j-uniform
// family, computed exactly. Requires 1 <= j <= n-1 and F nonempty.
bool shadow_ratio_check(const UniformFamily& f);

// The upper shadow itself (handy for tests and the shadow check).
UniformFamily upper_shadow(const UniformFamily& f);

}  // namespace xfam
