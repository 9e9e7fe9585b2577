#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xfam/bigcount.hpp"
#include "xfam/family.hpp"

namespace xfam {

// {B ∈ C([m],l) : |A ∩ B| >= t for all A ∈ a} — the unique maximal partner.
// May be empty. Requires a nonempty.
UniformFamily best_response(const UniformFamily& a, int m, int l, int t);

// Mutual best-response fixpoint grown from the seed: A* = R'(R(A)),
// B* = R(A*); reached in two rounds, A ⊆ A*, and the pair is maximal.
// Returns nullopt when the seed has an empty best response (infeasible).
std::optional<FamilyPair> closure(const UniformFamily& a, int n, int m, int k, int l, int t);

enum class SearchMethod { Antichain, Raw, Both };
std::string method_name(SearchMethod method);

struct OptimumEntry {
  std::string descriptor;
  FamilyPair pair;  // canonical form
};

struct SearchCertificate {
  int n = 0, m = 0, k = 0, l = 0, t = 0;
  BigCount max_product;
  std::vector<OptimumEntry> optima;  // canonical, in serialization order
  std::string method;
  unsigned long long candidates_enumerated = 0;
  unsigned long long runtime_ms = 0;
};

// Exhaustive over every antichain of generator sets inside 2^[k+l-t] (plus
// every single k-set seed): each seed expands, closes, and the maximum over
// the resulting maximal pairs is the global maximum, because joint shifts
// preserve both sizes and every maximal left-compressed pair has a
// generating pair supported on [k+l-t]. Requires k+l-t <= 6.
SearchCertificate max_product_antichain(int n, int m, int k, int l, int t, int jobs = 1);

// Independent oracle: depth-first enumeration of closed pairs (mutual
// best-response fixpoints) grown one k-set at a time, with memoization and
// an upper-bound prune that never discards a potential optimum. Requires
// both levels to hold at most 128 sets.
SearchCertificate max_product_raw(int n, int m, int k, int l, int t, int jobs = 1);

// Dispatch; Both runs the two engines and insists they agree exactly (value
// and canonical optima).
SearchCertificate max_product_search(int n, int m, int k, int l, int t, SearchMethod method,
                                     int jobs = 1);

struct BoundReport {
  SearchCertificate certificate;
  BigCount expected_product;  // C(n-t,k-t) · C(m-t,l-t)
  bool product_matches = false;
  bool optima_match = false;
  std::string status;  // "CONFIRMED" | "REFUTED"
};

// Checks the computed maximum against the binomial bound and the canonical
// optima against the expected extremal constructions (star pair, plus the
// r=1 pair exactly at n = m = (t+1)(k-t+1), k = l).
BoundReport verify_extremal_bound(int n, int m, int k, int l, int t,
                                  SearchMethod method = SearchMethod::Antichain, int jobs = 1);

// Canonical form: joint compression, then the lexicographically least
// relabeling that is still a left-compressed pair. Relabelings run over all
// permutations of [n] when n = m, else over permutations of [max(n,m)]
// stabilizing [min(n,m)] setwise. Idempotent.
FamilyPair canonical_pair(const FamilyPair& p);

// Total order on pairs used for optima listings and set comparison.
bool pair_less(const FamilyPair& x, const FamilyPair& y);

std::string describe_pair(const FamilyPair& canonical);

}  // namespace xfam
