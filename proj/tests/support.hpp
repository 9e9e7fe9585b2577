#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "xfam/bigcount.hpp"
#include "xfam/family.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"

namespace xfam::test {

// Independent factorial-based oracle for C(n, k); deliberately not the
// multiplicative routine the library uses.
inline BigCount factorial_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  auto fact = [](int v) {
    BigCount r = 1;
    for (int i = 2; i <= v; ++i) r *= i;
    return r;
  };
  return fact(n) / (fact(k) * fact(n - k));
}

inline Mask elems(std::initializer_list<int> xs) {
  Mask out = 0;
  for (int x : xs) out |= element_bit(x);
  return out;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

// A uniformly drawn member set of the given level, distinct masks.
inline UniformFamily random_family(std::mt19937_64& gen, int n, int k, int max_members) {
  const auto level = enumerate_k_subsets(n, k);
  std::uniform_int_distribution<std::size_t> pick(0, level.size() - 1);
  std::uniform_int_distribution<int> howmany(1, max_members);
  std::vector<Mask> members;
  const int want = howmany(gen);
  for (int i = 0; i < want; ++i) members.push_back(level[pick(gen)]);
  return UniformFamily::create(n, k, std::move(members));
}

// Greedy clique growth inside the t-intersection graph, then compression;
// the result is left-compressed and t-intersecting.
inline UniformFamily random_t_intersecting_compressed(std::mt19937_64& gen, int n, int k, int t,
                                                      int max_members) {
  auto level = enumerate_k_subsets(n, k);
  std::shuffle(level.begin(), level.end(), gen);
  std::vector<Mask> members{level.front()};
  for (std::size_t i = 1; i < level.size() && static_cast<int>(members.size()) < max_members;
       ++i) {
    bool fits = true;
    for (Mask x : members)
      if (intersection_size(level[i], x) < t) {
        fits = false;
        break;
      }
    if (fits) members.push_back(level[i]);
  }
  return compress_to_fixpoint(UniformFamily::create(n, k, std::move(members)));
}

// A random nonempty cross-t-intersecting pair: seed a small A, take the
// maximal partner, keep random nonempty subsets of both.
inline FamilyPair random_cross_pair(std::mt19937_64& gen, int n, int m, int k, int l, int t,
                                    int max_members) {
  for (;;) {
    UniformFamily seed = random_family(gen, n, k, 2);
    UniformFamily partner = best_response(seed, m, l, t);
    if (partner.empty()) continue;
    UniformFamily back = best_response(partner, n, k, t);

    auto subset_of = [&](const UniformFamily& f) {
      std::uniform_int_distribution<std::size_t> pick(0, f.members.size() - 1);
      std::uniform_int_distribution<int> howmany(1, max_members);
      std::vector<Mask> chosen;
      const int want = howmany(gen);
      for (int i = 0; i < want; ++i) chosen.push_back(f.members[pick(gen)]);
      return UniformFamily::create(f.ground_size, f.k, std::move(chosen));
    };
    return FamilyPair{subset_of(back), subset_of(partner), t};
  }
}

// A random maximal left-compressed cross-t-intersecting pair.
inline FamilyPair random_maximal_compressed_pair(std::mt19937_64& gen, int n, int m, int k,
                                                 int l, int t) {
  for (;;) {
    const UniformFamily seed = random_family(gen, n, k, 3);
    const auto closed = closure(seed, n, m, k, l, t);
    if (!closed) continue;
    const FamilyPair compressed = compress_pair(*closed);
    // Re-close: responses of left-compressed families stay left-compressed,
    // so this lands on a maximal pair that is also compressed.
    const auto reclosed = closure(compressed.a, n, m, k, l, t);
    if (!reclosed) continue;
    return *reclosed;
  }
}

}  // namespace xfam::test
