#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace xfam {

// A subset of a labeled ground set [n], n <= 64. Element i (1-based) is bit i-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

// |a ∩ b|
constexpr int intersection_size(Mask a, Mask b) noexcept { return std::popcount(a & b); }

constexpr int set_size(Mask a) noexcept { return std::popcount(a); }

constexpr bool is_subset_of(Mask a, Mask b) noexcept { return (a & b) == a; }

constexpr Mask element_bit(int i) noexcept { return Mask{1} << (i - 1); }

constexpr bool contains_element(Mask a, int i) noexcept { return (a >> (i - 1)) & Mask{1}; }

// The full ground set [n] as a mask; n = 0 gives the empty set.
constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// s⁺(E): the largest element of E, 0 for the empty set.
constexpr int max_element(Mask e) noexcept {
  return e == 0 ? 0 : 64 - std::countl_zero(e);
}

Mask mask_from_elements(const std::vector<int>& elements, int ground_size);
std::vector<int> elements_of(Mask a);

// All k-subsets of [n], strictly increasing as integers. k = 0 yields {∅}.
// Throws std::invalid_argument when k > n, k < 0 or n > 64.
std::vector<Mask> enumerate_k_subsets(int n, int k);

}  // namespace xfam
