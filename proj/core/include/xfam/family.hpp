#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xfam/mask.hpp"

namespace xfam {

// Raised when an input is structurally fine but outside what this build can
// enumerate (e.g. generator support too wide for the antichain search).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A k-uniform family on [ground_size]. Members are kept strictly increasing
// and unique, so equality is plain structural equality.
struct UniformFamily {
  int ground_size = 0;
  int k = 0;
  std::vector<Mask> members;

  // Validates, sorts and deduplicates. Throws std::invalid_argument on a
  // member with the wrong popcount or with bits outside [ground_size].
  static UniformFamily create(int ground_size, int k, std::vector<Mask> members);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Mask a) const;

  friend bool operator==(const UniformFamily&, const UniformFamily&) = default;
};

// (𝒜 ⊆ C([n],k), ℬ ⊆ C([m],l)) with an intersection threshold t.
struct FamilyPair {
  UniformFamily a;
  UniformFamily b;
  int t = 1;

  // Requires t >= 1 and t <= min(a.k, b.k); the cross-t property itself is
  // testable, never assumed.
  static FamilyPair create(UniformFamily a, UniformFamily b, int t);

  friend bool operator==(const FamilyPair&, const FamilyPair&) = default;
};

// Every ordered pair of members (diagonal included) meets in >= t elements.
// Throws std::domain_error on an empty family.
bool is_t_intersecting(const UniformFamily& f, int t);

// |A ∩ B| >= t for all A ∈ a, B ∈ b. Throws std::domain_error if either side
// is empty.
bool is_cross_t_intersecting(const UniformFamily& a, const UniformFamily& b, int t);
bool is_cross_t_intersecting(const FamilyPair& p);

// Family text format: first line "n k", then one member per line as lowercase
// hex, terminated by a newline. The parser rejects a missing trailing newline,
// wrong popcounts and out-of-range bits.
std::string to_family_text(const UniformFamily& f);
UniformFamily family_from_text(const std::string& text);

// Shared with generator files, whose lines may have any popcount <= k.
struct FamilyFileData {
  int ground_size = 0;
  int k = 0;
  std::vector<Mask> members;
};
FamilyFileData parse_family_file(const std::string& text, bool uniform);
std::string render_family_file(int ground_size, int k, const std::vector<Mask>& members);

}  // namespace xfam
