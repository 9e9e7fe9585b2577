#pragma once

#include "xfam/family.hpp"

namespace xfam {

// S_ij applied memberwise: replace j by i in a member A exactly when j ∈ A,
// i ∉ A and the replaced set is not already in the family. Requires
// 1 <= i < j <= ground size; |result| = |input| always.
UniformFamily shift_family(const UniformFamily& f, int i, int j);

// Fixed by every S_ij with i < j.
bool is_left_compressed(const UniformFamily& f);

// Sweeps (i, j) lexicographically and restarts after any change until no
// shift moves anything. Terminates: the sum of element indices over all
// members strictly decreases at every effective shift.
UniformFamily compress_to_fixpoint(const UniformFamily& f);

// Applies every shift to both families of a cross-t-intersecting pair
// simultaneously, iterating to a joint fixpoint. A shift with j beyond one
// family's ground moves only the other family. Sizes and the cross-t
// property are preserved. Throws std::domain_error when the input pair is
// not cross-t-intersecting.
FamilyPair compress_pair(const FamilyPair& p);

}  // namespace xfam
