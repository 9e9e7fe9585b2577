#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace xfam {

// Exact nonnegative counter. Every size, product and bound in the toolkit is
// computed in exact integer arithmetic; nothing here ever touches a float.
using BigCount = boost::multiprecision::cpp_int;

// C(n, k) with the size-formula convention: 0 whenever k < 0 or k > n
// (e.g. C(3, -1) = 0), so sums over out-of-range terms vanish silently.
BigCount binomial(long long n, long long k);

}  // namespace xfam
