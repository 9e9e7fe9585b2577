#include "xfam/bigcount.hpp"

#include <algorithm>

namespace xfam {

BigCount binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at each step: r holds C(n-k+i, i)
  }
  return r;
}

}  // namespace xfam
