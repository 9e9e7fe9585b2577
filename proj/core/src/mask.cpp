#include "xfam/mask.hpp"

#include <stdexcept>
#include <string>

namespace xfam {

Mask mask_from_elements(const std::vector<int>& elements, int ground_size) {
  Mask out = 0;
  for (int e : elements) {
    if (e < 1 || e > ground_size)
      throw std::invalid_argument("element " + std::to_string(e) + " outside [" +
                                  std::to_string(ground_size) + "]");
    out |= element_bit(e);
  }
  return out;
}

std::vector<int> elements_of(Mask a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(a)));
  while (a != 0) {
    int i = std::countr_zero(a);
    out.push_back(i + 1);
    a &= a - 1;
  }
  return out;
}

std::vector<Mask> enumerate_k_subsets(int n, int k) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ground size must be in [0, 64], got " + std::to_string(n));
  if (k < 0 || k > n)
    throw std::invalid_argument("subset size " + std::to_string(k) + " outside [0, " +
                                std::to_string(n) + "]");
  if (k == 0) return {Mask{0}};

  const Mask limit = full_mask(n);
  std::vector<Mask> out;
  Mask v = full_mask(k);
  while (true) {
    out.push_back(v);
    // Gosper's hack: next k-subset in increasing order.
    const Mask c = v & (~v + 1);
    const Mask r = v + c;
    if (r == 0) break;  // carried out of the word
    const Mask next = r | (((v ^ r) >> 2) / c);
    if (next > limit) break;
    v = next;
  }
  return out;
}

}  // namespace xfam
