#include "xfam/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "xfam/generating.hpp"

namespace xfam {

UniformFamily frankl_family(int n, int k, int t, int r) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("need 1 <= t <= k <= n");
  if (r < 0 || 2 * r > n - t) throw std::invalid_argument("need 0 <= r <= (n-t)/2");
  const Mask core = full_mask(t + 2 * r);
  const int need = t + r;
  std::vector<Mask> out;
  for (Mask a : enumerate_k_subsets(n, k))
    if (intersection_size(a, core) >= need) out.push_back(a);
  return UniformFamily{n, k, std::move(out)};
}

BigCount frankl_family_size(int n, int k, int t, int r) {
  BigCount total = 0;
  for (int w = t + r; w <= t + 2 * r; ++w)
    total += binomial(t + 2 * r, w) * binomial(n - t - 2 * r, k - w);
  return total;
}

UniformFamily star(int n, int k, Mask t_set) {
  if (!is_subset_of(t_set, full_mask(n)))
    throw std::invalid_argument("star core has bits outside the ground set");
  if (set_size(t_set) > k || k > n) throw std::invalid_argument("need |T| <= k <= n");
  return up_cell(t_set, n, k);
}

AkOptimum ak_optimum(int n, int k, int t) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("need 1 <= t <= k <= n");
  AkOptimum opt;
  for (int r = 0; 2 * r <= n - t; ++r) {
    BigCount size = frankl_family_size(n, k, t, r);
    if (size > opt.max_size) {
      opt.max_size = size;
      opt.optimal_r = {r};
    } else if (size == opt.max_size && !opt.optimal_r.empty()) {
      opt.optimal_r.push_back(r);
    }
  }
  return opt;
}

std::vector<ExtremalPair> extremal_pairs(int n, int m, int k, int l, int t) {
  if (t < 3 || t > l || l > k) throw std::invalid_argument("need 3 <= t <= l <= k");
  if (std::min(m, n) < (t + 1) * (k - t + 1))
    throw std::invalid_argument("need min(m,n) >= (t+1)(k-t+1)");
  const BigCount bound = binomial(n - t, k - t) * binomial(m - t, l - t);

  std::vector<ExtremalPair> out;
  {
    const Mask core = full_mask(t);
    FamilyPair p{star(n, k, core), star(m, l, core), t};
    out.push_back(ExtremalPair{"star", core, std::move(p), bound});
  }
  if (n == m && k == l && n == (t + 1) * (k - t + 1)) {
    const Mask core = full_mask(t + 2);
    FamilyPair p{frankl_family(n, k, t, 1), frankl_family(m, l, t, 1), t};
    out.push_back(ExtremalPair{"frankl-r1", core, std::move(p), bound});
  }
  return out;
}

DisjointPath disjoint_pair_path(int n, int m, int k, int l, int t, int r, Mask t_set, int j,
                                Mask a, Mask b) {
  const int lo = std::min(m, n);
  if (t < 1 || r < 0 || k < l || l < t + r) throw std::invalid_argument("need k >= l >= t+r");
  if (lo < k + l - t + 2) throw std::invalid_argument("need min(m,n) >= k+l-t+2");
  if (set_size(t_set) != t + 2 * r || !is_subset_of(t_set, full_mask(lo)))
    throw std::invalid_argument("T must be a (t+2r)-subset of [min(m,n)]");
  if (j < 1 || j > lo || contains_element(t_set, j))
    throw std::invalid_argument("j must lie in [min(m,n)] \\ T");
  const Mask forbidden = t_set | element_bit(j);
  if (set_size(a) != k - r - t || (a & forbidden) != 0 || !is_subset_of(a, full_mask(n)))
    throw std::invalid_argument("A must be a (k-r-t)-subset of [n] \\ (T ∪ {j})");
  if (set_size(b) != l - r - t || (b & forbidden) != 0 || !is_subset_of(b, full_mask(m)))
    throw std::invalid_argument("B must be an (l-r-t)-subset of [m] \\ (T ∪ {j})");

  const std::vector<int> meet = elements_of(a & b);
  const int w = static_cast<int>(meet.size());

  // w+1 fresh elements, smallest first, avoiding T, j, A and B.
  std::vector<int> fresh;
  for (int x = 1; x <= lo && static_cast<int>(fresh.size()) < w + 1; ++x)
    if (!contains_element(forbidden | a | b, x)) fresh.push_back(x);
  if (static_cast<int>(fresh.size()) < w + 1)
    throw std::logic_error("ground too small for fresh elements despite precondition");

  DisjointPath path;
  path.a_seq.push_back(a);
  Mask b1 = b & ~a;
  for (int idx = 1; idx <= w; ++idx) b1 |= element_bit(fresh[static_cast<std::size_t>(idx)]);
  path.b_seq.push_back(b1);
  for (int step = 2; step <= w + 1; ++step) {
    const Mask prev_a = path.a_seq.back();
    const Mask prev_b = path.b_seq.back();
    const Mask drop_a = element_bit(meet[static_cast<std::size_t>(step - 2)]);
    const Mask gain_a = element_bit(fresh[static_cast<std::size_t>(step - 2)]);
    const Mask drop_b = element_bit(fresh[static_cast<std::size_t>(step - 1)]);
    path.a_seq.push_back((prev_a & ~drop_a) | gain_a);
    path.b_seq.push_back((prev_b & ~drop_b) | drop_a);
  }

  for (int idx = 0; idx <= w; ++idx) {
    if ((path.a_seq[idx] & path.b_seq[idx]) != 0)
      throw std::logic_error("emitted path violates A_i ∩ B_i = ∅");
    if (idx < w && (path.a_seq[idx + 1] & path.b_seq[idx]) != 0)
      throw std::logic_error("emitted path violates A_{i+1} ∩ B_i = ∅");
  }
  if (path.b_seq.back() != b) throw std::logic_error("emitted path does not end at B");
  return path;
}

namespace {

// Positions lo..hi (1-based, empty when lo > hi) mapped through the relabel.
Mask positions(const std::vector<int>& relabel, int lo, int hi) {
  Mask out = 0;
  for (int p = std::max(lo, 1); p <= hi; ++p)
    out |= element_bit(relabel[static_cast<std::size_t>(p - 1)]);
  return out;
}

}  // namespace

OverlapPath constant_overlap_path(Mask t_set, int t_prime, Mask a, Mask b) {
  const int tsize = set_size(t_set);
  if (t_prime < 1 || (tsize - t_prime) % 2 != 0 || tsize - t_prime < 2)
    throw std::invalid_argument("|T| must be t' + 2r with r >= 1");
  const int r = (tsize - t_prime) / 2;
  if (!is_subset_of(a, t_set) || !is_subset_of(b, t_set))
    throw std::invalid_argument("A and B must be subsets of T");
  if (set_size(a) != r + t_prime || set_size(b) != r + t_prime)
    throw std::invalid_argument("A and B must be (r+t')-subsets of T");
  if (a == b) throw std::invalid_argument("A and B must be distinct");

  const int inter = intersection_size(a, b);
  const int bb = inter - t_prime;  // >= 0 by inclusion-exclusion inside T, < r since A != B
  if (bb < 0 || bb >= r) throw std::logic_error("overlap outside the pigeonhole range");
  const int mq = bb / t_prime;

  // Canonical order: A ∩ B, then A \ B, then B \ A, then T \ (A ∪ B).
  OverlapPath path;
  for (int e : elements_of(a & b)) path.relabel.push_back(e);
  for (int e : elements_of(a & ~b)) path.relabel.push_back(e);
  for (int e : elements_of(b & ~a)) path.relabel.push_back(e);
  for (int e : elements_of(t_set & ~(a | b))) path.relabel.push_back(e);

  const auto& rl = path.relabel;
  for (int s = 0; s <= mq; ++s) {
    path.seq.push_back(positions(rl, 1, bb + t_prime * (1 - s)) |
                       positions(rl, r + t_prime + 1, (s + 1) * t_prime + 2 * r - bb));
    path.seq.push_back(positions(rl, bb - s * t_prime + 1, t_prime + r) |
                       positions(rl, (s + 1) * t_prime + 2 * r - bb + 1, t_prime + 2 * r));
  }
  path.seq.push_back(positions(rl, 1, bb - t_prime * mq) |
                     positions(rl, bb + r - t_prime * mq + 1, t_prime + 2 * r));
  path.seq.push_back(positions(rl, 1, t_prime + r));

  if (path.seq.front() != b || path.seq.back() != a)
    throw std::logic_error("emitted walk has wrong endpoints");
  for (Mask x : path.seq)
    if (set_size(x) != r + t_prime) throw std::logic_error("walk member has wrong size");
  for (std::size_t idx = 0; idx + 1 < path.seq.size(); ++idx)
    if (intersection_size(path.seq[idx], path.seq[idx + 1]) != t_prime)
      throw std::logic_error("consecutive walk members do not meet in exactly t'");
  return path;
}

}  // namespace xfam
