#include "xfam/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "xfam/constructions.hpp"
#include "xfam/generating.hpp"
#include "xfam/parallel.hpp"

namespace xfam {

UniformFamily best_response(const UniformFamily& a, int m, int l, int t) {
  if (a.empty()) throw std::domain_error("best response needs a nonempty family");
  std::vector<Mask> out;
  for (Mask b : enumerate_k_subsets(m, l)) {
    bool ok = true;
    for (Mask x : a.members)
      if (intersection_size(x, b) < t) {
        ok = false;
        break;
      }
    if (ok) out.push_back(b);
  }
  return UniformFamily{m, l, std::move(out)};
}

std::optional<FamilyPair> closure(const UniformFamily& a, int n, int m, int k, int l, int t) {
  UniformFamily b1 = best_response(a, m, l, t);
  if (b1.empty()) return std::nullopt;
  UniformFamily a_star = best_response(b1, n, k, t);
  UniformFamily b_star = best_response(a_star, m, l, t);
  return FamilyPair{std::move(a_star), std::move(b_star), t};
}

std::string method_name(SearchMethod method) {
  switch (method) {
    case SearchMethod::Antichain: return "antichain-exhaustive";
    case SearchMethod::Raw: return "raw-closure";
    case SearchMethod::Both: return "both";
  }
  return "unknown";
}

namespace {

using U128 = unsigned __int128;

// Bitset over level-candidate indices (the two enumerated uniform levels).
struct IndexBits {
  std::vector<std::uint64_t> w;

  IndexBits() = default;
  explicit IndexBits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  IndexBits& operator&=(const IndexBits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  IndexBits& operator|=(const IndexBits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  friend bool operator==(const IndexBits&, const IndexBits&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w.size(); ++wi) {
      std::uint64_t x = w[wi];
      while (x) {
        fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

struct IndexBitsHash {
  std::size_t operator()(const IndexBits& b) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : b.w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using BitsSet = std::unordered_set<IndexBits, IndexBitsHash>;

// Both enumerated levels plus the cross-t compatibility structure.
struct LevelContext {
  int n, m, k, l, t;
  std::vector<Mask> ksets, lsets;
  std::vector<IndexBits> comp_b;  // per k-set: compatible l-sets
  std::vector<IndexBits> comp_a;  // per l-set: compatible k-sets
  IndexBits all_b;

  LevelContext(int n_, int m_, int k_, int l_, int t_)
      : n(n_), m(m_), k(k_), l(l_), t(t_) {
    if (t < 1) throw std::invalid_argument("threshold must be >= 1");
    ksets = enumerate_k_subsets(n, k);
    lsets = enumerate_k_subsets(m, l);
    comp_b.assign(ksets.size(), IndexBits(lsets.size()));
    comp_a.assign(lsets.size(), IndexBits(ksets.size()));
    for (std::size_t i = 0; i < ksets.size(); ++i)
      for (std::size_t j = 0; j < lsets.size(); ++j)
        if (intersection_size(ksets[i], lsets[j]) >= t) {
          comp_b[i].set(j);
          comp_a[j].set(i);
        }
    all_b = IndexBits(lsets.size());
    for (std::size_t j = 0; j < lsets.size(); ++j) all_b.set(j);
  }

  IndexBits response_b(const IndexBits& a_bits) const {
    IndexBits r = all_b;
    a_bits.for_each([&](std::size_t i) { r &= comp_b[i]; });
    return r;
  }
  IndexBits response_a(const IndexBits& b_bits) const {
    IndexBits r(ksets.size());
    for (std::size_t i = 0; i < ksets.size(); ++i) r.set(i);
    b_bits.for_each([&](std::size_t j) { r &= comp_a[j]; });
    return r;
  }

  UniformFamily family_a(const IndexBits& bits) const {
    std::vector<Mask> out;
    bits.for_each([&](std::size_t i) { out.push_back(ksets[i]); });
    return UniformFamily{n, k, std::move(out)};
  }
};

BigCount u128_to_big(U128 v) {
  BigCount hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

// Shared accumulator: the running maximum with the closed A-sides attaining it.
struct BestTracker {
  U128 best = 0;
  BitsSet at_best;

  void record(U128 product, const IndexBits& a_star) {
    if (product > best) {
      best = product;
      at_best.clear();
    }
    if (product == best && best > 0) at_best.insert(a_star);
  }
  void merge(const BestTracker& o) {
    if (o.best > best) {
      best = o.best;
      at_best = o.at_best;
    } else if (o.best == best && best > 0) {
      at_best.insert(o.at_best.begin(), o.at_best.end());
    }
  }
};

SearchCertificate finish_certificate(const LevelContext& ctx, const BestTracker& tracker,
                                     const std::string& method,
                                     unsigned long long candidates,
                                     std::chrono::steady_clock::time_point started) {
  SearchCertificate cert;
  cert.n = ctx.n, cert.m = ctx.m, cert.k = ctx.k, cert.l = ctx.l, cert.t = ctx.t;
  cert.max_product = u128_to_big(tracker.best);
  cert.method = method;
  cert.candidates_enumerated = candidates;

  std::vector<FamilyPair> canon;
  for (const IndexBits& a_bits : tracker.at_best) {
    UniformFamily fa = ctx.family_a(a_bits);
    UniformFamily fb = best_response(fa, ctx.m, ctx.l, ctx.t);
    canon.push_back(canonical_pair(FamilyPair{std::move(fa), std::move(fb), ctx.t}));
  }
  std::sort(canon.begin(), canon.end(), pair_less);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  for (FamilyPair& p : canon) {
    std::string d = describe_pair(p);
    cert.optima.push_back(OptimumEntry{std::move(d), std::move(p)});
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  cert.runtime_ms = static_cast<unsigned long long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  return cert;
}

}  // namespace

SearchCertificate max_product_antichain(int n, int m, int k, int l, int t, int jobs) {
  const auto started = std::chrono::steady_clock::now();
  const int s_max = k + l - t;
  if (s_max < 1) throw std::invalid_argument("k + l - t must be positive");
  if (s_max > 6)
    throw capacity_error(
        "generator support k+l-t exceeds 6 (antichain enumeration is Dedekind-bounded); "
        "use the raw method or larger hardware");
  const LevelContext ctx(n, m, k, l, t);

  // Universe of candidate generators: all subsets of [s_max], indexed by value.
  const int u_count = 1 << s_max;
  std::vector<std::uint64_t> comparable(static_cast<std::size_t>(u_count), 0);
  for (int u = 0; u < u_count; ++u)
    for (int v = 0; v < u_count; ++v)
      if ((u & v) == u || (u & v) == v)
        comparable[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;

  // Up-closure of each candidate inside the k-level of [n].
  std::vector<IndexBits> up_bits(static_cast<std::size_t>(u_count), IndexBits(ctx.ksets.size()));
  for (int u = 0; u < u_count; ++u)
    for (std::size_t i = 0; i < ctx.ksets.size(); ++i)
      if (is_subset_of(static_cast<Mask>(u), ctx.ksets[i]))
        up_bits[static_cast<std::size_t>(u)].set(i);

  struct WorkerOut {
    unsigned long long leaves = 0;
    BestTracker tracker;
    BitsSet seen_seeds;
  };
  std::vector<WorkerOut> out(static_cast<std::size_t>(u_count));

  // Antichains partitioned by their smallest member; DFS branches on each
  // later candidate that is inclusion-incomparable with everything chosen.
  auto process_seed = [&](const IndexBits& a_bits, WorkerOut& w) {
    if (a_bits.none() || w.seen_seeds.contains(a_bits)) return;
    w.seen_seeds.insert(a_bits);
    const IndexBits b_bits = ctx.response_b(a_bits);
    if (b_bits.none()) return;
    const IndexBits a_star = ctx.response_a(b_bits);
    w.tracker.record(static_cast<U128>(a_star.count()) * b_bits.count(), a_star);
  };

  run_tasks(jobs, u_count, [&](int first) {
    WorkerOut& w = out[static_cast<std::size_t>(first)];
    // chosen antichain is tracked as a word over universe indices
    auto dfs = [&](auto&& self, int idx, std::uint64_t chosen, const IndexBits& a_bits) -> void {
      if (idx == u_count) {
        ++w.leaves;
        process_seed(a_bits, w);
        return;
      }
      self(self, idx + 1, chosen, a_bits);
      if ((comparable[static_cast<std::size_t>(idx)] & chosen) == 0) {
        IndexBits grown = a_bits;
        grown |= up_bits[static_cast<std::size_t>(idx)];
        self(self, idx + 1, chosen | (std::uint64_t{1} << idx), grown);
      }
    };
    dfs(dfs, first + 1, std::uint64_t{1} << first, up_bits[static_cast<std::size_t>(first)]);
  });

  BestTracker tracker;
  unsigned long long candidates = 1;  // the empty antichain
  BitsSet seen;
  for (auto& w : out) {
    candidates += w.leaves;
    tracker.merge(w.tracker);
  }

  // Degenerate-corner seeds: every single k-set, closing as usual.
  {
    WorkerOut extra;
    for (std::size_t x = 0; x < ctx.ksets.size(); ++x) {
      IndexBits a(ctx.ksets.size());
      a.set(x);
      process_seed(a, extra);
      ++candidates;
    }
    tracker.merge(extra.tracker);
  }

  return finish_certificate(ctx, tracker, method_name(SearchMethod::Antichain), candidates,
                            started);
}

SearchCertificate max_product_raw(int n, int m, int k, int l, int t, int /*jobs*/) {
  const auto started = std::chrono::steady_clock::now();
  const LevelContext ctx(n, m, k, l, t);
  if (ctx.ksets.size() > 128 || ctx.lsets.size() > 128)
    throw capacity_error(
        "raw closure search caps each level at 128 sets; use the antichain method");

  BestTracker tracker;
  BitsSet visited;
  std::vector<IndexBits> todo;

  for (std::size_t x = 0; x < ctx.ksets.size(); ++x) {
    const IndexBits& b = ctx.comp_b[x];
    if (b.none()) continue;
    todo.push_back(ctx.response_a(b));
  }

  const U128 level_a = ctx.ksets.size();
  while (!todo.empty()) {
    IndexBits a = std::move(todo.back());
    todo.pop_back();
    if (visited.contains(a)) continue;
    visited.insert(a);

    const IndexBits b = ctx.response_b(a);
    const std::size_t b_count = b.count();
    tracker.record(static_cast<U128>(a.count()) * b_count, a);

    // No descendant (a grows, b shrinks) can beat the bound |level| · |B|.
    if (level_a * b_count < tracker.best) continue;

    for (std::size_t x = 0; x < ctx.ksets.size(); ++x) {
      if (a.test(x)) continue;
      IndexBits b_next = b;
      b_next &= ctx.comp_b[x];
      if (b_next.none()) continue;
      IndexBits a_next = ctx.response_a(b_next);
      if (!visited.contains(a_next)) todo.push_back(std::move(a_next));
    }
  }

  return finish_certificate(ctx, tracker, method_name(SearchMethod::Raw), visited.size(),
                            started);
}

SearchCertificate max_product_search(int n, int m, int k, int l, int t, SearchMethod method,
                                     int jobs) {
  if (method == SearchMethod::Antichain) return max_product_antichain(n, m, k, l, t, jobs);
  if (method == SearchMethod::Raw) return max_product_raw(n, m, k, l, t, jobs);

  const auto started = std::chrono::steady_clock::now();
  SearchCertificate ac = max_product_antichain(n, m, k, l, t, jobs);
  SearchCertificate rc = max_product_raw(n, m, k, l, t, jobs);
  if (ac.max_product != rc.max_product)
    throw std::logic_error("engines disagree on the maximum product");
  if (ac.optima.size() != rc.optima.size())
    throw std::logic_error("engines disagree on the optimum set");
  for (std::size_t i = 0; i < ac.optima.size(); ++i)
    if (!(ac.optima[i].pair == rc.optima[i].pair))
      throw std::logic_error("engines disagree on the optimum set");

  SearchCertificate cert = std::move(ac);
  cert.method = method_name(SearchMethod::Both);
  cert.candidates_enumerated += rc.candidates_enumerated;
  const auto elapsed = std::chrono::steady_clock::now() - started;
  cert.runtime_ms = static_cast<unsigned long long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  return cert;
}

BoundReport verify_extremal_bound(int n, int m, int k, int l, int t, SearchMethod method,
                                  int jobs) {
  if (t < 3 || t > l || l > k) throw std::invalid_argument("need 3 <= t <= l <= k");
  if (k > n || l > m) throw std::invalid_argument("need k <= n and l <= m");
  if (std::min(m, n) < (t + 1) * (k - t + 1))
    throw std::invalid_argument("need min(m,n) >= (t+1)(k-t+1)");

  BoundReport report;
  report.certificate = max_product_search(n, m, k, l, t, method, jobs);
  report.expected_product = binomial(n - t, k - t) * binomial(m - t, l - t);
  report.product_matches = report.certificate.max_product == report.expected_product;

  std::vector<FamilyPair> expected;
  for (const ExtremalPair& e : extremal_pairs(n, m, k, l, t))
    expected.push_back(canonical_pair(e.pair));
  std::sort(expected.begin(), expected.end(), pair_less);
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

  report.optima_match = expected.size() == report.certificate.optima.size();
  if (report.optima_match)
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!(expected[i] == report.certificate.optima[i].pair)) {
        report.optima_match = false;
        break;
      }
  report.status = report.product_matches && report.optima_match ? "CONFIRMED" : "REFUTED";
  return report;
}

}  // namespace xfam
