#include "xfam/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

#include "xfam/constructions.hpp"
#include "xfam/generating.hpp"
#include "xfam/parallel.hpp"

namespace xfam {

namespace {

Wide mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit product overflow");
  return out;
}

}  // namespace

long long to_longlong(Wide v) {
  if (v > Wide{__INT64_MAX__} || v < -Wide{__INT64_MAX__} - 1)
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<long long>(v);
}

Wide S_val(long long n, long long s, long long i, long long j) {
  return mul(s, n - s + 1) - mul(i, j - i);
}

Wide T_val(long long n, long long s, long long i, long long j) {
  return mul(i, n - j - s + i + 1) + mul(s - i, j - i + 1);
}

Wide h_val(long long m, long long n, long long s, long long k, long long l, long long i,
           long long t) {
  return mul(n - s - k + i, S_val(m, s, s + t - i, l)) - mul(m - s + 1, T_val(n, s, i, k));
}

Wide H_val(long long m, long long n, long long s, long long k, long long l, long long i,
           long long t) {
  return mul(m + t - l - i, S_val(n, s, i, k)) - mul(n - s + 1, T_val(m, s, s + t - i, l));
}

Wide lemma32_expr(long long m, long long n, long long k, long long l, long long s, long long t) {
  const Wide first = mul(mul(t + 1, k - s + 2), m - l + t - s + 2);
  const Wide inner = mul(m - l + t - s + 1, n - k - 1) - mul(k - s + 2, l - t);
  return first - mul(s - 1 - t, inner);
}

Wide lemma33_expr(long long m, long long n, long long k, long long l, long long s, long long t) {
  const Wide first = mul(mul(t + 1, n - s - k + t + 2), l - s + 2);
  const Wide inner = mul(m - l - 1, n - s - k + t + 1) - mul(k - t, l - s + 2);
  return first - mul(s - 1 - t, inner);
}

namespace {

bool lemma31_in_domain(long long m, long long n, long long s, long long k, long long l,
                       long long i, long long t) {
  if (t < 3 || l <= t || k < l) return false;
  if (i < t + 2 || i > k) return false;
  if (s < i + 2 || s > i + k - t) return false;
  return std::min(m, n) >= (t + 1) * (k - t + 1);
}

// The displayed ratio of 3.1 compared exactly by cross-multiplication, with
// the positivity of every denominator factor checked first.
bool lemma31_ratio_holds(long long m, long long n, long long s, long long k, long long l,
                         long long i, long long t, std::string* reason) {
  const Wide sa = S_val(n, s, i, k);
  const Wide sb = S_val(m, s, s + t - i, l);
  const Wide ta = T_val(n, s, i, k);
  const Wide tb = T_val(m, s, s + t - i, l);
  const Wide den = mul(mul(m - s + 1, n - s + 1), mul(ta, tb));
  if (den <= 0) {
    if (reason) *reason = "denominator<=0";
    return false;
  }
  const Wide num = mul(mul(m - l + t - i, n - s - k + i), mul(sa, sb));
  if (num <= den) {
    if (reason) *reason = "ratio<=1";
    return false;
  }
  return true;
}

}  // namespace

TupleStatus check_lemma31_tuple(long long m, long long n, long long s, long long k, long long l,
                                long long i, long long t, std::string* reason) {
  if (!lemma31_in_domain(m, n, s, k, l, i, t)) return TupleStatus::OutOfDomain;
  if (h_val(m, n, s, k, l, i, t) <= 0) {
    if (reason) *reason = "h<=0";
    return TupleStatus::Violation;
  }
  if (H_val(m, n, s, k, l, i, t) <= 0) {
    if (reason) *reason = "H<=0";
    return TupleStatus::Violation;
  }
  if (!lemma31_ratio_holds(m, n, s, k, l, i, t, reason)) return TupleStatus::Violation;
  return TupleStatus::Pass;
}

TupleStatus check_lemma32_tuple(long long m, long long n, long long k, long long l, long long s,
                                long long t, std::string* reason) {
  if (t < 3 || l < t + 1 || k < l) return TupleStatus::OutOfDomain;
  if (s < t + 3 || s > k + 1) return TupleStatus::OutOfDomain;
  if (std::min(m, n) < (t + 1) * (k - t + 1)) return TupleStatus::OutOfDomain;
  if (lemma32_expr(m, n, k, l, s, t) >= 0) {
    if (reason) *reason = "expression>=0";
    return TupleStatus::Violation;
  }
  return TupleStatus::Pass;
}

TupleStatus check_lemma33_tuple(long long m, long long n, long long k, long long l, long long s,
                                long long t, std::string* reason) {
  if (t < 3 || s - 1 < t + 2 || l < s - 1 || k < l) return TupleStatus::OutOfDomain;
  if (std::min(m, n) < (t + 1) * (k - t + 1)) return TupleStatus::OutOfDomain;
  if (lemma33_expr(m, n, k, l, s, t) >= 0) {
    if (reason) *reason = "expression>=0";
    return TupleStatus::Violation;
  }
  return TupleStatus::Pass;
}

namespace {

struct SweepSlot {
  unsigned long long checked = 0;
  std::vector<Violation> violations;
};

// Sweeps (t, k) task slices in parallel, the inner loops sequentially.
template <typename PerTK>
AuditReport sweep_grid(const std::string& lemma, const GridBounds& grid, int jobs, PerTK&& body) {
  std::vector<std::pair<int, int>> tasks;
  for (int t = 3; t <= grid.t_max; ++t)
    for (int k = t; k <= grid.k_max; ++k) tasks.emplace_back(t, k);

  std::vector<SweepSlot> slots(tasks.size());
  run_tasks(jobs, static_cast<int>(tasks.size()), [&](int id) {
    body(tasks[static_cast<std::size_t>(id)].first, tasks[static_cast<std::size_t>(id)].second,
         slots[static_cast<std::size_t>(id)]);
  });

  AuditReport report{lemma, grid, 0, {}};
  for (const auto& slot : slots) {
    report.tuples_checked += slot.checked;
    report.violations.insert(report.violations.end(), slot.violations.begin(),
                             slot.violations.end());
  }
  return report;
}

}  // namespace

AuditReport audit_lemma31(const GridBounds& grid, int jobs) {
  return sweep_grid("3.1", grid, jobs, [&](int t, int k, SweepSlot& slot) {
    const int n_min = (t + 1) * (k - t + 1);
    if (n_min > std::min(grid.n_max, grid.m_max)) return;
    for (int l = t + 1; l <= k; ++l)
      for (int i = t + 2; i <= k; ++i)
        for (int s = i + 2; s <= i + k - t; ++s)
          for (int n = n_min; n <= grid.n_max; ++n)
            for (int m = n_min; m <= grid.m_max; ++m) {
              std::string reason;
              const TupleStatus st = check_lemma31_tuple(m, n, s, k, l, i, t, &reason);
              if (st == TupleStatus::OutOfDomain) continue;
              ++slot.checked;
              if (st == TupleStatus::Violation)
                slot.violations.push_back(Violation{m, n, s, k, l, i, t, reason});
            }
  });
}

AuditReport audit_lemma32(const GridBounds& grid, int jobs) {
  return sweep_grid("3.2", grid, jobs, [&](int t, int k, SweepSlot& slot) {
    const int n_min = (t + 1) * (k - t + 1);
    if (n_min > std::min(grid.n_max, grid.m_max)) return;
    for (int l = t + 1; l <= k; ++l)
      for (int s = t + 3; s <= k + 1; ++s)
        for (int n = n_min; n <= grid.n_max; ++n)
          for (int m = n_min; m <= grid.m_max; ++m) {
            std::string reason;
            const TupleStatus st = check_lemma32_tuple(m, n, k, l, s, t, &reason);
            if (st == TupleStatus::OutOfDomain) continue;
            ++slot.checked;
            if (st == TupleStatus::Violation)
              slot.violations.push_back(Violation{m, n, s, k, l, 0, t, reason});
          }
  });
}

AuditReport audit_lemma33(const GridBounds& grid, int jobs) {
  return sweep_grid("3.3", grid, jobs, [&](int t, int k, SweepSlot& slot) {
    const int n_min = (t + 1) * (k - t + 1);
    if (n_min > std::min(grid.n_max, grid.m_max)) return;
    for (int l = t + 1; l <= k; ++l)
      for (int s = t + 3; s <= l + 1; ++s)
        for (int n = n_min; n <= grid.n_max; ++n)
          for (int m = n_min; m <= grid.m_max; ++m) {
            std::string reason;
            const TupleStatus st = check_lemma33_tuple(m, n, k, l, s, t, &reason);
            if (st == TupleStatus::OutOfDomain) continue;
            ++slot.checked;
            if (st == TupleStatus::Violation)
              slot.violations.push_back(Violation{m, n, s, k, l, 0, t, reason});
          }
  });
}

AuditReport audit_lemma31_proof_form(const GridBounds& grid, int jobs) {
  return sweep_grid("3.1-proof-form", grid, jobs, [&](int t, int k, SweepSlot& slot) {
    const int n_min = (t + 1) * (k - t + 1);
    if (n_min > std::min(grid.n_max, grid.m_max)) return;
    const int l = k;  // the proof reduces l to k
    for (int s = t + 1; s <= 2 * k - t; ++s) {
      const int i_lo = std::max<int>(t + 2, s + t - k);
      const int i_hi = std::max<int>(s - 2, k);
      for (int i = i_lo; i <= i_hi; ++i)
        for (int n = n_min; n <= grid.n_max; ++n)
          for (int m = n_min; m <= grid.m_max; ++m) {
            ++slot.checked;
            if (h_val(m, n, s, k, l, i, t) <= 0)
              slot.violations.push_back(Violation{m, n, s, k, l, i, t, "h<=0"});
            else if (H_val(m, n, s, k, l, i, t) <= 0)
              slot.violations.push_back(Violation{m, n, s, k, l, i, t, "H<=0"});
          }
    }
  });
}

Case3Report case3_product_audit(int n, int m, int k, int l, int t) {
  if (t < 3 || t > l || l > k) throw std::invalid_argument("need 3 <= t <= l <= k");
  if (std::min(m, n) < (t + 1) * (k - t + 1))
    throw std::invalid_argument("need min(m,n) >= (t+1)(k-t+1)");

  Case3Report r;
  r.n = n, r.m = m, r.k = k, r.l = l, r.t = t;
  r.bound = binomial(n - t, k - t) * binomial(m - t, l - t);

  r.sub1_factor_a = binomial(n - t, k - t) - binomial(n - t - 2, k - t);
  r.sub1_factor_b = binomial(m - t, l - t) + t * binomial(m - t - 2, l - t - 1);
  r.sub1_product = r.sub1_factor_a * r.sub1_factor_b;
  r.sub2_factor_a = binomial(n - t, k - t) + t * binomial(n - t - 2, k - t - 1);
  r.sub2_factor_b = binomial(m - t, l - t) - binomial(m - t - 2, l - t);
  r.sub2_product = r.sub2_factor_a * r.sub2_factor_b;
  r.sub3_product = frankl_family_size(n, k, t, 1) * frankl_family_size(m, l, t, 1);

  // The one-sided families, built from their stated generating sets:
  //   narrow side g = {[t+1], [t] ∪ {t+2}}, wide side g = {[t]} ∪ {[t+2] \ {i}}.
  const Mask base_t = full_mask(t);
  std::vector<Mask> narrow{full_mask(t + 1), base_t | element_bit(t + 2)};
  std::vector<Mask> wide{base_t};
  for (int i = 1; i <= t; ++i) wide.push_back(full_mask(t + 2) & ~element_bit(i));

  r.sub1_enum_a = expand(GeneratorFamily::create(n, narrow), n, k).size();
  r.sub1_enum_b = expand(GeneratorFamily::create(m, wide), m, l).size();
  r.sub2_enum_a = expand(GeneratorFamily::create(n, wide), n, k).size();
  r.sub2_enum_b = expand(GeneratorFamily::create(m, narrow), m, l).size();

  r.subcase1_below = r.sub1_product < r.bound;
  r.subcase2_below = r.sub2_product < r.bound;
  r.factors_match = r.sub1_factor_a == r.sub1_enum_a && r.sub1_factor_b == r.sub1_enum_b &&
                    r.sub2_factor_a == r.sub2_enum_a && r.sub2_factor_b == r.sub2_enum_b;
  r.subcase3_at_most = r.sub3_product <= r.bound;
  r.subcase3_equality = r.sub3_product == r.bound;
  r.ok = r.subcase1_below && r.subcase2_below && r.factors_match && r.subcase3_at_most;
  return r;
}

}  // namespace xfam
