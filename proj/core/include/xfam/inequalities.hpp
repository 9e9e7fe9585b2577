#pragma once

#include <string>
#include <vector>

#include "xfam/bigcount.hpp"

namespace xfam {

// All expression evaluation runs in checked signed 128-bit arithmetic; an
// overflow throws instead of wrapping.
using Wide = __int128;

long long to_longlong(Wide v);

// S(n,s,i,j) = s(n-s+1) - i(j-i)
Wide S_val(long long n, long long s, long long i, long long j);
// T(n,s,i,j) = i(n-j-s+i+1) + (s-i)(j-i+1)
Wide T_val(long long n, long long s, long long i, long long j);
// h = (n-s-k+i)·S(m,s,s+t-i,l) - (m-s+1)·T(n,s,i,k)
Wide h_val(long long m, long long n, long long s, long long k, long long l, long long i,
           long long t);
// H = (m+t-l-i)·S(n,s,i,k) - (n-s+1)·T(m,s,s+t-i,l)
Wide H_val(long long m, long long n, long long s, long long k, long long l, long long i,
           long long t);

// The lemma-3.2 and lemma-3.3 display expressions (audited to be < 0).
Wide lemma32_expr(long long m, long long n, long long k, long long l, long long s, long long t);
Wide lemma33_expr(long long m, long long n, long long k, long long l, long long s, long long t);

struct GridBounds {
  int t_max = 6;
  int k_max = 8;
  int n_max = 60;
  int m_max = 60;
};

enum class TupleStatus { OutOfDomain, Pass, Violation };

struct Violation {
  long long m = 0, n = 0, s = 0, k = 0, l = 0, i = 0, t = 0;
  std::string reason;
};

struct AuditReport {
  std::string lemma;
  GridBounds grid;
  unsigned long long tuples_checked = 0;
  std::vector<Violation> violations;
};

// Per-tuple checks; each validates its own lemma domain first.
TupleStatus check_lemma31_tuple(long long m, long long n, long long s, long long k, long long l,
                                long long i, long long t, std::string* reason = nullptr);
TupleStatus check_lemma32_tuple(long long m, long long n, long long k, long long l, long long s,
                                long long t, std::string* reason = nullptr);
TupleStatus check_lemma33_tuple(long long m, long long n, long long k, long long l, long long s,
                                long long t, std::string* reason = nullptr);

// Grid sweeps over the full lemma domains within the bounds. An empty
// violation list is the expected outcome.
AuditReport audit_lemma31(const GridBounds& grid, int jobs = 1);
AuditReport audit_lemma32(const GridBounds& grid, int jobs = 1);
AuditReport audit_lemma33(const GridBounds& grid, int jobs = 1);

// Informational rescan of 3.1's sufficient pair (h > 0, H > 0) over the
// proof-form domain (l = k, max{t+2, s+t-k} <= i <= max{s-2, k}); reported,
// never asserted.
AuditReport audit_lemma31_proof_form(const GridBounds& grid, int jobs = 1);

struct Case3Report {
  int n = 0, m = 0, k = 0, l = 0, t = 0;
  BigCount bound;  // C(n-t,k-t) · C(m-t,l-t)
  BigCount sub1_factor_a, sub1_factor_b, sub1_product;
  BigCount sub2_factor_a, sub2_factor_b, sub2_product;
  BigCount sub3_product;  // |F(n,k,t,1)| · |F(m,l,t,1)|
  BigCount sub1_enum_a, sub1_enum_b, sub2_enum_a, sub2_enum_b;
  bool subcase1_below = false;   // sub1_product < bound
  bool subcase2_below = false;   // sub2_product < bound
  bool factors_match = false;    // closed forms equal the enumerated sizes
  bool subcase3_at_most = false; // sub3_product <= bound
  bool subcase3_equality = false;
  bool ok = false;
};

// Closed-form products of the two one-sided subcases, cross-checked against
// the enumerated sizes of the concrete families built from their generating
// sets, plus the two-sided r=1 product. Requires 3 <= t <= l <= k and
// min(m,n) >= (t+1)(k-t+1).
Case3Report case3_product_audit(int n, int m, int k, int l, int t);

}  // namespace xfam
