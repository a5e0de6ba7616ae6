#pragma once

#include "qcat/rational.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Parameters of one trapezoid entry C_m(n, k): strings of n X's and k Y's
/// whose prefixes keep #Y - #X below the order m.
struct TrapezoidQuery {
  long long order = 1;  // m >= 1
  long long n = 0;
  long long k = 0;
};

/// C_n = binomial(2n, n) / (n + 1).
BigInt catalan_number(long long n);

/// Catalan's triangle C(n, k) = ((n+1-k)/(n+1)) * binomial(n+k, k) with
/// C(0, 0) = 1. Out-of-range k is a DomainError (no zero convention here).
BigInt catalan_triangle(long long n, long long k);

/// The alternative triangle B(n, k) = (k/n) * binomial(2n, n-k),
/// restricted to n >= 1 and 1 <= k <= n.
BigInt shapiro_triangle(long long n, long long k);

/// Trapezoid closed form, total on m >= 1, n >= 0, k >= 0:
///   binomial(n+k, k)                       for 0 <= k <= m-1
///   binomial(n+k, k) - binomial(n+k, k-m)  for m <= k <= n+m-1
///   0                                      for k > n+m-1
BigInt trapezoid(const TrapezoidQuery& query);
BigInt trapezoid(long long order, long long n, long long k);

/// Brute-force counterpart of trapezoid(): enumerates every arrangement of
/// n X's and k Y's and counts those whose prefixes all satisfy
/// #Y - #X <= m - 1. Guarded by n + k <= 24.
BigInt ballot_count_oracle(const TrapezoidQuery& query);
BigInt ballot_count_oracle(long long order, long long n, long long k);

/// Checks three identity families linking trapezoids of adjacent orders:
///  - the diagonal bridge C_1(n+1,n+1) = C_1(n+1,n) = C_{n+1} = C_2(n,n+1)
///    for 0 <= n <= max_k;
///  - the order-lowering relation
///    C_m(k,k+m-1) + C_{m-2}(k+1,k+m-2) = C_{m-1}(k+1,k+m-1)
///    for 3 <= m <= max_order, 0 <= k <= max_k;
///  - the diagonal convolution
///    sum_{j=0}^{k} C_{j+m-1}(k-j,k+m-2) = C_m(k,k+m-1)
///    for 2 <= m <= max_order, 0 <= k <= max_k.
/// Requires max_order >= 3 and max_k >= 1.
Report verify_trapezoid_identities(long long max_order, long long max_k);

}  // namespace qcat
