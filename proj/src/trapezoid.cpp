#include "qcat/trapezoid.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

BigInt catalan_number(long long n) {
  if (n < 0) throw DomainError("catalan_number: n must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

BigInt catalan_triangle(long long n, long long k) {
  if (n < 0) throw DomainError("catalan_triangle: n must be nonnegative");
  if (k < 0 || k > n)
    throw DomainError("catalan_triangle: k out of range [0, n] for n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  if (n == 0) return 1;
  // ((n+1-k)/(n+1)) * binomial(n+k, k); the division is exact.
  return binomial(n + k, k) * (n + 1 - k) / (n + 1);
}

BigInt shapiro_triangle(long long n, long long k) {
  if (n < 1 || k < 1 || k > n)
    throw DomainError("shapiro_triangle: requires n >= 1 and 1 <= k <= n");
  return binomial(2 * n, n - k) * k / n;
}

BigInt trapezoid(const TrapezoidQuery& query) {
  const long long m = query.order, n = query.n, k = query.k;
  if (m < 1) throw DomainError("trapezoid: order must be >= 1");
  if (n < 0 || k < 0) throw DomainError("trapezoid: n and k must be nonnegative");
  if (k > n + m - 1) return 0;
  if (k <= m - 1) return binomial(n + k, k);
  return binomial(n + k, k) - binomial(n + k, k - m);
}

BigInt trapezoid(long long order, long long n, long long k) {
  return trapezoid(TrapezoidQuery{order, n, k});
}

BigInt ballot_count_oracle(const TrapezoidQuery& query) {
  const long long m = query.order, n = query.n, k = query.k;
  if (m < 1) throw DomainError("ballot_count_oracle: order must be >= 1");
  if (n < 0 || k < 0)
    throw DomainError("ballot_count_oracle: n and k must be nonnegative");
  if (n + k > 24)
    throw SizeGuardError("ballot_count_oracle: n + k must not exceed 24");

  // All distinct arrangements of n X's and k Y's, via next_permutation over
  // the sorted multiset ('X' < 'Y').
  std::vector<char> word(static_cast<std::size_t>(n), 'X');
  word.insert(word.end(), static_cast<std::size_t>(k), 'Y');
  BigInt count = 0;
  do {
    long long excess = 0;  // #Y - #X over the current prefix
    bool ok = true;
    for (char c : word) {
      excess += c == 'Y' ? 1 : -1;
      if (excess > m - 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

BigInt ballot_count_oracle(long long order, long long n, long long k) {
  return ballot_count_oracle(TrapezoidQuery{order, n, k});
}

Report verify_trapezoid_identities(long long max_order, long long max_k) {
  if (max_order < 3 || max_k < 1)
    throw DomainError("verify_trapezoid_identities: requires max_order >= 3 and max_k >= 1");

  Report report("trapezoid-identities");

  {
    bool ok = true;
    std::string detail;
    for (long long n = 0; n <= max_k && ok; ++n) {
      const BigInt a = trapezoid(1, n + 1, n + 1);
      const BigInt b = trapezoid(1, n + 1, n);
      const BigInt c = catalan_number(n + 1);
      const BigInt d = trapezoid(2, n, n + 1);
      if (!(a == b && b == c && c == d)) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + a.str() + ", " + b.str() +
                 ", " + c.str() + ", " + d.str();
      }
    }
    report.add("diagonal-bridge C_1(n+1,n+1)=C_1(n+1,n)=C_{n+1}=C_2(n,n+1)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (long long m = 3; m <= max_order && ok; ++m) {
      for (long long k = 0; k <= max_k && ok; ++k) {
        const BigInt lhs = trapezoid(m, k, k + m - 1) + trapezoid(m - 2, k + 1, k + m - 2);
        const BigInt rhs = trapezoid(m - 1, k + 1, k + m - 1);
        if (lhs != rhs) {
          ok = false;
          detail = "m=" + std::to_string(m) + ", k=" + std::to_string(k) + ": " +
                   lhs.str() + " != " + rhs.str();
        }
      }
    }
    report.add("order-lowering C_m(k,k+m-1)+C_{m-2}(k+1,k+m-2)=C_{m-1}(k+1,k+m-1)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (long long m = 2; m <= max_order && ok; ++m) {
      for (long long k = 0; k <= max_k && ok; ++k) {
        BigInt lhs = 0;
        for (long long j = 0; j <= k; ++j) lhs += trapezoid(j + m - 1, k - j, k + m - 2);
        const BigInt rhs = trapezoid(m, k, k + m - 1);
        if (lhs != rhs) {
          ok = false;
          detail = "m=" + std::to_string(m) + ", k=" + std::to_string(k) + ": " +
                   lhs.str() + " != " + rhs.str();
        }
      }
    }
    report.add("diagonal-convolution sum_j C_{j+m-1}(k-j,k+m-2)=C_m(k,k+m-1)", ok, detail);
  }

  return report;
}

}  // namespace qcat
