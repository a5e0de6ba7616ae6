#include <doctest.h>

#include "qcat/errors.hpp"
#include "qcat/partitions.hpp"
#include "qcat/trapezoid.hpp"

using namespace qcat;

TEST_CASE("catalan numbers against the non-crossing enumeration oracle") {
  CHECK(catalan_number(0) == 1);
  CHECK(catalan_number(3) == BigInt(enumerate_ncpp(3).size()));
  CHECK(catalan_number(3) == 5);
  CHECK(catalan_number(6) == BigInt(enumerate_ncpp(6).size()));
  CHECK(catalan_number(6) == 132);
}

TEST_CASE("catalan triangle values and range errors") {
  for (long long n = 0; n <= 10; ++n) CHECK(catalan_triangle(n, 0) == 1);
  CHECK(catalan_triangle(3, 2) == ballot_count_oracle(1, 3, 2));
  CHECK(catalan_triangle(3, 2) == 5);
  for (long long n = 0; n <= 10; ++n)
    CHECK(catalan_triangle(n, n) == catalan_number(n));
  CHECK_THROWS_AS(catalan_triangle(3, -1), DomainError);
  CHECK_THROWS_AS(catalan_triangle(3, 4), DomainError);
}

TEST_CASE("shapiro triangle") {
  CHECK(shapiro_triangle(1, 1) == 1);
  CHECK(shapiro_triangle(2, 1) == 2);
  for (long long n = 1; n <= 8; ++n) CHECK(shapiro_triangle(n, n) == 1);
  // First rows: 1; 2,1; 5,4,1; 14,14,6,1.
  CHECK(shapiro_triangle(3, 1) == 5);
  CHECK(shapiro_triangle(4, 2) == 14);
  CHECK_THROWS_AS(shapiro_triangle(3, 0), DomainError);
  CHECK_THROWS_AS(shapiro_triangle(0, 0), DomainError);
  CHECK_THROWS_AS(shapiro_triangle(2, 3), DomainError);
}

TEST_CASE("trapezoid closed form") {
  for (long long m = 1; m <= 5; ++m) {
    for (long long h = 0; h <= m - 1; ++h) CHECK(trapezoid(m, 0, h) == 1);
    for (long long r = 0; r <= 6; ++r) CHECK(trapezoid(m, r, 0) == 1);
  }
  CHECK(trapezoid(2, 2, 3) == catalan_number(3));
  CHECK(trapezoid(2, 2, 3) == 5);
  CHECK(trapezoid(1, 1, 3) == 0);  // zero convention beyond the last diagonal
  CHECK(trapezoid(3, 1, 3) == 3);
  CHECK_THROWS_AS(trapezoid(0, 1, 1), DomainError);
  CHECK_THROWS_AS(trapezoid(2, -1, 0), DomainError);
}

TEST_CASE("ballot-string oracle") {
  CHECK(ballot_count_oracle(1, 1, 1) == 1);  // only XY survives
  CHECK(ballot_count_oracle(2, 1, 2) == 2);  // XYY and YXY; YYX fails
  for (long long m = 1; m <= 3; ++m)
    for (long long n = 0; n <= 5; ++n) CHECK(ballot_count_oracle(m, n, 0) == 1);
  CHECK_THROWS_AS(ballot_count_oracle(1, 13, 12), SizeGuardError);
}

TEST_CASE("closed form agrees with the oracle on a desk-size grid") {
  for (long long m = 1; m <= 3; ++m)
    for (long long n = 0; n <= 6; ++n)
      for (long long k = 0; k <= n + m - 1; ++k)
        CHECK(trapezoid(m, n, k) == ballot_count_oracle(m, n, k));
}

TEST_CASE("identity families") {
  // order-lowering at (m=3, k=1): 3 + 2 = 5
  CHECK(trapezoid(3, 1, 3) == 3);
  CHECK(trapezoid(1, 2, 2) == 2);
  CHECK(trapezoid(2, 2, 3) == 5);
  CHECK(trapezoid(3, 1, 3) + trapezoid(1, 2, 2) == trapezoid(2, 2, 3));

  // diagonal convolution at (m=2, k=2): 2 + 2 + 1 = 5
  BigInt sum = 0;
  for (long long j = 0; j <= 2; ++j) sum += trapezoid(j + 1, 2 - j, 2);
  CHECK(sum == trapezoid(2, 2, 3));

  // and at (m=2, k=0): the single j=0 term
  CHECK(trapezoid(1, 0, 0) == trapezoid(2, 0, 1));

  const Report report = verify_trapezoid_identities(5, 8);
  CHECK(report.passed());
  CHECK(report.checks().size() == 3);

  CHECK_THROWS_AS(verify_trapezoid_identities(2, 8), DomainError);
  CHECK_THROWS_AS(verify_trapezoid_identities(5, 0), DomainError);
}

TEST_CASE("order-1 trapezoid is the triangle and row sums rebuild rows") {
  for (long long n = 0; n <= 10; ++n)
    for (long long k = 0; k <= n; ++k) CHECK(trapezoid(1, n, k) == catalan_triangle(n, k));
  for (long long n = 1; n <= 9; ++n) {
    for (long long k = 0; k <= n - 1; ++k) {
      BigInt sum = 0;
      for (long long h = 0; h <= k; ++h) sum += catalan_triangle(n - 1, h);
      CHECK(sum == catalan_triangle(n, k));
    }
  }
}
