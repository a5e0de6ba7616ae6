#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"
#include "qcat/report.hpp"
#include "qcat/trapezoid.hpp"

namespace qcat {

/// Exact commutative ring scalar: what the triangle-system solvers need.
/// Both Rational and QPolynomial satisfy it.
template <typename T>
concept RingScalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  T{};
  T{BigInt{}};
};

/// First-column data b_1,...,b_N; b_n plays the role of x_{n,1}.
template <RingScalar T>
using BoundarySequence = std::vector<T>;

/// Ragged table x_{n,m} for 1 <= m <= n <= depth.
template <RingScalar T>
class TriangleTable {
 public:
  explicit TriangleTable(int depth) {
    if (depth < 1) throw DomainError("triangle table depth must be >= 1");
    rows_.reserve(static_cast<std::size_t>(depth));
    for (int n = 1; n <= depth; ++n)
      rows_.emplace_back(static_cast<std::size_t>(n), T{});
  }

  int depth() const { return static_cast<int>(rows_.size()); }

  T& at(int n, int m) {
    check_index(n, m);
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
  }
  const T& at(int n, int m) const {
    check_index(n, m);
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
  }

  const std::vector<std::vector<T>>& rows() const { return rows_; }

  friend bool operator==(const TriangleTable&, const TriangleTable&) = default;

 private:
  void check_index(int n, int m) const {
    if (n < 1 || n > depth() || m < 1 || m > n)
      throw DomainError("triangle table index (" + std::to_string(n) + "," +
                        std::to_string(m) + ") out of range");
  }

  std::vector<std::vector<T>> rows_;
};

/// Forward recurrence: x_{1,1} = b_1, and row by row
/// x_{n+1,1} = b_{n+1}, x_{n+1,k+1} = sum_{j=k}^{n} x_{n,j}.
template <RingScalar T>
TriangleTable<T> solve_recurrence(const BoundarySequence<T>& boundary) {
  const int depth = static_cast<int>(boundary.size());
  if (depth < 1) throw DomainError("boundary must contain at least one entry");
  TriangleTable<T> table(depth);
  table.at(1, 1) = boundary[0];
  for (int n = 1; n < depth; ++n) {
    table.at(n + 1, 1) = boundary[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n; ++k) {
      T acc{};
      for (int j = k; j <= n; ++j) acc = acc + table.at(n, j);
      table.at(n + 1, k + 1) = std::move(acc);
    }
  }
  return table;
}

/// Closed form: every interior entry is a fixed integer combination of the
/// boundary, with trapezoid coefficients of order m-1:
/// x_{n,m} = sum_{h=0}^{n-m} C_{m-1}(h, h+m-2) * b_{n-m-h+1} for m >= 2.
template <RingScalar T>
TriangleTable<T> solve_closed_form(const BoundarySequence<T>& boundary) {
  const int depth = static_cast<int>(boundary.size());
  if (depth < 1) throw DomainError("boundary must contain at least one entry");
  TriangleTable<T> table(depth);
  for (int n = 1; n <= depth; ++n) table.at(n, 1) = boundary[static_cast<std::size_t>(n - 1)];
  for (int n = 2; n <= depth; ++n) {
    for (int m = 2; m <= n; ++m) {
      T acc{};
      for (int h = 0; h <= n - m; ++h) {
        const T coeff{trapezoid(m - 1, h, h + m - 2)};
        acc = acc + coeff * boundary[static_cast<std::size_t>(n - m - h)];  // b_{n-m-h+1}
      }
      table.at(n, m) = std::move(acc);
    }
  }
  return table;
}

/// Runs both solvers and compares entrywise; the first mismatch, if any, is
/// reported with its (n, m) location.
template <RingScalar T>
Report check_equivalence(const BoundarySequence<T>& boundary) {
  Report report("cts-equivalence");
  const TriangleTable<T> by_recurrence = solve_recurrence(boundary);
  const TriangleTable<T> by_closed_form = solve_closed_form(boundary);
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= by_recurrence.depth() && ok; ++n) {
    for (int m = 1; m <= n && ok; ++m) {
      if (!(by_recurrence.at(n, m) == by_closed_form.at(n, m))) {
        ok = false;
        detail = "mismatch at (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                 "): recurrence=" + by_recurrence.at(n, m).str() +
                 ", closed=" + by_closed_form.at(n, m).str();
      }
    }
  }
  report.add("recurrence equals closed form (depth " +
                 std::to_string(by_recurrence.depth()) + ")",
             ok, detail);
  return report;
}

/// Solves the system with the Catalan boundary b_1 = 1, b_n = C_{n-1} and
/// cross-checks every entry against both closed forms
/// C(n-1, n-m) and (m/n) * binomial(2n-m-1, n-1). Throws VerificationError
/// with the failing location if a cross-check ever fails.
TriangleTable<Rational> catalan_boundary_table(int depth);

}  // namespace qcat
