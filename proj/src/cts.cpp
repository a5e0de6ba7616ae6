#include "qcat/cts.hpp"

#include <string>

namespace qcat {

TriangleTable<Rational> catalan_boundary_table(int depth) {
  if (depth < 1) throw DomainError("catalan_boundary_table: depth must be >= 1");
  BoundarySequence<Rational> boundary;
  boundary.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n) boundary.emplace_back(catalan_number(n - 1));
  TriangleTable<Rational> table = solve_closed_form(boundary);
  for (int n = 1; n <= depth; ++n) {
    for (int m = 1; m <= n; ++m) {
      const Rational expected(catalan_triangle(n - 1, n - m));
      const Rational ratio_form = Rational(binomial(2 * n - m - 1, n - 1) * m, BigInt(n));
      if (table.at(n, m) != expected || table.at(n, m) != ratio_form)
        throw VerificationError("catalan_boundary_table: entry (" + std::to_string(n) +
                                "," + std::to_string(m) + ") = " + table.at(n, m).str() +
                                " does not match the closed forms " + expected.str() +
                                " / " + ratio_form.str());
    }
  }
  return table;
}

}  // namespace qcat
