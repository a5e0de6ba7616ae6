#pragma once

#include <vector>

#include "qcat/report.hpp"

namespace qcat {

// Each suite replays the documented invariants of one area at desk scale.
// A nonpositive max_n keeps every invariant's stated bound; a positive
// max_n clamps the n-like bound of each invariant (never raising it).

Report verify_suite_exactalg(int max_n = 0);
Report verify_suite_trapezoid(int max_n = 0);
Report verify_suite_partitions(int max_n = 0);
Report verify_suite_cts(int max_n = 0);
Report verify_suite_fock(int max_n = 0);

/// The four addressable suites plus the scalar-arithmetic suite, in a fixed
/// order.
std::vector<Report> verify_all(int max_n = 0);

}  // namespace qcat
