#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"

namespace qcat {

/// Deterministic generator for reproducible randomized checks. Values are
/// derived from the raw mt19937_64 stream only (library distributions are
/// not portable across standard libraries).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Numerator in [-max_abs, max_abs], denominator in [1, max_den].
  Rational rational(long long max_abs = 9, long long max_den = 9) {
    return Rational(BigInt(int_in(-max_abs, max_abs)), BigInt(int_in(1, max_den)));
  }

  Rational nonzero_rational(long long max_abs = 9, long long max_den = 9) {
    for (;;) {
      Rational r = rational(max_abs, max_den);
      if (!r.is_zero()) return r;
    }
  }

  QPolynomial polynomial(int max_degree, long long max_abs = 9, long long max_den = 9) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) coeffs.push_back(rational(max_abs, max_den));
    return QPolynomial(std::move(coeffs));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcat
