#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcat/rational.hpp"

namespace qcat {

/// Polynomial in the deformation parameter q with rational coefficients,
/// stored as ascending coefficients with no trailing zeros. The zero
/// polynomial has an empty coefficient vector, so equality is structural.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(Rational constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  QPolynomial(long long constant) : QPolynomial(Rational(constant)) {}  // NOLINT
  QPolynomial(BigInt constant) : QPolynomial(Rational(std::move(constant))) {}  // NOLINT
  explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// coeff * q^degree
  static QPolynomial monomial(std::size_t degree, Rational coeff = Rational(1)) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    QPolynomial p;
    p.coeffs_ = std::move(c);
    return p;
  }

  /// The symbol q itself.
  static QPolynomial variable() { return monomial(1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  /// Exact Horner evaluation at q = point.
  Rational eval(const Rational& point) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return QPolynomial(std::move(c));
  }
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return QPolynomial(std::move(c));
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(c));
  }
  QPolynomial operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    QPolynomial p;
    p.coeffs_ = std::move(c);
    return p;
  }
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  /// Compact display form, e.g. "0", "1+q", "2+3q+q^2", "(3/2)q^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      const bool negative = c.sign() < 0;
      const Rational mag = negative ? -c : c;
      std::string body;
      if (i == 0) {
        body = mag.str();
      } else {
        std::string power = i == 1 ? "q" : "q^" + std::to_string(i);
        if (mag == Rational(1)) {
          body = power;
        } else if (mag.is_integer()) {
          body = mag.str() + power;
        } else {
          body = "(" + mag.str() + ")" + power;
        }
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + body;
      } else {
        out += (negative ? "-" : "+") + body;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
    return os << p.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace qcat
