#include "qcat/rational.hpp"

#include <cctype>
#include <string>

namespace qcat {

BigInt binomial(long long n, long long k) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw DomainError("factorial: n must be nonnegative");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt semifactorial(long long m) {
  BigInt result = 1;
  for (long long i = m; i >= 2; i -= 2) result *= i;
  return result;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part))
    throw DomainError("invalid rational literal: '" + std::string(text) + "'");
  BigInt num{std::string(num_part)};
  if (slash == std::string_view::npos) return Rational(std::move(num));
  std::string_view den_part = text.substr(slash + 1);
  if (!valid_integer_token(den_part))
    throw DomainError("invalid rational literal: '" + std::string(text) + "'");
  BigInt den{std::string(den_part)};
  return Rational(std::move(num), std::move(den));
}

}  // namespace qcat
