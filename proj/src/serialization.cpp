#include "qcat/serialization.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

Json to_json(const Rational& value) { return value.str(); }

Json to_json(const QPolynomial& value) {
  Json coeffs = Json::array();
  for (const Rational& c : value.coeffs()) coeffs.push_back(c.str());
  return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const PairPartition& value) {
  Json pairs = Json::array();
  for (const auto& [l, r] : value.pairs()) pairs.push_back(Json::array({l, r}));
  return pairs;
}

Json to_json(const Signature& value) { return value.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational encoded as \"a/b\" or an integer");
}

QPolynomial qpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw DomainError("expected a polynomial encoded as {\"coeffs\": [...]}");
  std::vector<Rational> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const Json& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  return QPolynomial(std::move(coeffs));
}

GramMatrix gram_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a gram matrix as an array of rows");
  std::vector<std::vector<Rational>> entries;
  entries.reserve(j.size());
  for (const Json& row : j) {
    if (!row.is_array()) throw DomainError("gram matrix rows must be arrays");
    std::vector<Rational> out_row;
    out_row.reserve(row.size());
    for (const Json& cell : row) out_row.push_back(rational_from_json(cell));
    entries.push_back(std::move(out_row));
  }
  return GramMatrix(std::move(entries));
}

std::variant<BoundarySequence<Rational>, BoundarySequence<QPolynomial>>
boundary_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw DomainError("boundary file must hold a nonempty JSON array");
  bool has_polynomial = false;
  for (const Json& entry : j)
    if (entry.is_object()) has_polynomial = true;
  if (!has_polynomial) {
    BoundarySequence<Rational> boundary;
    boundary.reserve(j.size());
    for (const Json& entry : j) boundary.push_back(rational_from_json(entry));
    return boundary;
  }
  BoundarySequence<QPolynomial> boundary;
  boundary.reserve(j.size());
  for (const Json& entry : j) {
    if (entry.is_object())
      boundary.push_back(qpoly_from_json(entry));
    else
      boundary.push_back(QPolynomial(rational_from_json(entry)));
  }
  return boundary;
}

}  // namespace qcat
