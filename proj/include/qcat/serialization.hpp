#pragma once

#include <json.hpp>

#include <variant>

#include "qcat/cts.hpp"
#include "qcat/fock.hpp"
#include "qcat/partitions.hpp"
#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"

namespace qcat {

using Json = nlohmann::json;

// Wire formats:
//   Rational     "a/b", or "a" when the denominator is 1
//   QPolynomial  {"coeffs": ["c0", "c1", ...]} ascending degree
//   PairPartition [[l1, r1], [l2, r2], ...]
//   Signature    "--++"
//   GramMatrix   array of array of rational strings
//   boundary     array mixing the two scalar forms; any polynomial entry
//                promotes the whole boundary to polynomials

Json to_json(const Rational& value);
Json to_json(const QPolynomial& value);
Json to_json(const PairPartition& value);
Json to_json(const Signature& value);

Rational rational_from_json(const Json& j);
QPolynomial qpoly_from_json(const Json& j);
GramMatrix gram_from_json(const Json& j);

std::variant<BoundarySequence<Rational>, BoundarySequence<QPolynomial>>
boundary_from_json(const Json& j);

template <RingScalar T>
Json table_to_json(const TriangleTable<T>& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) {
    Json out_row = Json::array();
    for (const T& value : row) out_row.push_back(to_json(value));
    rows.push_back(std::move(out_row));
  }
  return rows;
}

}  // namespace qcat
