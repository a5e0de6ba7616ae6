#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcat/cli.hpp"
#include "qcat/cts.hpp"
#include "qcat/errors.hpp"
#include "qcat/fock.hpp"
#include "qcat/partitions.hpp"
#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"
#include "qcat/trapezoid.hpp"
#include "qcat/verify.hpp"

namespace py = pybind11;

namespace {

py::object big_to_py(const qcat::BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object rational_to_py(const qcat::Rational& value) {
  return fraction_type()(value.str());
}

py::list qpoly_to_py(const qcat::QPolynomial& value) {
  py::list coeffs;
  for (const qcat::Rational& c : value.coeffs()) coeffs.append(rational_to_py(c));
  return coeffs;
}

qcat::Rational rational_from_py(const py::handle& obj) {
  // ints, "a/b" strings and fractions.Fraction all round-trip via str().
  return qcat::Rational::parse(py::str(obj).cast<std::string>());
}

qcat::QPolynomial qpoly_from_py(const py::handle& obj) {
  std::vector<qcat::Rational> coeffs;
  for (const py::handle& c : obj.cast<py::sequence>()) coeffs.push_back(rational_from_py(c));
  return qcat::QPolynomial(std::move(coeffs));
}

qcat::PairPartition partition_from_py(const py::handle& obj) {
  std::vector<qcat::PairPartition::Pair> pairs;
  for (const py::handle& item : obj.cast<py::sequence>()) {
    auto seq = item.cast<py::sequence>();
    if (py::len(seq) != 2) throw qcat::DomainError("each pair needs exactly two indices");
    pairs.emplace_back(seq[0].cast<int>(), seq[1].cast<int>());
  }
  return qcat::PairPartition(std::move(pairs));
}

py::list partition_to_py(const qcat::PairPartition& p) {
  py::list pairs;
  for (const auto& [l, r] : p.pairs()) pairs.append(py::make_tuple(l, r));
  return pairs;
}

py::list partitions_to_py(const std::vector<qcat::PairPartition>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(partition_to_py(p));
  return out;
}

qcat::GramMatrix gram_from_py(const py::handle& obj) {
  std::vector<std::vector<qcat::Rational>> entries;
  for (const py::handle& row : obj.cast<py::sequence>()) {
    std::vector<qcat::Rational> out_row;
    for (const py::handle& cell : row.cast<py::sequence>()) out_row.push_back(rational_from_py(cell));
    entries.push_back(std::move(out_row));
  }
  return qcat::GramMatrix(std::move(entries));
}

py::dict report_to_py(const qcat::Report& report) {
  py::dict out;
  out["name"] = report.title();
  out["passed"] = report.passed();
  py::list checks;
  for (const qcat::Check& check : report.checks()) {
    py::dict c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    c["detail"] = check.detail;
    checks.append(c);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Catalan trapezoids, pair partitions and (q,2)-deformed moments";

  py::register_exception<qcat::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<qcat::SizeGuardError>(m, "SizeGuardError", PyExc_OverflowError);
  py::register_exception<qcat::VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("binomial", [](long long n, long long k) { return big_to_py(qcat::binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("factorial", [](long long n) { return big_to_py(qcat::factorial(n)); }, py::arg("n"));
  m.def("semifactorial", [](long long n) { return big_to_py(qcat::semifactorial(n)); },
        py::arg("m"));
  m.def("catalan_number", [](long long n) { return big_to_py(qcat::catalan_number(n)); },
        py::arg("n"));
  m.def("catalan_triangle",
        [](long long n, long long k) { return big_to_py(qcat::catalan_triangle(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("shapiro_triangle",
        [](long long n, long long k) { return big_to_py(qcat::shapiro_triangle(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("trapezoid",
        [](long long order, long long n, long long k) {
          return big_to_py(qcat::trapezoid(order, n, k));
        },
        py::arg("order"), py::arg("n"), py::arg("k"));
  m.def("ballot_count_oracle",
        [](long long order, long long n, long long k) {
          return big_to_py(qcat::ballot_count_oracle(order, n, k));
        },
        py::arg("order"), py::arg("n"), py::arg("k"));

  m.def("enumerate_pp", [](int n) { return partitions_to_py(qcat::enumerate_pp(n)); },
        py::arg("n"));
  m.def("enumerate_ncpp", [](int n) { return partitions_to_py(qcat::enumerate_ncpp(n)); },
        py::arg("n"));
  m.def("is_noncrossing",
        [](const py::object& pairs) { return qcat::is_noncrossing(partition_from_py(pairs)); },
        py::arg("pairs"));
  m.def("k_class", [](const py::object& pairs) { return qcat::k_class(partition_from_py(pairs)); },
        py::arg("pairs"));
  m.def("tau", [](const py::object& pairs) { return qcat::tau(partition_from_py(pairs)).str(); },
        py::arg("pairs"));
  m.def("classify_signature",
        [](const std::string& word) -> py::tuple {
          const qcat::SignatureClass cls = qcat::classify_signature(qcat::Signature::parse(word));
          if (cls.is_plus) return py::make_tuple("plus", cls.k);
          return py::make_tuple("minus", py::none());
        },
        py::arg("word"));
  m.def("enumerate_plus_signatures",
        [](int n, const py::object& k) {
          std::optional<int> stratum;
          if (!k.is_none()) stratum = k.cast<int>();
          py::list out;
          for (const qcat::Signature& s : qcat::enumerate_plus_signatures(n, stratum))
            out.append(s.str());
          return out;
        },
        py::arg("n"), py::arg("k") = py::none());
  m.def("enumerate_pp_eps",
        [](const std::string& word) {
          return partitions_to_py(qcat::enumerate_pp_eps(qcat::Signature::parse(word)));
        },
        py::arg("word"));
  m.def("ncpp_counterpart",
        [](const std::string& word) {
          return partition_to_py(qcat::ncpp_counterpart(qcat::Signature::parse(word)));
        },
        py::arg("word"));
  m.def("count_strata",
        [](int n) {
          py::dict out;
          for (const auto& [k, counts] : qcat::count_strata(n))
            out[py::int_(k)] = py::make_tuple(big_to_py(counts.pp), big_to_py(counts.ncpp));
          return out;
        },
        py::arg("n"));
  m.def("wick_moment",
        [](const std::string& word, const py::object& gram, const std::string& mode) {
          if (mode != "free" && mode != "boson")
            throw qcat::DomainError("mode must be 'free' or 'boson'");
          const qcat::Rational value =
              qcat::wick_moment(qcat::Signature::parse(word), gram_from_py(gram),
                                mode == "free" ? qcat::WickMode::free : qcat::WickMode::boson);
          return rational_to_py(value);
        },
        py::arg("word"), py::arg("gram"), py::arg("mode"));

  auto solve = [](const py::sequence& boundary, bool closed) -> py::list {
    bool polynomial = false;
    for (const py::handle& entry : boundary)
      if (py::isinstance<py::sequence>(entry) && !py::isinstance<py::str>(entry))
        polynomial = true;
    py::list rows;
    if (polynomial) {
      qcat::BoundarySequence<qcat::QPolynomial> b;
      for (const py::handle& entry : boundary) {
        if (py::isinstance<py::sequence>(entry) && !py::isinstance<py::str>(entry))
          b.push_back(qpoly_from_py(entry));
        else
          b.push_back(qcat::QPolynomial(rational_from_py(entry)));
      }
      const auto table = closed ? qcat::solve_closed_form(b) : qcat::solve_recurrence(b);
      for (const auto& row : table.rows()) {
        py::list out_row;
        for (const auto& value : row) out_row.append(qpoly_to_py(value));
        rows.append(out_row);
      }
      return rows;
    }
    qcat::BoundarySequence<qcat::Rational> b;
    for (const py::handle& entry : boundary) b.push_back(rational_from_py(entry));
    const auto table = closed ? qcat::solve_closed_form(b) : qcat::solve_recurrence(b);
    for (const auto& row : table.rows()) {
      py::list out_row;
      for (const auto& value : row) out_row.append(rational_to_py(value));
      rows.append(out_row);
    }
    return rows;
  };
  m.def("solve_recurrence", [solve](const py::sequence& b) { return solve(b, false); },
        py::arg("boundary"),
        "Solve the triangle system by the forward recurrence. Scalar entries "
        "are rationals; list entries are polynomial coefficient vectors.");
  m.def("solve_closed_form", [solve](const py::sequence& b) { return solve(b, true); },
        py::arg("boundary"),
        "Solve the triangle system through the trapezoid-coefficient closed form.");
  m.def("catalan_boundary_table",
        [](int depth) {
          py::list rows;
          const auto table = qcat::catalan_boundary_table(depth);
          for (const auto& row : table.rows()) {
            py::list out_row;
            for (const auto& value : row) out_row.append(big_to_py(value.numerator()));
            rows.append(out_row);
          }
          return rows;
        },
        py::arg("depth"));

  m.def("vacuum_moment",
        [](const std::string& word, const py::object& vectors) {
          const qcat::Signature signature = qcat::Signature::parse(word);
          qcat::OperatorWord op_word;
          if (vectors.is_none()) {
            const qcat::TestVector f = qcat::TestVector::unit();
            for (int j = 1; j <= signature.size(); ++j)
              op_word.letters.push_back(qcat::OperatorLetter{signature.at(j) == 1, f});
          } else {
            auto seq = vectors.cast<py::sequence>();
            if (static_cast<int>(py::len(seq)) != signature.size())
              throw qcat::DomainError("need one coordinate vector per letter");
            for (int j = 1; j <= signature.size(); ++j) {
              std::vector<qcat::Rational> coords;
              for (const py::handle& c : seq[static_cast<std::size_t>(j - 1)].cast<py::sequence>())
                coords.push_back(rational_from_py(c));
              op_word.letters.push_back(
                  qcat::OperatorLetter{signature.at(j) == 1, qcat::TestVector(std::move(coords))});
            }
          }
          return qpoly_to_py(qcat::vacuum_moment(op_word));
        },
        py::arg("word"), py::arg("vectors") = py::none(),
        "Vacuum moment as polynomial coefficients in q. Without vectors every "
        "letter shares one unit test vector.");
  m.def("vacuum_moment_gram",
        [](const std::string& word, const py::object& gram, const py::object& labels) {
          std::vector<int> resolved;
          if (!labels.is_none())
            for (const py::handle& v : labels.cast<py::sequence>()) resolved.push_back(v.cast<int>());
          return qpoly_to_py(qcat::vacuum_moment_gram(qcat::Signature::parse(word),
                                                      gram_from_py(gram), resolved));
        },
        py::arg("word"), py::arg("gram"), py::arg("labels") = py::none());
  m.def("p_nk", [](int n, int k) { return qpoly_to_py(qcat::p_nk(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("p_n", [](int n) { return qpoly_to_py(qcat::p_n(n)); }, py::arg("n"));

  m.def("verify_all",
        [](int max_n) {
          py::list reports;
          bool passed = true;
          for (const qcat::Report& report : qcat::verify_all(max_n)) {
            passed = passed && report.passed();
            reports.append(report_to_py(report));
          }
          return py::make_tuple(passed, reports);
        },
        py::arg("max_n") = 0);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = qcat::run_cli(args, out, err, false);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the batch front end; returns (exit_code, stdout, stderr).");
}
