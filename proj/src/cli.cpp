#include "qcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "qcat/cts.hpp"
#include "qcat/errors.hpp"
#include "qcat/fock.hpp"
#include "qcat/partitions.hpp"
#include "qcat/serialization.hpp"
#include "qcat/trapezoid.hpp"
#include "qcat/verify.hpp"

namespace qcat {

namespace {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  return OutputFormat::csv;  // membership already validated by the parser
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"')
      quoted += "\"\"";
    else
      quoted += c;
  }
  quoted += '"';
  return quoted;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

void emit_integer_table(std::ostream& out, OutputFormat format,
                        const std::vector<std::vector<BigInt>>& rows,
                        const std::string& csv_header) {
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::array();
      for (const auto& row : rows) {
        Json jrow = Json::array();
        for (const BigInt& v : row) jrow.push_back(v.str());
        body.push_back(std::move(jrow));
      }
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv: {
      out << csv_header << "\n";
      for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k)
          out << n << "," << k << "," << rows[n][k].str() << "\n";
      break;
    }
    case OutputFormat::text: {
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k].str();
        out << "\n";
      }
      break;
    }
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

struct ParsedWord {
  Signature signature;
  std::vector<int> labels;  // empty when no letter carried a label
};

// A word is a string of sign characters, each optionally followed by a
// 1-based vector label: "--++" or "-1-2+2+1". Labels are all-or-none.
ParsedWord parse_operator_word(const std::string& text) {
  std::vector<int> signs;
  std::vector<int> labels;
  bool any_label = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '+' && c != '-')
      throw DomainError(std::string("operator word: expected '+' or '-', got '") + c + "'");
    signs.push_back(c == '+' ? 1 : -1);
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      any_label = true;
      labels.push_back(std::stoi(text.substr(start, i - start)));
    } else {
      labels.push_back(0);
    }
  }
  if (signs.empty()) throw DomainError("operator word must be nonempty");
  ParsedWord parsed{Signature(std::move(signs)), {}};
  if (any_label) {
    for (int label : labels)
      if (label < 1) throw DomainError("operator word: either label every letter or none");
    parsed.labels = std::move(labels);
  }
  return parsed;
}

int run_trapezoid_table(long long order, long long rows, OutputFormat format, std::ostream& out) {
  if (rows < 0) throw DomainError("--rows must be nonnegative");
  std::vector<std::vector<BigInt>> table;
  for (long long n = 0; n <= rows; ++n) {
    std::vector<BigInt> row;
    for (long long k = 0; k <= n + order - 1; ++k) row.push_back(trapezoid(order, n, k));
    table.push_back(std::move(row));
  }
  emit_integer_table(out, format, table, "n,k,value");
  return 0;
}

int run_triangle(long long rows, OutputFormat format, std::ostream& out) {
  if (rows < 0) throw DomainError("--rows must be nonnegative");
  std::vector<std::vector<BigInt>> table;
  for (long long n = 0; n <= rows; ++n) {
    std::vector<BigInt> row;
    for (long long k = 0; k <= n; ++k) row.push_back(catalan_triangle(n, k));
    table.push_back(std::move(row));
  }
  emit_integer_table(out, format, table, "n,k,value");
  return 0;
}

int run_catalan(long long upto, OutputFormat format, std::ostream& out) {
  if (upto < 0) throw DomainError("--upto must be nonnegative");
  std::vector<BigInt> values;
  for (long long n = 0; n <= upto; ++n) values.push_back(catalan_number(n));
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::array();
      for (const BigInt& v : values) body.push_back(v.str());
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv:
      out << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << values[n].str() << "\n";
      break;
    case OutputFormat::text:
      for (std::size_t n = 0; n < values.size(); ++n)
        out << (n ? "," : "") << values[n].str();
      out << "\n";
      break;
  }
  return 0;
}

int run_partitions_enumerate(long long n, bool noncrossing, const std::string& epsilon,
                             long long stratum, OutputFormat format, std::ostream& out) {
  std::vector<PairPartition> partitions;
  if (!epsilon.empty()) {
    const Signature signature = Signature::parse(epsilon);
    if (n >= 0 && 2 * n != signature.size())
      throw DomainError("--n disagrees with the length of --epsilon");
    if (noncrossing)
      partitions.push_back(ncpp_counterpart(signature));
    else
      partitions = enumerate_pp_eps(signature);
  } else {
    if (n < 0) throw DomainError("--n is required unless --epsilon is given");
    partitions = noncrossing ? enumerate_ncpp(static_cast<int>(n))
                             : enumerate_pp(static_cast<int>(n));
  }
  if (stratum >= 0) {
    std::vector<PairPartition> filtered;
    for (const PairPartition& p : partitions)
      if (k_class(p) == stratum) filtered.push_back(p);
    partitions = std::move(filtered);
  }
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::array();
      for (const PairPartition& p : partitions) body.push_back(to_json(p));
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv:
      out << "index,pairs\n";
      for (std::size_t i = 0; i < partitions.size(); ++i)
        out << i << "," << csv_field(partitions[i].str()) << "\n";
      break;
    case OutputFormat::text:
      for (const PairPartition& p : partitions) out << p.str() << "\n";
      break;
  }
  return 0;
}

int run_partitions_strata(long long n, OutputFormat format, std::ostream& out) {
  const auto strata = count_strata(static_cast<int>(n));
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::array();
      for (const auto& [k, counts] : strata)
        body.push_back(Json{{"k", k}, {"pp", counts.pp.str()}, {"ncpp", counts.ncpp.str()}});
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv:
      out << "k,pp,ncpp\n";
      for (const auto& [k, counts] : strata)
        out << k << "," << counts.pp.str() << "," << counts.ncpp.str() << "\n";
      break;
    case OutputFormat::text:
      for (const auto& [k, counts] : strata)
        out << "k=" << k << " pp=" << counts.pp.str() << " ncpp=" << counts.ncpp.str() << "\n";
      break;
  }
  return 0;
}

int run_cts_solve(const std::string& boundary_path, const std::string& method,
                  OutputFormat format, std::ostream& out, std::ostream& err) {
  const Json parsed = load_json_file(boundary_path);
  auto solve_and_emit = [&](const auto& boundary) -> int {
    using T = typename std::decay_t<decltype(boundary)>::value_type;
    if (method == "both") {
      const Report equivalence = check_equivalence(boundary);
      if (!equivalence.passed()) {
        for (const Check& check : equivalence.checks())
          if (!check.passed) err << "FAIL " << check.name << ": " << check.detail << "\n";
        return 1;
      }
    }
    const TriangleTable<T> table =
        method == "recurrence" ? solve_recurrence(boundary) : solve_closed_form(boundary);
    switch (format) {
      case OutputFormat::json:
        emit_json(out, Json{{"method", method}, {"rows", table_to_json(table)}});
        break;
      case OutputFormat::csv:
        out << "n,m,value\n";
        for (int n = 1; n <= table.depth(); ++n)
          for (int m = 1; m <= n; ++m)
            out << n << "," << m << "," << csv_field(table.at(n, m).str()) << "\n";
        break;
      case OutputFormat::text:
        for (int n = 1; n <= table.depth(); ++n) {
          for (int m = 1; m <= n; ++m) out << (m > 1 ? " " : "") << table.at(n, m).str();
          out << "\n";
        }
        break;
    }
    return 0;
  };
  return std::visit(solve_and_emit, boundary_from_json(parsed));
}

int run_fock_moment(const std::string& word_text, const std::string& gram_path,
                    const std::string& q_text, OutputFormat format, std::ostream& out) {
  const ParsedWord word = parse_operator_word(word_text);
  std::vector<int> labels = word.labels;
  GramMatrix gram = GramMatrix::identity(1);
  if (!gram_path.empty()) {
    gram = gram_from_json(load_json_file(gram_path));
  } else if (labels.empty()) {
    labels.assign(static_cast<std::size_t>(word.signature.size()), 1);  // one shared unit vector
  } else {
    gram = GramMatrix::identity(*std::max_element(labels.begin(), labels.end()));
  }
  const QPolynomial moment = vacuum_moment_gram(word.signature, gram, labels);
  if (q_text == "symbolic") {
    switch (format) {
      case OutputFormat::json:
        emit_json(out, to_json(moment));
        break;
      case OutputFormat::csv:
        out << "degree,coeff\n";
        for (std::size_t i = 0; i < moment.coeffs().size(); ++i)
          out << i << "," << moment.coeffs()[i].str() << "\n";
        break;
      case OutputFormat::text:
        out << moment.str() << "\n";
        break;
    }
    return 0;
  }
  const Rational value = moment.eval(Rational::parse(q_text));
  switch (format) {
    case OutputFormat::json:
      emit_json(out, to_json(value));
      break;
    case OutputFormat::csv:
      out << "value\n" << value.str() << "\n";
      break;
    case OutputFormat::text:
      out << value.str() << "\n";
      break;
  }
  return 0;
}

int run_fock_pnk(long long n, OutputFormat format, std::ostream& out) {
  if (n < 1) throw DomainError("--n must be positive");
  std::vector<QPolynomial> values;
  for (long long k = 1; k <= n; ++k) values.push_back(p_nk(static_cast<int>(n), static_cast<int>(k)));
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::object();
      for (long long k = 1; k <= n; ++k)
        body["(" + std::to_string(n) + "," + std::to_string(k) + ")"] =
            values[static_cast<std::size_t>(k - 1)].str();
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv:
      out << "n,k,value\n";
      for (long long k = 1; k <= n; ++k)
        out << n << "," << k << "," << csv_field(values[static_cast<std::size_t>(k - 1)].str()) << "\n";
      break;
    case OutputFormat::text:
      for (long long k = 1; k <= n; ++k)
        out << "P(" << n << "," << k << ")=" << values[static_cast<std::size_t>(k - 1)].str() << "\n";
      break;
  }
  return 0;
}

int run_fock_pn(long long upto, OutputFormat format, std::ostream& out) {
  if (upto < 1) throw DomainError("--upto must be positive");
  std::vector<QPolynomial> values;
  for (long long n = 1; n <= upto; ++n) values.push_back(p_n(static_cast<int>(n)));
  switch (format) {
    case OutputFormat::json: {
      Json body = Json::array();
      for (const QPolynomial& p : values) body.push_back(p.str());
      emit_json(out, body);
      break;
    }
    case OutputFormat::csv:
      out << "n,value\n";
      for (long long n = 1; n <= upto; ++n)
        out << n << "," << csv_field(values[static_cast<std::size_t>(n - 1)].str()) << "\n";
      break;
    case OutputFormat::text:
      for (long long n = 1; n <= upto; ++n)
        out << "P(" << n << ")=" << values[static_cast<std::size_t>(n - 1)].str() << "\n";
      break;
  }
  return 0;
}

void emit_report_text(std::ostream& out, const std::vector<Report>& reports) {
  bool all = true;
  for (const Report& report : reports) {
    out << "== suite " << report.title() << "\n";
    for (const Check& check : report.checks()) {
      out << (check.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.detail.empty()) out << ": " << check.detail;
      out << "\n";
    }
    all = all && report.passed();
  }
  out << "RESULT: " << (all ? "PASS" : "FAIL") << "\n";
}

Json report_to_json(const std::vector<Report>& reports) {
  Json suites = Json::array();
  bool all = true;
  for (const Report& report : reports) {
    Json checks = Json::array();
    for (const Check& check : report.checks())
      checks.push_back(
          Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    suites.push_back(
        Json{{"name", report.title()}, {"passed", report.passed()}, {"checks", checks}});
    all = all && report.passed();
  }
  return Json{{"passed", all}, {"suites", suites}};
}

int run_verify(const std::string& suite, long long max_n, OutputFormat format,
               std::ostream& out) {
  if (max_n < 0) throw DomainError("--max-n must be nonnegative");
  const int clamp = static_cast<int>(max_n);
  std::vector<Report> reports;
  if (suite == "all")
    reports = verify_all(clamp);
  else if (suite == "trapezoid")
    reports.push_back(verify_suite_trapezoid(clamp));
  else if (suite == "partitions")
    reports.push_back(verify_suite_partitions(clamp));
  else if (suite == "cts")
    reports.push_back(verify_suite_cts(clamp));
  else
    reports.push_back(verify_suite_fock(clamp));

  switch (format) {
    case OutputFormat::json:
      emit_json(out, report_to_json(reports));
      break;
    case OutputFormat::csv: {
      out << "suite,check,passed,detail\n";
      for (const Report& report : reports)
        for (const Check& check : report.checks())
          out << csv_field(report.title()) << "," << csv_field(check.name) << ","
              << (check.passed ? "true" : "false") << "," << csv_field(check.detail) << "\n";
      break;
    }
    case OutputFormat::text:
      emit_report_text(out, reports);
      break;
  }
  for (const Report& report : reports)
    if (!report.passed()) return 1;
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            bool stdout_is_tty) {
  CLI::App app{"exact Catalan trapezoids, pair partitions and (q,2)-deformed moments"};
  app.name("qcat");
  app.require_subcommand(1);

  std::string format_name = stdout_is_tty ? "text" : "json";
  app.add_option("--format", format_name, "Output format (text|json|csv)")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::function<int(OutputFormat)> action;

  long long trap_order = 1, trap_rows = 0;
  auto* trap_cmd = app.add_subcommand("trapezoid", "Emit trapezoid rows C_m(n,k)");
  trap_cmd->add_option("--order", trap_order, "Trapezoid order m >= 1")->required();
  trap_cmd->add_option("--rows", trap_rows, "Last row index n")->required();
  trap_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_trapezoid_table(trap_order, trap_rows, f, out); };
  });

  long long tri_rows = 0;
  auto* tri_cmd = app.add_subcommand("triangle", "Emit Catalan triangle rows C(n,k)");
  tri_cmd->add_option("--rows", tri_rows, "Last row index n")->required();
  tri_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_triangle(tri_rows, f, out); };
  });

  long long cat_upto = 0;
  auto* cat_cmd = app.add_subcommand("catalan", "Emit Catalan numbers C_0..C_N");
  cat_cmd->add_option("--upto", cat_upto, "Last index N")->required();
  cat_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_catalan(cat_upto, f, out); };
  });

  auto* parts_cmd = app.add_subcommand("partitions", "Pair-partition queries");
  parts_cmd->require_subcommand(1);

  long long enum_n = -1, enum_k = -1;
  bool enum_noncrossing = false;
  std::string enum_epsilon;
  auto* enum_cmd = parts_cmd->add_subcommand("enumerate", "List pair partitions");
  enum_cmd->add_option("--n", enum_n, "Half the number of points");
  enum_cmd->add_flag("--noncrossing", enum_noncrossing, "Restrict to non-crossing partitions");
  enum_cmd->add_option("--epsilon", enum_epsilon, "Plus-class signature word such as --++");
  enum_cmd->add_option("--k", enum_k, "Keep only the stratum 2n - l_n = k");
  enum_cmd->callback([&] {
    action = [&](OutputFormat f) {
      return run_partitions_enumerate(enum_n, enum_noncrossing, enum_epsilon, enum_k, f, out);
    };
  });

  long long strata_n = 0;
  auto* strata_cmd = parts_cmd->add_subcommand("strata", "Stratum sizes of PP and NCPP");
  strata_cmd->add_option("--n", strata_n, "Half the number of points")->required();
  strata_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_partitions_strata(strata_n, f, out); };
  });

  auto* cts_cmd = app.add_subcommand("cts", "Triangle-system solving");
  cts_cmd->require_subcommand(1);

  std::string solve_boundary, solve_method = "closed";
  auto* solve_cmd = cts_cmd->add_subcommand("solve", "Solve from a boundary file");
  solve_cmd->add_option("--boundary", solve_boundary, "JSON boundary file")->required();
  solve_cmd->add_option("--method", solve_method, "recurrence|closed|both")
      ->check(CLI::IsMember({"recurrence", "closed", "both"}));
  solve_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_cts_solve(solve_boundary, solve_method, f, out, err); };
  });

  auto* fock_cmd = app.add_subcommand("fock", "Deformed vacuum moments");
  fock_cmd->require_subcommand(1);

  std::string moment_word, moment_gram, moment_q = "symbolic";
  auto* moment_cmd = fock_cmd->add_subcommand("moment", "Vacuum moment of an operator word");
  moment_cmd->add_option("--word", moment_word, "Sign word, optionally labelled, e.g. --++ or -1-2+2+1")
      ->required();
  moment_cmd->add_option("--gram", moment_gram, "JSON Gram matrix of the test vectors");
  moment_cmd->add_option("--q", moment_q, "Rational value for q, or 'symbolic'");
  moment_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_fock_moment(moment_word, moment_gram, moment_q, f, out); };
  });

  long long pnk_n = 0;
  auto* pnk_cmd = fock_cmd->add_subcommand("pnk", "Stratum polynomials P(n,k)");
  pnk_cmd->add_option("--n", pnk_n, "Sector size n")->required();
  pnk_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_fock_pnk(pnk_n, f, out); };
  });

  long long pn_upto = 0;
  auto* pn_cmd = fock_cmd->add_subcommand("pn", "Totals P(1)..P(N)");
  pn_cmd->add_option("--upto", pn_upto, "Last index N")->required();
  pn_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_fock_pn(pn_upto, f, out); };
  });

  std::string verify_suite = "all";
  long long verify_max_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Replay the documented invariants");
  verify_cmd->add_option("--suite", verify_suite, "trapezoid|partitions|cts|fock|all")
      ->check(CLI::IsMember({"trapezoid", "partitions", "cts", "fock", "all"}));
  verify_cmd->add_option("--max-n", verify_max_n, "Clamp the n-like bound of every invariant");
  verify_cmd->callback([&] {
    action = [&](OutputFormat f) { return run_verify(verify_suite, verify_max_n, f, out); };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action(parse_format(format_name));
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcat
