#include "qcat/verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qcat/cts.hpp"
#include "qcat/detrng.hpp"
#include "qcat/fock.hpp"
#include "qcat/partitions.hpp"
#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"
#include "qcat/trapezoid.hpp"

namespace qcat {

namespace {

int bound(int stated, int max_n) { return max_n > 0 ? std::min(stated, max_n) : stated; }

std::string at_n(int n) { return "n=" + std::to_string(n); }

}  // namespace

Report verify_suite_exactalg(int max_n) {
  Report report("exactalg");
  DetRng rng(20240801);

  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const QPolynomial a = rng.polynomial(3), b = rng.polynomial(3), c = rng.polynomial(3);
      if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)) ||
          !(a * b == b * a) || !(a * (b + c) == a * b + a * c)) {
        ok = false;
        detail = "trial " + std::to_string(trial);
      }
    }
    report.add("polynomial ring axioms on random triples", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top = bound(30, max_n);
    for (long long n = 1; n <= top && ok; ++n) {
      for (long long k = 1; k <= n && ok; ++k) {
        if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k)) {
          ok = false;
          detail = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
      }
    }
    report.add("Pascal recurrence up to n=" + std::to_string(top), ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const QPolynomial a = rng.polynomial(3), b = rng.polynomial(3);
      const Rational point = rng.rational();
      if (!((a * b).eval(point) == a.eval(point) * b.eval(point)) ||
          !((a + b).eval(point) == a.eval(point) + b.eval(point))) {
        ok = false;
        detail = "trial " + std::to_string(trial) + " at q=" + point.str();
      }
    }
    report.add("evaluation is a ring homomorphism", ok, detail);
  }

  return report;
}

Report verify_suite_trapezoid(int max_n) {
  Report report("trapezoid");

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(8, max_n);
    for (long long m = 1; m <= 4 && ok; ++m) {
      for (long long n = 0; n <= top_n && ok; ++n) {
        for (long long k = 0; k <= n + m - 1 && ok; ++k) {
          const BigInt closed = trapezoid(m, n, k);
          const BigInt counted = ballot_count_oracle(m, n, k);
          if (closed != counted) {
            ok = false;
            detail = "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ": " + closed.str() + " != " + counted.str();
          }
        }
      }
    }
    report.add("closed form matches the ballot-string oracle (m<=4, n<=" +
                   std::to_string(top_n) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(10, max_n);
    for (long long n = 0; n <= top_n && ok; ++n)
      for (long long k = 0; k <= n && ok; ++k)
        if (trapezoid(1, n, k) != catalan_triangle(n, k)) {
          ok = false;
          detail = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
    report.add("order-1 trapezoid is the Catalan triangle (n<=" + std::to_string(top_n) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(9, max_n);
    for (long long n = 1; n <= top_n && ok; ++n)
      for (long long k = 0; k <= n - 1 && ok; ++k) {
        BigInt sum = 0;
        for (long long h = 0; h <= k; ++h) sum += catalan_triangle(n - 1, h);
        if (sum != catalan_triangle(n, k)) {
          ok = false;
          detail = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
      }
    report.add("partial row sums rebuild the next row (n<=" + std::to_string(top_n) + ")",
               ok, detail);
  }

  {
    const Report identities = verify_trapezoid_identities(5, bound(8, max_n));
    for (const Check& check : identities.checks()) report.add(check.name, check.passed, check.detail);
  }

  return report;
}

Report verify_suite_partitions(int max_n) {
  Report report("partitions");

  {
    // Right indices dominate left indices on every suffix, in both the
    // s-indexed and the point-indexed form.
    bool ok = true;
    std::string detail;
    const int top_n = bound(6, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (const PairPartition& p : enumerate_pp(n)) {
        const auto& pairs = p.pairs();
        for (int s = 1; s <= n && ok; ++s) {
          const int threshold = pairs[static_cast<std::size_t>(s - 1)].first;
          int rights = 0;
          for (const auto& pr : pairs) rights += pr.second >= threshold ? 1 : 0;
          if (rights < n - s + 1) {
            ok = false;
            detail = at_n(n) + ", p=" + p.str() + ", s=" + std::to_string(s);
          }
        }
        for (int point = 1; point <= 2 * n && ok; ++point) {
          int rights = 0, lefts = 0;
          for (const auto& pr : pairs) {
            rights += pr.second >= point ? 1 : 0;
            lefts += pr.first >= point ? 1 : 0;
          }
          if (rights < lefts) {
            ok = false;
            detail = at_n(n) + ", p=" + p.str() + ", point=" + std::to_string(point);
          }
        }
        if (!ok) break;
      }
    }
    report.add("suffix right-index dominance (n<=" + std::to_string(bound(6, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(6, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (const PairPartition& p : enumerate_pp(n)) {
        if (!classify_signature(tau(p)).is_plus) {
          ok = false;
          detail = at_n(n) + ", p=" + p.str();
          break;
        }
      }
      if (!ok) break;
      std::vector<Signature> images;
      for (const PairPartition& p : enumerate_ncpp(n)) images.push_back(tau(p));
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        ok = false;
        detail = at_n(n) + ": tau not injective on the non-crossing set";
        break;
      }
      std::vector<Signature> all = enumerate_plus_signatures(n);
      std::sort(all.begin(), all.end());
      if (images != all) {
        ok = false;
        detail = at_n(n) + ": tau image differs from the plus class";
      }
    }
    report.add("tau maps into the plus class and restricts to a bijection on "
               "non-crossing partitions (n<=" + std::to_string(bound(6, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(5, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (const Signature& s : enumerate_plus_signatures(n)) {
        BigInt expected = 1;
        int h = 0;
        for (int pos = 1; pos <= 2 * n; ++pos)
          if (s.at(pos) == -1) expected *= 2 * (++h) - pos;
        const auto fiber = enumerate_pp_eps(s);
        if (BigInt(fiber.size()) != expected) {
          ok = false;
          detail = "s=" + s.str() + ": " + std::to_string(fiber.size()) + " vs " + expected.str();
          break;
        }
      }
    }
    report.add("fiber size equals prod(2h - l_h) (n<=" + std::to_string(bound(5, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(7, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      const auto strata = count_strata(n);
      BigInt ncpp_total = 0;
      for (const auto& [k, counts] : strata) {
        ncpp_total += counts.ncpp;
        const BigInt expected = binomial(2 * n - k - 1, n - 1) * k / n;
        if (counts.ncpp != expected || counts.ncpp != catalan_triangle(n - 1, n - k)) {
          ok = false;
          detail = at_n(n) + ", k=" + std::to_string(k);
          break;
        }
      }
      if (!ok) break;
      if (ncpp_total != catalan_number(n)) {
        ok = false;
        detail = at_n(n) + ": strata do not sum to the Catalan number";
        break;
      }
      if (strata.at(n).pp != factorial(n) || strata.at(n).ncpp != 1) {
        ok = false;
        detail = at_n(n) + ": top stratum sizes wrong";
        break;
      }
      if (n >= 2 && strata.at(n - 1).ncpp != n - 1) {
        ok = false;
        detail = at_n(n) + ": stratum n-1 size wrong";
        break;
      }
      if (n >= 2 && strata.at(1).ncpp != catalan_number(n - 1)) {
        ok = false;
        detail = at_n(n) + ": stratum 1 is not the previous Catalan number";
        break;
      }
      if (n >= 3) {
        if (strata.at(2).ncpp != strata.at(1).ncpp) {
          ok = false;
          detail = at_n(n) + ": strata 1 and 2 differ";
          break;
        }
        const auto previous = count_strata(n - 1);
        for (int k = 2; k <= n - 1 && ok; ++k) {
          BigInt sum = 0;
          for (int h = k - 1; h <= n - 1; ++h) sum += previous.at(h).ncpp;
          if (strata.at(k).ncpp != sum) {
            ok = false;
            detail = at_n(n) + ", k=" + std::to_string(k) + ": recursion fails";
          }
        }
      }
    }
    report.add("stratum counts match the Catalan triangle and its recursions (n<=" +
                   std::to_string(bound(7, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(5, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (const PairPartition& p : enumerate_ncpp(n)) {
        const auto& pairs = p.pairs();
        for (unsigned mask = 1; mask < (1u << pairs.size()) && ok; ++mask) {
          std::vector<PairPartition::Pair> chosen;
          for (std::size_t h = 0; h < pairs.size(); ++h)
            if (mask & (1u << h)) chosen.push_back(pairs[h]);
          if (!is_noncrossing(PairPartition::rank_normalized(chosen))) {
            ok = false;
            detail = at_n(n) + ", p=" + p.str() + ", mask=" + std::to_string(mask);
          }
        }
        if (!ok) break;
      }
    }
    report.add("restrictions of non-crossing partitions stay non-crossing (n<=" +
                   std::to_string(bound(5, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(5, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      const GramMatrix ones = GramMatrix::all_ones(2 * n);
      for (const Signature& s : enumerate_plus_signatures(n)) {
        const Rational boson = wick_moment(s, ones, WickMode::boson);
        const Rational free_value = wick_moment(s, ones, WickMode::free);
        if (boson != Rational(BigInt(enumerate_pp_eps(s).size())) || free_value != Rational(1)) {
          ok = false;
          detail = "s=" + s.str();
          break;
        }
      }
    }
    report.add("all-ones Wick sums count the fiber (boson) and collapse to 1 (free) (n<=" +
                   std::to_string(bound(5, max_n)) + ")",
               ok, detail);
  }

  return report;
}

Report verify_suite_cts(int max_n) {
  Report report("cts");
  DetRng rng(20240802);
  const int depth = std::max(2, bound(10, max_n));

  auto random_rational_boundary = [&rng](int n) {
    BoundarySequence<Rational> b;
    b.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.push_back(rng.rational());
    return b;
  };

  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const auto b1 = random_rational_boundary(depth);
      const auto b2 = random_rational_boundary(depth);
      const Rational scale = rng.rational();
      BoundarySequence<Rational> combined;
      for (int i = 0; i < depth; ++i)
        combined.push_back(scale * b1[static_cast<std::size_t>(i)] + b2[static_cast<std::size_t>(i)]);
      const auto t1 = solve_recurrence(b1);
      const auto t2 = solve_recurrence(b2);
      const auto tc = solve_recurrence(combined);
      for (int n = 1; n <= depth && ok; ++n)
        for (int m = 1; m <= n && ok; ++m)
          if (!(tc.at(n, m) == scale * t1.at(n, m) + t2.at(n, m))) {
            ok = false;
            detail = "trial " + std::to_string(trial) + " at (" + std::to_string(n) + "," +
                     std::to_string(m) + ")";
          }
    }
    report.add("solver is linear in the boundary", ok, detail);
  }

  {
    BoundarySequence<Rational> zero(static_cast<std::size_t>(depth), Rational(0));
    const auto by_rec = solve_recurrence(zero);
    const auto by_closed = solve_closed_form(zero);
    bool ok = true;
    for (int n = 1; n <= depth && ok; ++n)
      for (int m = 1; m <= n && ok; ++m)
        ok = by_rec.at(n, m).is_zero() && by_closed.at(n, m).is_zero();
    report.add("zero boundary forces the zero table", ok, {});
  }

  {
    bool ok = true;
    std::string detail;
    const auto b = random_rational_boundary(depth);
    const auto table = solve_recurrence(b);
    for (int n = 1; n <= depth && ok; ++n)
      if (!(table.at(n, n) == b[0])) {
        ok = false;
        detail = at_n(n);
      }
    report.add("top diagonal repeats b_1", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const auto b = random_rational_boundary(depth);
    const auto table = solve_recurrence(b);
    for (int n = 3; n <= depth && ok; ++n) {
      Rational expected(0);
      for (int k = 0; k <= n - 2; ++k)
        expected += Rational(catalan_number(k)) * b[static_cast<std::size_t>(n - k - 2)];
      if (!(table.at(n, 2) == expected)) {
        ok = false;
        detail = at_n(n);
      }
    }
    report.add("second column is the Catalan convolution of the boundary", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const auto b = random_rational_boundary(depth);
    const auto table = solve_recurrence(b);
    for (int n = 3; n <= depth && ok; ++n) {
      Rational expected(0);
      for (int h = 0; h <= n - 3; ++h)
        expected += Rational(trapezoid(2, h, h + 1)) * b[static_cast<std::size_t>(n - h - 3)];
      if (!(table.at(n, 3) == expected)) {
        ok = false;
        detail = at_n(n);
      }
    }
    report.add("third column uses order-2 trapezoid coefficients", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const Report eq = check_equivalence(random_rational_boundary(depth));
      if (!eq.passed()) {
        ok = false;
        detail = "rational trial " + std::to_string(trial);
      }
    }
    const int poly_depth = std::max(2, bound(8, max_n));
    for (int trial = 0; trial < 5 && ok; ++trial) {
      BoundarySequence<QPolynomial> b;
      for (int i = 0; i < poly_depth; ++i) b.push_back(rng.polynomial(2));
      const Report eq = check_equivalence(b);
      if (!eq.passed()) {
        ok = false;
        detail = "polynomial trial " + std::to_string(trial);
      }
    }
    report.add("recurrence and closed form agree on random boundaries", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int table_depth = std::max(1, bound(8, max_n));
    const auto table = catalan_boundary_table(table_depth);  // throws on mismatch
    for (int n = 2; n <= table_depth && ok; ++n)
      if (!(table.at(n, 2) == table.at(n, 1))) {
        ok = false;
        detail = at_n(n) + ": second-column boundary fails";
      }
    const int strata_top = std::min(table_depth, bound(7, max_n));
    for (int n = 1; n <= strata_top && ok; ++n) {
      const auto strata = count_strata(n);
      for (int k = 1; k <= n && ok; ++k)
        if (!(table.at(n, k) == Rational(strata.at(k).ncpp))) {
          ok = false;
          detail = at_n(n) + ", k=" + std::to_string(k) + ": table does not count strata";
        }
    }
    report.add("Catalan boundary reproduces the stratified non-crossing counts (depth " +
                   std::to_string(table_depth) + ")",
               ok, detail);
  }

  return report;
}

namespace {

FockState random_state(DetRng& rng, int sector, int dim, int terms) {
  FockState state;
  if (sector == 0) {
    state.add(BasisWord{}, QPolynomial(rng.nonzero_rational()));
    return state;
  }
  for (int t = 0; t < terms; ++t) {
    BasisWord word;
    word.reserve(static_cast<std::size_t>(sector));
    for (int i = 0; i < sector; ++i)
      word.push_back(static_cast<int>(rng.next(static_cast<std::uint64_t>(dim))));
    state.add(word, QPolynomial(rng.rational()));
  }
  if (state.is_zero()) state.add(BasisWord(static_cast<std::size_t>(sector), 0), QPolynomial(1));
  return state;
}

TestVector random_vector(DetRng& rng, int dim) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) coords.push_back(rng.rational(5, 5));
  TestVector candidate(std::move(coords));
  if (candidate.is_zero()) return TestVector::unit(dim, 0);
  return candidate;
}

}  // namespace

Report verify_suite_fock(int max_n) {
  Report report("fock");
  DetRng rng(20240803);
  const QPolynomial one_plus_q = QPolynomial(1) + QPolynomial::variable();

  {
    bool ok = true;
    std::string detail;
    const int top_sector = bound(4, max_n);
    for (int trial = 0; trial < 40 && ok; ++trial) {
      const int sector = static_cast<int>(rng.next(static_cast<std::uint64_t>(top_sector + 1)));
      const int dim = 2 + static_cast<int>(rng.next(2));
      const FockSpace space(dim);
      const TestVector f = random_vector(rng, dim);
      const FockState lower = random_state(rng, sector, dim, 3);
      const FockState upper = random_state(rng, sector + 1, dim, 3);
      const QPolynomial lhs = deformed_inner(space, apply_creation(space, f, lower), upper, sector + 1);
      const QPolynomial rhs = deformed_inner(space, lower, apply_annihilation(space, f, upper), sector);
      if (!(lhs == rhs)) {
        ok = false;
        detail = "trial " + std::to_string(trial) + " in sector " + std::to_string(sector);
      }
    }
    report.add("creation and annihilation are adjoint under the deformed product",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const FockSpace space(2);
    const TestVector f = random_vector(rng, 2);
    for (int sector = 0; sector <= 3 && ok; ++sector) {
      const FockState state = random_state(rng, sector, 2, 2);
      const FockState raised = apply_creation(space, f, state);
      for (const auto& [word, amp] : raised.amplitudes())
        if (static_cast<int>(word.size()) != sector + 1) {
          ok = false;
          detail = "creation leaves sector " + std::to_string(sector);
        }
      const FockState lowered = apply_annihilation(space, f, state);
      for (const auto& [word, amp] : lowered.amplitudes())
        if (static_cast<int>(word.size()) != sector - 1) {
          ok = false;
          detail = "annihilation leaves sector " + std::to_string(sector);
        }
    }
    if (ok && !apply_annihilation(space, f, FockState::vacuum()).is_zero()) {
      ok = false;
      detail = "vacuum survives annihilation";
    }
    report.add("operators shift sectors by one and kill the vacuum", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_sector = std::max(2, bound(4, max_n));
    for (int sector = 2; sector <= top_sector && ok; ++sector) {
      const int dim = 2;
      const FockSpace space(dim);
      const TestVector f = random_vector(rng, dim);
      const FockState state = random_state(rng, sector, dim, 3);
      const QPolynomial lhs =
          deformed_inner(space, apply_creation(space, f, state), apply_creation(space, f, state), sector + 1);
      const QPolynomial rhs =
          QPolynomial(space.vector_inner(f, f)) * deformed_inner(space, state, state, sector);
      if (!(lhs == rhs)) {
        ok = false;
        detail = "sector " + std::to_string(sector);
      }
    }
    if (ok) {
      const FockSpace space(2);
      const TestVector f = random_vector(rng, 2), g = random_vector(rng, 2);
      FockState fg;
      FockState g_state;
      for (int i = 0; i < 2; ++i) g_state.add(BasisWord{i}, QPolynomial(g.coord(i)));
      fg = apply_creation(space, f, g_state);
      const QPolynomial lhs = deformed_inner(space, fg, fg, 2);
      const Rational ff = space.vector_inner(f, f), gg = space.vector_inner(g, g),
                     fgp = space.vector_inner(f, g);
      const QPolynomial rhs =
          QPolynomial(ff * gg) + QPolynomial::monomial(1, fgp * fgp);
      if (!(lhs == rhs)) {
        ok = false;
        detail = "two-slot product rule";
      }
    }
    report.add("prepending a vector scales the deformed norm except on the deformed slots",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const FockState state = random_state(rng, 2, 2, 3);
      const QPolynomial norm = deformed_inner(state, state, 2);
      if (norm.eval(Rational(1)).sign() < 0 || norm.eval(Rational(-1)).sign() < 0) {
        ok = false;
        detail = "trial " + std::to_string(trial);
      }
    }
    report.add("two-sector self products stay nonnegative at q = -1 and q = 1", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(4, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (const Signature& s : enumerate_plus_signatures(n)) {
        std::vector<TestVector> vectors;
        for (int j = 0; j < 2 * n; ++j) vectors.push_back(random_vector(rng, 3));
        OperatorWord word;
        for (int j = 1; j <= 2 * n; ++j)
          word.letters.push_back(
              OperatorLetter{s.at(j) == 1, vectors[static_cast<std::size_t>(j - 1)]});
        const Rational at_zero = vacuum_moment(word).eval(Rational(0));
        const Rational free_value = wick_moment(s, gram_from_vectors(vectors), WickMode::free);
        if (at_zero != free_value) {
          ok = false;
          detail = "s=" + s.str();
          break;
        }
      }
    }
    report.add("q=0 moments collapse to the free pairing product (n<=" +
                   std::to_string(bound(4, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(4, max_n);
    for (int length = 1; length <= 2 * top_n + 1 && ok; length += 2) {
      for (std::uint64_t mask = 0; mask < (1ull << length) && ok; ++mask) {
        OperatorWord word;
        for (int j = 0; j < length; ++j)
          word.letters.push_back(OperatorLetter{((mask >> j) & 1u) != 0, random_vector(rng, 2)});
        if (!vacuum_moment(word).is_zero()) {
          ok = false;
          detail = "length " + std::to_string(length) + ", mask " + std::to_string(mask);
        }
      }
    }
    for (int n = 1; n <= top_n && ok; ++n) {
      for (std::uint64_t mask = 0; mask < (1ull << (2 * n)) && ok; ++mask) {
        std::vector<int> sign_word;
        for (int j = 0; j < 2 * n; ++j) sign_word.push_back((mask >> j) & 1u ? 1 : -1);
        const Signature s(sign_word);
        if (classify_signature(s).is_plus) continue;
        OperatorWord word;
        for (int j = 1; j <= 2 * n; ++j)
          word.letters.push_back(OperatorLetter{s.at(j) == 1, random_vector(rng, 2)});
        if (!vacuum_moment(word).is_zero()) {
          ok = false;
          detail = "s=" + s.str();
        }
      }
    }
    report.add("odd words and minus-class words have vanishing moments (n<=" +
                   std::to_string(bound(4, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(5, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      const QPolynomial pn = p_n(n);
      if (!(p_nk(n + 1, 1) == pn)) {
        ok = false;
        detail = at_n(n) + ": first stratum";
        break;
      }
      if (!(p_nk(n + 1, 2) == one_plus_q * pn)) {
        ok = false;
        detail = at_n(n) + ": second stratum";
        break;
      }
      if (!(p_nk(n + 1, n + 1) == one_plus_q)) {
        ok = false;
        detail = at_n(n) + ": top stratum";
        break;
      }
      for (int k = 2; k <= n && ok; ++k) {
        QPolynomial sum;
        for (int h = k; h <= n; ++h) sum += p_nk(n, h);
        if (!(p_nk(n + 1, k + 1) == sum)) {
          ok = false;
          detail = at_n(n) + ", k=" + std::to_string(k);
        }
      }
    }
    report.add("stratum polynomials satisfy the triangle recurrences (n<=" +
                   std::to_string(bound(5, max_n)) + ")",
               ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const int top_n = bound(6, max_n);
    for (int n = 1; n <= top_n && ok; ++n) {
      for (int k = 1; k <= n && ok; ++k) {
        if (p_nk(n, k).eval(Rational(0)) != Rational(catalan_triangle(n - 1, n - k))) {
          ok = false;
          detail = at_n(n) + ", k=" + std::to_string(k);
        }
      }
      if (ok && p_n(n).eval(Rational(0)) != Rational(catalan_number(n))) {
        ok = false;
        detail = at_n(n) + ": total at q=0";
      }
    }
    report.add("q=0 specialization counts non-crossing strata (n<=" +
                   std::to_string(bound(6, max_n)) + ")",
               ok, detail);
  }

  {
    const Report embedding = verify_cts_embedding(std::max(1, bound(5, max_n)));
    for (const Check& check : embedding.checks()) report.add(check.name, check.passed, check.detail);
  }

  {
    const int top_n = bound(6, max_n);
    for (int n = 3; n <= top_n; ++n) {
      const Report sandwich = verify_sandwich(n);
      for (const Check& check : sandwich.checks()) report.add(check.name, check.passed, check.detail);
    }
  }

  return report;
}

std::vector<Report> verify_all(int max_n) {
  std::vector<Report> reports;
  reports.push_back(verify_suite_exactalg(max_n));
  reports.push_back(verify_suite_trapezoid(max_n));
  reports.push_back(verify_suite_partitions(max_n));
  reports.push_back(verify_suite_cts(max_n));
  reports.push_back(verify_suite_fock(max_n));
  return reports;
}

}  // namespace qcat
