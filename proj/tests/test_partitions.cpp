#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcat/detrng.hpp"
#include "qcat/errors.hpp"
#include "qcat/partitions.hpp"
#include "qcat/trapezoid.hpp"

using namespace qcat;

namespace {

PairPartition pp(std::vector<PairPartition::Pair> pairs) { return PairPartition(std::move(pairs)); }

BigInt fiber_size_formula(const Signature& s) {
  BigInt expected = 1;
  int h = 0;
  for (int pos = 1; pos <= s.size(); ++pos)
    if (s.at(pos) == -1) expected *= 2 * (++h) - pos;
  return expected;
}

}  // namespace

TEST_CASE("pair partition validation") {
  CHECK_NOTHROW(pp({{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(pp({}), DomainError);
  CHECK_THROWS_AS(pp({{1, 1}}), DomainError);                  // left must precede right
  CHECK_THROWS_AS(pp({{2, 1}}), DomainError);
  CHECK_THROWS_AS(pp({{1, 3}, {1, 2}}), DomainError);          // repeated index
  CHECK_THROWS_AS(pp({{2, 3}, {1, 4}}), DomainError);          // lefts must increase
  CHECK_THROWS_AS(pp({{1, 5}, {2, 3}}), DomainError);          // index outside {1,...,2n}
}

TEST_CASE("enumerate_pp counts and canonical order") {
  CHECK(enumerate_pp(1) == std::vector<PairPartition>{pp({{1, 2}})});
  CHECK(enumerate_pp(2).size() == 3);
  CHECK(enumerate_pp(3).size() == 15);
  for (int n = 1; n <= 6; ++n)
    CHECK(BigInt(enumerate_pp(n).size()) == semifactorial(2 * n - 1));

  // lexicographic in the right-index sequence
  const auto two = enumerate_pp(2);
  CHECK(two[0] == pp({{1, 2}, {3, 4}}));
  CHECK(two[1] == pp({{1, 3}, {2, 4}}));
  CHECK(two[2] == pp({{1, 4}, {2, 3}}));

  CHECK_THROWS_AS(enumerate_pp(8), SizeGuardError);
  CHECK_THROWS_AS(enumerate_pp(0), DomainError);
}

TEST_CASE("non-crossing test") {
  CHECK(is_noncrossing(pp({{1, 4}, {2, 3}})));
  CHECK_FALSE(is_noncrossing(pp({{1, 3}, {2, 4}})));
  CHECK(is_noncrossing(pp({{1, 2}, {3, 4}})));
}

TEST_CASE("enumerate_ncpp counts and agreement with filtering") {
  CHECK(enumerate_ncpp(1).size() == 1);
  CHECK(enumerate_ncpp(2).size() == 2);
  CHECK(enumerate_ncpp(3).size() == 5);
  for (int n = 1; n <= 8; ++n)
    CHECK(BigInt(enumerate_ncpp(n).size()) == catalan_number(n));
  for (int n = 1; n <= 5; ++n) {
    std::vector<PairPartition> filtered;
    for (const PairPartition& p : enumerate_pp(n))
      if (is_noncrossing(p)) filtered.push_back(p);
    CHECK(enumerate_ncpp(n) == filtered);
  }
  CHECK_THROWS_AS(enumerate_ncpp(9), SizeGuardError);
}

TEST_CASE("rank normalization of pairs over an arbitrary point set") {
  const PairPartition ranked = PairPartition::rank_normalized({{2, 9}, {5, 7}});
  CHECK(ranked == pp({{1, 4}, {2, 3}}));
  CHECK(PairPartition::rank_normalized({{10, 20}, {30, 40}}) == pp({{1, 2}, {3, 4}}));
  // rank order of the output is by left index even if the input was not
  CHECK(PairPartition::rank_normalized({{5, 7}, {2, 9}}) == pp({{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(PairPartition::rank_normalized({{1, 3}, {3, 5}}), DomainError);
}

TEST_CASE("restrictions of non-crossing partitions stay non-crossing") {
  for (int n = 1; n <= 5; ++n) {
    for (const PairPartition& p : enumerate_ncpp(n)) {
      const auto& pairs = p.pairs();
      for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
        std::vector<PairPartition::Pair> chosen;
        for (std::size_t h = 0; h < pairs.size(); ++h)
          if (mask & (1u << h)) chosen.push_back(pairs[h]);
        CHECK(is_noncrossing(PairPartition::rank_normalized(chosen)));
      }
    }
  }
}

TEST_CASE("display sort by right index") {
  const PairPartition nested = pp({{1, 6}, {2, 5}, {3, 4}});
  const auto by_right = nested.pairs_by_right();
  CHECK(by_right == std::vector<PairPartition::Pair>{{3, 4}, {2, 5}, {1, 6}});
  CHECK(nested.pairs() == std::vector<PairPartition::Pair>{{1, 6}, {2, 5}, {3, 4}});
}

TEST_CASE("stratum index") {
  CHECK(k_class(pp({{1, 2}, {3, 4}})) == 1);
  CHECK(k_class(pp({{1, 3}, {2, 4}})) == 2);
  CHECK(k_class(pp({{1, 6}, {2, 5}, {3, 4}})) == 3);  // the fully nested ladder
}

TEST_CASE("tau marks lefts with -1 and rights with +1") {
  CHECK(tau(pp({{1, 2}})) == Signature::parse("-+"));
  CHECK(tau(pp({{1, 3}, {2, 4}})) == Signature::parse("--++"));
  CHECK(tau(pp({{1, 2}, {3, 4}})) == Signature::parse("-+-+"));
}

TEST_CASE("signature parsing and classification") {
  CHECK(Signature::parse("--++").str() == "--++");
  CHECK_THROWS_AS(Signature::parse("-x+"), DomainError);

  const SignatureClass plus = classify_signature(Signature::parse("-+"));
  CHECK(plus.is_plus);
  CHECK(plus.k == 1);
  CHECK_FALSE(classify_signature(Signature::parse("+-")).is_plus);
  const SignatureClass nested = classify_signature(Signature::parse("--++"));
  CHECK(nested.is_plus);
  CHECK(nested.k == 2);
  CHECK_THROWS_AS(classify_signature(Signature::parse("-+-")), DomainError);
}

TEST_CASE("plus-class enumeration") {
  CHECK(enumerate_plus_signatures(2).size() == 2);
  CHECK(enumerate_plus_signatures(3).size() == 5);
  for (int n = 1; n <= 7; ++n)
    CHECK(BigInt(enumerate_plus_signatures(n).size()) == catalan_number(n));

  const auto forced = enumerate_plus_signatures(3, 3);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0] == Signature::parse("---+++"));

  for (const Signature& s : enumerate_plus_signatures(4)) {
    const SignatureClass cls = classify_signature(s);
    CHECK(cls.is_plus);
  }
  CHECK_THROWS_AS(enumerate_plus_signatures(3, 4), DomainError);
  CHECK_THROWS_AS(enumerate_plus_signatures(9), SizeGuardError);
}

TEST_CASE("tau is a bijection between non-crossing partitions and the plus class") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Signature> images;
    for (const PairPartition& p : enumerate_ncpp(n)) images.push_back(tau(p));
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    auto plus = enumerate_plus_signatures(n);
    std::sort(plus.begin(), plus.end());
    CHECK(images == plus);
  }
}

TEST_CASE("tau fibers") {
  const auto fiber = enumerate_pp_eps(Signature::parse("--++"));
  REQUIRE(fiber.size() == 2);
  CHECK(std::count(fiber.begin(), fiber.end(), pp({{1, 4}, {2, 3}})) == 1);
  CHECK(std::count(fiber.begin(), fiber.end(), pp({{1, 3}, {2, 4}})) == 1);

  const auto singleton = enumerate_pp_eps(Signature::parse("-+-+"));
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0] == pp({{1, 2}, {3, 4}}));

  const auto ladder_fiber = enumerate_pp_eps(Signature::parse("---+++"));
  CHECK(ladder_fiber.size() == 6);  // all bijections of three lefts onto three rights

  CHECK_THROWS_AS(enumerate_pp_eps(Signature::parse("+-")), DomainError);
}

TEST_CASE("fiber sizes follow the product formula and hold one non-crossing element") {
  for (int n = 1; n <= 5; ++n) {
    for (const Signature& s : enumerate_plus_signatures(n)) {
      const auto fiber = enumerate_pp_eps(s);
      CHECK(BigInt(fiber.size()) == fiber_size_formula(s));
      int noncrossing = 0;
      for (const PairPartition& p : fiber) {
        CHECK(tau(p) == s);
        if (is_noncrossing(p)) {
          ++noncrossing;
          CHECK(p == ncpp_counterpart(s));
        }
      }
      CHECK(noncrossing == 1);
    }
  }
}

TEST_CASE("non-crossing counterpart via the stack discipline") {
  CHECK(ncpp_counterpart(Signature::parse("--++")) == pp({{1, 4}, {2, 3}}));
  CHECK(ncpp_counterpart(Signature::parse("-+-+")) == pp({{1, 2}, {3, 4}}));
  CHECK(ncpp_counterpart(Signature::parse("---+++")) == pp({{1, 6}, {2, 5}, {3, 4}}));
  CHECK_THROWS_AS(ncpp_counterpart(Signature::parse("++--")), DomainError);
}

TEST_CASE("wick moments") {
  DetRng rng(5100);
  std::vector<std::vector<Rational>> entries(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      entries[i][j] = rng.rational();
      entries[j][i] = entries[i][j];
    }
  const GramMatrix gram(entries);

  const Rational boson = wick_moment(Signature::parse("--++"), gram, WickMode::boson);
  CHECK(boson == gram.at(0, 3) * gram.at(1, 2) + gram.at(0, 2) * gram.at(1, 3));

  CHECK(wick_moment(Signature::parse("+-"), GramMatrix::all_ones(2), WickMode::boson) ==
        Rational(0));
  CHECK(wick_moment(Signature::parse("-+-+"), GramMatrix::all_ones(4), WickMode::free) ==
        Rational(1));

  // all-ones gram: boson counts the fiber, free collapses to 1
  for (int n = 1; n <= 4; ++n) {
    const GramMatrix ones = GramMatrix::all_ones(2 * n);
    for (const Signature& s : enumerate_plus_signatures(n)) {
      CHECK(wick_moment(s, ones, WickMode::boson) ==
            Rational(BigInt(enumerate_pp_eps(s).size())));
      CHECK(wick_moment(s, ones, WickMode::free) == Rational(1));
    }
  }

  CHECK_THROWS_AS(wick_moment(Signature::parse("--++"), GramMatrix::all_ones(3), WickMode::boson),
                  DomainError);
}

TEST_CASE("stratum tables") {
  const auto strata3 = count_strata(3);
  CHECK(strata3.at(1).ncpp == 2);
  CHECK(strata3.at(2).ncpp == 2);
  CHECK(strata3.at(3).ncpp == 1);
  for (int n = 1; n <= 6; ++n) {
    const auto strata = count_strata(n);
    CHECK(strata.at(n).pp == factorial(n));
    CHECK(strata.at(1).ncpp == catalan_number(n - 1));
    for (int k = 1; k <= n; ++k)
      CHECK(strata.at(k).ncpp == binomial(2 * n - k - 1, n - 1) * k / n);
  }
  CHECK_THROWS_AS(count_strata(8), SizeGuardError);
}

TEST_CASE("suffix dominance holds for every pair partition") {
  for (int n = 1; n <= 5; ++n) {
    for (const PairPartition& p : enumerate_pp(n)) {
      const auto& pairs = p.pairs();
      for (int s = 1; s <= n; ++s) {
        const int threshold = pairs[static_cast<std::size_t>(s - 1)].first;
        int rights = 0;
        for (const auto& pr : pairs) rights += pr.second >= threshold ? 1 : 0;
        CHECK(rights >= n - s + 1);
      }
      CHECK(pairs.front().first == 1);
      CHECK(p.last_left() < p.points());
    }
  }
}
