#include "qcat/partitions.hpp"

#include <algorithm>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

PairPartition::PairPartition(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  const int n = static_cast<int>(pairs_.size());
  if (n == 0) throw DomainError("pair partition must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(2 * n) + 1, false);
  int prev_left = 0;
  for (const auto& [l, r] : pairs_) {
    if (l < 1 || l > 2 * n || r < 1 || r > 2 * n)
      throw DomainError("pair partition: index out of {1,...,2n}");
    if (seen[static_cast<std::size_t>(l)] || seen[static_cast<std::size_t>(r)])
      throw DomainError("pair partition: repeated index");
    seen[static_cast<std::size_t>(l)] = seen[static_cast<std::size_t>(r)] = true;
    if (l >= r) throw DomainError("pair partition: left index must precede right index");
    if (l <= prev_left)
      throw DomainError("pair partition: left indices must be strictly increasing");
    prev_left = l;
  }
  // Coverage of {1,...,2n} follows: 2n distinct in-range indices.
}

PairPartition PairPartition::rank_normalized(std::vector<Pair> pairs) {
  std::vector<int> points;
  points.reserve(pairs.size() * 2);
  for (const auto& [l, r] : pairs) {
    points.push_back(l);
    points.push_back(r);
  }
  std::sort(points.begin(), points.end());
  auto rank = [&points](int value) {
    return static_cast<int>(std::lower_bound(points.begin(), points.end(), value) -
                            points.begin()) + 1;
  };
  for (auto& [l, r] : pairs) {
    l = rank(l);
    r = rank(r);
  }
  std::sort(pairs.begin(), pairs.end());
  return PairPartition(std::move(pairs));
}

std::vector<PairPartition::Pair> PairPartition::pairs_by_right() const {
  std::vector<Pair> sorted = pairs_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Pair& a, const Pair& b) { return a.second < b.second; });
  return sorted;
}

std::string PairPartition::str() const {
  std::string out;
  for (const auto& [l, r] : pairs_)
    out += "(" + std::to_string(l) + "," + std::to_string(r) + ")";
  return out;
}

Signature::Signature(std::vector<int> word) : word_(std::move(word)) {
  for (int v : word_)
    if (v != 1 && v != -1) throw DomainError("signature entries must be -1 or +1");
}

Signature Signature::parse(std::string_view text) {
  std::vector<int> word;
  word.reserve(text.size());
  for (char c : text) {
    if (c == '-')
      word.push_back(-1);
    else if (c == '+')
      word.push_back(1);
    else
      throw DomainError(std::string("signature characters must be '+' or '-', got '") + c + "'");
  }
  return Signature(std::move(word));
}

std::string Signature::str() const {
  std::string out;
  out.reserve(word_.size());
  for (int v : word_) out += v < 0 ? '-' : '+';
  return out;
}

GramMatrix::GramMatrix(std::vector<std::vector<Rational>> entries)
    : dim_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != dim_)
      throw DomainError("gram matrix must be square");
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) throw DomainError("gram matrix must be symmetric");
}

GramMatrix GramMatrix::identity(int dim) {
  std::vector<std::vector<Rational>> e(
      static_cast<std::size_t>(dim),
      std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return GramMatrix(std::move(e));
}

GramMatrix GramMatrix::all_ones(int dim) {
  std::vector<std::vector<Rational>> e(
      static_cast<std::size_t>(dim),
      std::vector<Rational>(static_cast<std::size_t>(dim), Rational(1)));
  return GramMatrix(std::move(e));
}

namespace {

void check_enumeration_guard(int n, int limit, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be positive");
  if (n > limit)
    throw SizeGuardError(std::string(what) + ": n exceeds the guard " + std::to_string(limit));
}

// Matches the smallest unmatched index to each admissible partner in
// increasing order, which emits partitions in lexicographic order of
// (r_1,...,r_n). With `noncrossing_only`, partners that would cross an
// existing pair are skipped; by restriction closure no valid partition is
// lost.
void enumerate_rec(int two_n, std::vector<bool>& used,
                   std::vector<PairPartition::Pair>& acc, bool noncrossing_only,
                   std::vector<PairPartition>& out) {
  int left = 0;
  for (int i = 1; i <= two_n; ++i) {
    if (!used[static_cast<std::size_t>(i)]) {
      left = i;
      break;
    }
  }
  if (left == 0) {
    out.emplace_back(acc);
    return;
  }
  used[static_cast<std::size_t>(left)] = true;
  for (int right = left + 1; right <= two_n; ++right) {
    if (used[static_cast<std::size_t>(right)]) continue;
    if (noncrossing_only) {
      bool crosses = false;
      for (const auto& [l, r] : acc) {
        if (l < left && left < r && r < right) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;
    }
    used[static_cast<std::size_t>(right)] = true;
    acc.emplace_back(left, right);
    enumerate_rec(two_n, used, acc, noncrossing_only, out);
    acc.pop_back();
    used[static_cast<std::size_t>(right)] = false;
  }
  used[static_cast<std::size_t>(left)] = false;
}

std::vector<PairPartition> enumerate_impl(int n, bool noncrossing_only) {
  std::vector<PairPartition> out;
  std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
  std::vector<PairPartition::Pair> acc;
  acc.reserve(static_cast<std::size_t>(n));
  enumerate_rec(2 * n, used, acc, noncrossing_only, out);
  return out;
}

}  // namespace

std::vector<PairPartition> enumerate_pp(int n) {
  check_enumeration_guard(n, 7, "enumerate_pp");
  return enumerate_impl(n, /*noncrossing_only=*/false);
}

bool is_noncrossing(const PairPartition& p) {
  const auto& pairs = p.pairs();
  for (std::size_t h = 0; h < pairs.size(); ++h) {
    for (std::size_t k = h + 1; k < pairs.size(); ++k) {
      const bool left_inside = pairs[k].first < pairs[h].second;
      const bool right_inside = pairs[k].second < pairs[h].second;
      if (left_inside != right_inside) return false;
    }
  }
  return true;
}

std::vector<PairPartition> enumerate_ncpp(int n) {
  check_enumeration_guard(n, 8, "enumerate_ncpp");
  return enumerate_impl(n, /*noncrossing_only=*/true);
}

int k_class(const PairPartition& p) { return p.points() - p.last_left(); }

Signature tau(const PairPartition& p) {
  std::vector<int> word(static_cast<std::size_t>(p.points()), 1);
  for (const auto& [l, r] : p.pairs()) word[static_cast<std::size_t>(l - 1)] = -1;
  return Signature(std::move(word));
}

SignatureClass classify_signature(const Signature& s) {
  const int m = s.size();
  if (m % 2 != 0) throw DomainError("classify_signature: word length must be even");
  int suffix = 0;
  int last_minus = 0;
  for (int pos = m; pos >= 1; --pos) {
    suffix += s.at(pos);
    if (suffix < 0) return SignatureClass{false, 0};
    if (last_minus == 0 && s.at(pos) == -1) last_minus = pos;
  }
  if (suffix != 0) return SignatureClass{false, 0};
  return SignatureClass{true, m - last_minus};
}

namespace {

// Prefix-sum form of the plus class: every prefix sum <= 0 and the total is
// zero. Choosing -1 before +1 yields lexicographic order with -1 < +1.
void plus_signatures_rec(int length, int prefix_sum, std::vector<int>& word,
                         std::vector<Signature>& out) {
  const int placed = static_cast<int>(word.size());
  if (placed == length) {
    out.emplace_back(word);
    return;
  }
  const int remaining = length - placed;
  // Feasibility: the remaining letters must be able to raise the sum to 0.
  if (prefix_sum - 1 + remaining >= 0) {
    word.push_back(-1);
    plus_signatures_rec(length, prefix_sum - 1, word, out);
    word.pop_back();
  }
  if (prefix_sum + 1 <= 0) {
    word.push_back(1);
    plus_signatures_rec(length, prefix_sum + 1, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Signature> enumerate_plus_signatures(int n, std::optional<int> k) {
  check_enumeration_guard(n, 8, "enumerate_plus_signatures");
  if (k && (*k < 1 || *k > n))
    throw DomainError("enumerate_plus_signatures: k must lie in [1, n]");
  std::vector<Signature> all;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  plus_signatures_rec(2 * n, 0, word, all);
  if (!k) return all;
  std::vector<Signature> stratum;
  for (auto& s : all)
    if (classify_signature(s).k == *k) stratum.push_back(std::move(s));
  return stratum;
}

namespace {

void fiber_rec(const std::vector<int>& lefts, const std::vector<int>& rights,
               std::vector<bool>& right_used, std::size_t h,
               std::vector<PairPartition::Pair>& acc, std::vector<PairPartition>& out) {
  if (h == lefts.size()) {
    out.emplace_back(acc);
    return;
  }
  for (std::size_t j = 0; j < rights.size(); ++j) {
    if (right_used[j] || rights[j] < lefts[h]) continue;
    right_used[j] = true;
    acc.emplace_back(lefts[h], rights[j]);
    fiber_rec(lefts, rights, right_used, h + 1, acc, out);
    acc.pop_back();
    right_used[j] = false;
  }
}

}  // namespace

std::vector<PairPartition> enumerate_pp_eps(const Signature& s) {
  const SignatureClass cls = classify_signature(s);
  if (!cls.is_plus) throw DomainError("enumerate_pp_eps: signature is not in the plus class");
  const int n = s.size() / 2;
  check_enumeration_guard(n, 7, "enumerate_pp_eps");

  std::vector<int> lefts, rights;
  for (int pos = 1; pos <= s.size(); ++pos)
    (s.at(pos) == -1 ? lefts : rights).push_back(pos);

  std::vector<PairPartition> out;
  std::vector<bool> right_used(rights.size(), false);
  std::vector<PairPartition::Pair> acc;
  acc.reserve(lefts.size());
  fiber_rec(lefts, rights, right_used, 0, acc, out);
  return out;
}

PairPartition ncpp_counterpart(const Signature& s) {
  const SignatureClass cls = classify_signature(s);
  if (!cls.is_plus) throw DomainError("ncpp_counterpart: signature is not in the plus class");
  std::vector<int> stack;
  std::vector<PairPartition::Pair> pairs;
  for (int pos = 1; pos <= s.size(); ++pos) {
    if (s.at(pos) == -1) {
      stack.push_back(pos);
    } else {
      pairs.emplace_back(stack.back(), pos);  // plus class: never empty here
      stack.pop_back();
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return PairPartition(std::move(pairs));
}

Rational wick_moment(const Signature& s, const GramMatrix& gram, WickMode mode) {
  if (gram.dim() != s.size())
    throw DomainError("wick_moment: gram dimension must equal the word length");
  if (s.size() == 0) return 1;  // empty product
  if (s.size() % 2 != 0) return 0;
  if (!classify_signature(s).is_plus) return 0;
  if (mode == WickMode::free) {
    const PairPartition counterpart = ncpp_counterpart(s);
    Rational product(1);
    for (const auto& [l, r] : counterpart.pairs()) product *= gram.at(l - 1, r - 1);
    return product;
  }
  Rational total(0);
  for (const PairPartition& p : enumerate_pp_eps(s)) {
    Rational product(1);
    for (const auto& [l, r] : p.pairs()) product *= gram.at(l - 1, r - 1);
    total += product;
  }
  return total;
}

std::map<int, StratumCounts> count_strata(int n) {
  check_enumeration_guard(n, 7, "count_strata");
  std::map<int, StratumCounts> table;
  for (int k = 1; k <= n; ++k) table[k] = StratumCounts{0, 0};
  for (const PairPartition& p : enumerate_pp(n)) {
    StratumCounts& row = table[k_class(p)];
    row.pp += 1;
    if (is_noncrossing(p)) row.ncpp += 1;
  }
  return table;
}

}  // namespace qcat
