#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/rational.hpp"

namespace qcat {

/// A pair partition of {1,...,2n}: n pairs (l_h, r_h) covering every index
/// exactly once, with l_h < r_h and strictly increasing left indices.
class PairPartition {
 public:
  using Pair = std::pair<int, int>;

  explicit PairPartition(std::vector<Pair> pairs);

  /// Builds a pair partition from pairs over an arbitrary strictly ordered
  /// set of 2n integer points by replacing each point with its rank.
  static PairPartition rank_normalized(std::vector<Pair> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }  // n
  int points() const { return 2 * size(); }                     // 2n
  const std::vector<Pair>& pairs() const { return pairs_; }
  int last_left() const { return pairs_.back().first; }         // l_n

  /// The same pairs resorted by increasing right index (display order only;
  /// storage always keeps increasing left indices).
  std::vector<Pair> pairs_by_right() const;

  /// Display form "(1,4)(2,3)".
  std::string str() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// A word over {-1,+1}. Positions are 1-based to match the usual index
/// convention on {1,...,2n}.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> word);

  /// Parses e.g. "--++" ('-' is -1, '+' is +1, leftmost character first).
  static Signature parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int at(int pos) const { return word_.at(static_cast<std::size_t>(pos - 1)); }
  const std::vector<int>& word() const { return word_; }
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend bool operator<(const Signature& a, const Signature& b) {
    return a.word_ < b.word_;  // -1 sorts before +1
  }

 private:
  std::vector<int> word_;
};

/// Classification of an even-length signature: in the plus class (total sum
/// zero, every suffix sum nonnegative) `k` is the stratum index
/// 2n - max{ j : word(j) = -1 }; otherwise `k` is meaningless.
struct SignatureClass {
  bool is_plus = false;
  int k = 0;
};

/// Symmetric matrix of pairwise scalar products g[i][j] = <f_i, f_j>.
class GramMatrix {
 public:
  explicit GramMatrix(std::vector<std::vector<Rational>> entries);

  static GramMatrix identity(int dim);
  static GramMatrix all_ones(int dim);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const {  // 0-based
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

 private:
  int dim_ = 0;
  std::vector<std::vector<Rational>> entries_;
};

enum class WickMode { free, boson };

struct StratumCounts {
  BigInt pp;
  BigInt ncpp;
};

/// All of PP(2n) in lexicographic order of (r_1,...,r_n). |PP(2n)| is the
/// semifactorial (2n-1)!!. Guarded by n <= 7.
std::vector<PairPartition> enumerate_pp(int n);

/// True iff no two pairs interleave: for h < k, l_k < r_h iff r_k < r_h.
bool is_noncrossing(const PairPartition& p);

/// The non-crossing elements of PP(2n), in the same order enumerate_pp
/// would yield them. |NCPP(2n)| is the Catalan number C_n. Guarded by n <= 8.
std::vector<PairPartition> enumerate_ncpp(int n);

/// Stratum index 2n - l_n, always in {1,...,n}.
int k_class(const PairPartition& p);

/// Signature marking left indices -1 and right indices +1. Lands in the
/// plus class for every pair partition.
Signature tau(const PairPartition& p);

/// Plus/minus classification; DomainError on odd length.
SignatureClass classify_signature(const Signature& s);

/// The plus class of {-1,1}^{2n} (or its k-stratum when `k` is given), in
/// lexicographic order with -1 before +1. Total count is C_n. Guarded by
/// n <= 8; when given, k must lie in [1, n].
std::vector<Signature> enumerate_plus_signatures(int n, std::optional<int> k = std::nullopt);

/// The fiber of tau over a plus-class signature: all pair partitions whose
/// left indices sit exactly on the -1 positions. Its size is
/// prod_h (2h - l_h). DomainError on minus-class input; guarded by n <= 7.
std::vector<PairPartition> enumerate_pp_eps(const Signature& s);

/// The unique non-crossing element of the tau-fiber, built by the stack
/// discipline (each -1 pushes, each +1 closes the most recent open -1).
PairPartition ncpp_counterpart(const Signature& s);

/// Pairing-sum moment for the signature s with scalar products from `gram`
/// (dimension must equal the word length):
///   boson: sum over the whole fiber of prod g[l_h][r_h]
///   free:  the single product over ncpp_counterpart(s)
/// Zero for odd-length or minus-class signatures.
Rational wick_moment(const Signature& s, const GramMatrix& gram, WickMode mode);

/// Exact per-stratum sizes k -> (|PP_k(2n)|, |NCPP_k(2n)|) by enumeration.
/// Guarded by n <= 7.
std::map<int, StratumCounts> count_strata(int n);

}  // namespace qcat
