#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/partitions.hpp"
#include "qcat/qpolynomial.hpp"
#include "qcat/rational.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Rational coordinates of a test function in a finite-dimensional
/// coordinate space with a fixed basis.
class TestVector {
 public:
  explicit TestVector(std::vector<Rational> coords);

  /// The basis vector e_index inside a dim-dimensional space.
  static TestVector unit(int dim = 1, int index = 0);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const TestVector&, const TestVector&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Basis index word labelling one tensor monomial; the empty word labels the
/// vacuum component.
using BasisWord = std::vector<int>;

/// Finite sum over particle sectors: basis words mapped to amplitudes that
/// are polynomials in q. Zero amplitudes are never stored, so equality of
/// states is structural.
class FockState {
 public:
  FockState() = default;  // the zero state

  static FockState vacuum();

  /// Accumulates `delta` onto the amplitude at `word`, dropping the entry
  /// if the sum cancels.
  void add(const BasisWord& word, const QPolynomial& delta);

  const std::map<BasisWord, QPolynomial>& amplitudes() const { return amps_; }
  QPolynomial amplitude(const BasisWord& word) const;
  bool is_zero() const { return amps_.empty(); }

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::map<BasisWord, QPolynomial> amps_;
};

/// The coordinate space the simulator acts on: a dimension together with the
/// scalar products of its basis vectors. The default is the orthonormal
/// basis; a non-identity form models abstract test vectors known only
/// through their Gram matrix.
class FockSpace {
 public:
  explicit FockSpace(int dim);
  explicit FockSpace(GramMatrix basis_form);

  int dim() const { return dim_; }
  bool orthonormal() const { return !form_.has_value(); }

  Rational basis_inner(int i, int j) const;
  /// <f, e_i> for a coordinate vector f.
  Rational vector_basis_inner(const TestVector& f, int i) const;
  Rational vector_inner(const TestVector& f, const TestVector& g) const;

 private:
  int dim_ = 1;
  std::optional<GramMatrix> form_;
};

struct OperatorLetter {
  bool creation = true;  // +1 letters create, -1 letters annihilate
  TestVector vec;
};

/// A product of creation/annihilation operators, listed left to right as
/// written; evaluation onto the vacuum proceeds right to left.
struct OperatorWord {
  std::vector<OperatorLetter> letters;

  Signature signature() const;
  int max_dim() const;
};

/// Pairwise scalar products of coordinate vectors (orthonormal basis).
GramMatrix gram_from_vectors(const std::vector<TestVector>& vectors);

/// Deformed inner product of two states supported on the given sector. For
/// sectors 0 and 1 it is the plain inner product; from sector 2 on, only the
/// last two tensor slots are deformed:
///   <F, G' (x) f (x) g> + q * <F, G' (x) g (x) f>.
QPolynomial deformed_inner(const FockSpace& space, const FockState& lhs,
                           const FockState& rhs, int sector);
QPolynomial deformed_inner(const FockState& lhs, const FockState& rhs, int sector);

/// Creation prepends the test vector: the vacuum component c becomes c*f in
/// sector 1, and each word w becomes the words i . w weighted by f_i.
FockState apply_creation(const FockSpace& space, const TestVector& f, const FockState& s);
FockState apply_creation(const TestVector& f, const FockState& s);

/// Annihilation kills the vacuum, fully contracts sector 1, carries the
/// q-correction exactly on sector 2, and contracts only the first slot on
/// higher sectors:
///   n=1: g           -> <f,g> * vacuum
///   n=2: g1 (x) g2   -> <f,g1> g2 + q <f,g2> g1
///   n>2: g1 (x) ...  -> <f,g1> g2 (x) ... (x) gn
FockState apply_annihilation(const FockSpace& space, const TestVector& f, const FockState& s);
FockState apply_annihilation(const TestVector& f, const FockState& s);

/// Applies the word to the vacuum right to left and returns the vacuum
/// amplitude of the result. Zero for every odd-length word and for every
/// even word whose sign word lies outside the plus class.
QPolynomial vacuum_moment(const FockSpace& space, const OperatorWord& word);
QPolynomial vacuum_moment(const OperatorWord& word);

/// Moment of a word whose test vectors are known only via their Gram matrix:
/// the letter at position j acts with the abstract vector numbered
/// labels[j] (1-based). Empty labels mean "one distinct vector per letter",
/// requiring gram.dim() to equal the word length.
QPolynomial vacuum_moment_gram(const Signature& s, const GramMatrix& gram,
                               const std::vector<int>& labels = {});

/// P(n,k): the sum of vacuum moments over the k-stratum of plus signatures
/// of length 2n, with a single unit test vector. Guarded by n <= 7.
QPolynomial p_nk(int n, int k);

/// P(n) = sum_k P(n,k).
QPolynomial p_n(int n);

/// Checks that x_{n,k} := P(n+1,k+1) satisfies the triangle recurrence, has
/// the boundary x_{n,n} = 1+q and x_{n,1} = (1+q)P(n), and coincides with
/// the closed-form solution over the boundary b_n = (1+q)P(n). depth <= 6.
Report verify_cts_embedding(int depth);

/// Checks the strict sandwich C_n < P(n)|_{q=1} < (2n-1)!! for one n in
/// [3, 6] (it fails to be strict for n < 3).
Report verify_sandwich(int n);

}  // namespace qcat
