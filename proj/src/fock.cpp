#include "qcat/fock.hpp"

#include <algorithm>
#include <string>

#include "qcat/cts.hpp"
#include "qcat/errors.hpp"
#include "qcat/trapezoid.hpp"

namespace qcat {

TestVector::TestVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("test vector needs at least one coordinate");
}

TestVector TestVector::unit(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim)
    throw DomainError("unit vector index out of range");
  std::vector<Rational> coords(static_cast<std::size_t>(dim), Rational(0));
  coords[static_cast<std::size_t>(index)] = 1;
  return TestVector(std::move(coords));
}

bool TestVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

FockState FockState::vacuum() {
  FockState s;
  s.amps_[BasisWord{}] = QPolynomial(1);
  return s;
}

void FockState::add(const BasisWord& word, const QPolynomial& delta) {
  if (delta.is_zero()) return;
  auto it = amps_.find(word);
  if (it == amps_.end()) {
    amps_.emplace(word, delta);
    return;
  }
  it->second += delta;
  if (it->second.is_zero()) amps_.erase(it);
}

QPolynomial FockState::amplitude(const BasisWord& word) const {
  auto it = amps_.find(word);
  return it == amps_.end() ? QPolynomial() : it->second;
}

FockSpace::FockSpace(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("fock space dimension must be >= 1");
}

FockSpace::FockSpace(GramMatrix basis_form)
    : dim_(basis_form.dim()), form_(std::move(basis_form)) {
  if (dim_ < 1) throw DomainError("fock space dimension must be >= 1");
}

Rational FockSpace::basis_inner(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DomainError("basis index out of range");
  if (!form_) return i == j ? Rational(1) : Rational(0);
  return form_->at(i, j);
}

Rational FockSpace::vector_basis_inner(const TestVector& f, int i) const {
  if (f.dim() > dim_) throw DomainError("test vector does not fit the space");
  if (!form_) return i < f.dim() ? f.coord(i) : Rational(0);
  Rational acc(0);
  for (int j = 0; j < f.dim(); ++j) acc += f.coord(j) * form_->at(j, i);
  return acc;
}

Rational FockSpace::vector_inner(const TestVector& f, const TestVector& g) const {
  if (f.dim() > dim_ || g.dim() > dim_)
    throw DomainError("test vector does not fit the space");
  Rational acc(0);
  for (int i = 0; i < g.dim(); ++i) {
    if (g.coord(i).is_zero()) continue;
    acc += vector_basis_inner(f, i) * g.coord(i);
  }
  return acc;
}

Signature OperatorWord::signature() const {
  std::vector<int> word;
  word.reserve(letters.size());
  for (const auto& letter : letters) word.push_back(letter.creation ? 1 : -1);
  return Signature(std::move(word));
}

int OperatorWord::max_dim() const {
  int dim = 1;
  for (const auto& letter : letters) dim = std::max(dim, letter.vec.dim());
  return dim;
}

GramMatrix gram_from_vectors(const std::vector<TestVector>& vectors) {
  const int m = static_cast<int>(vectors.size());
  std::vector<std::vector<Rational>> entries(
      static_cast<std::size_t>(m),
      std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Rational acc(0);
      const int d = std::min(vectors[static_cast<std::size_t>(i)].dim(),
                             vectors[static_cast<std::size_t>(j)].dim());
      for (int t = 0; t < d; ++t)
        acc += vectors[static_cast<std::size_t>(i)].coord(t) *
               vectors[static_cast<std::size_t>(j)].coord(t);
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
      entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(acc);
    }
  }
  return GramMatrix(std::move(entries));
}

namespace {

void check_sector(const FockState& s, int sector, const FockSpace& space) {
  for (const auto& [word, amp] : s.amplitudes()) {
    if (static_cast<int>(word.size()) != sector)
      throw DomainError("state is not supported on sector " + std::to_string(sector));
    for (int letter : word)
      if (letter < 0 || letter >= space.dim())
        throw DomainError("basis word letter out of range for the space");
  }
}

BasisWord swap_last_two(BasisWord word) {
  std::swap(word[word.size() - 2], word[word.size() - 1]);
  return word;
}

void check_test_vector(const TestVector& f) {
  if (f.is_zero()) throw DomainError("operator test vector must be nonzero");
}

}  // namespace

QPolynomial deformed_inner(const FockSpace& space, const FockState& lhs,
                           const FockState& rhs, int sector) {
  if (sector < 0) throw DomainError("sector must be nonnegative");
  check_sector(lhs, sector, space);
  check_sector(rhs, sector, space);

  // lambda_n acts on the ket: identity up to sector 1, and from sector 2 on
  // it adds q times the word with the last two slots swapped.
  std::map<BasisWord, QPolynomial> deformed;
  for (const auto& [word, amp] : rhs.amplitudes()) {
    deformed[word] += amp;
    if (sector >= 2) {
      const QPolynomial swapped = QPolynomial::variable() * amp;
      auto& slot = deformed[swap_last_two(word)];
      slot += swapped;
    }
  }

  QPolynomial total;
  if (space.orthonormal()) {
    for (const auto& [word, amp] : lhs.amplitudes()) {
      auto it = deformed.find(word);
      if (it != deformed.end()) total += amp * it->second;
    }
    return total;
  }
  for (const auto& [u, a] : lhs.amplitudes()) {
    for (const auto& [v, b] : deformed) {
      Rational overlap(1);
      for (std::size_t i = 0; i < u.size() && !overlap.is_zero(); ++i)
        overlap *= space.basis_inner(u[i], v[i]);
      if (!overlap.is_zero()) total += a * b * QPolynomial(overlap);
    }
  }
  return total;
}

QPolynomial deformed_inner(const FockState& lhs, const FockState& rhs, int sector) {
  int dim = 1;
  for (const auto* s : {&lhs, &rhs})
    for (const auto& [word, amp] : s->amplitudes())
      for (int letter : word) dim = std::max(dim, letter + 1);
  return deformed_inner(FockSpace(dim), lhs, rhs, sector);
}

FockState apply_creation(const FockSpace& space, const TestVector& f, const FockState& s) {
  check_test_vector(f);
  if (f.dim() > space.dim()) throw DomainError("test vector does not fit the space");
  FockState out;
  for (const auto& [word, amp] : s.amplitudes()) {
    for (int i = 0; i < f.dim(); ++i) {
      if (f.coord(i).is_zero()) continue;
      BasisWord extended;
      extended.reserve(word.size() + 1);
      extended.push_back(i);
      extended.insert(extended.end(), word.begin(), word.end());
      out.add(extended, amp * QPolynomial(f.coord(i)));
    }
  }
  return out;
}

FockState apply_creation(const TestVector& f, const FockState& s) {
  int dim = f.dim();
  for (const auto& [word, amp] : s.amplitudes())
    for (int letter : word) dim = std::max(dim, letter + 1);
  return apply_creation(FockSpace(dim), f, s);
}

FockState apply_annihilation(const FockSpace& space, const TestVector& f, const FockState& s) {
  check_test_vector(f);
  if (f.dim() > space.dim()) throw DomainError("test vector does not fit the space");
  FockState out;
  for (const auto& [word, amp] : s.amplitudes()) {
    const std::size_t n = word.size();
    if (n == 0) continue;  // the vacuum is annihilated
    if (n == 1) {
      out.add(BasisWord{}, amp * QPolynomial(space.vector_basis_inner(f, word[0])));
      continue;
    }
    if (n == 2) {
      out.add(BasisWord{word[1]}, amp * QPolynomial(space.vector_basis_inner(f, word[0])));
      out.add(BasisWord{word[0]},
              amp * QPolynomial::monomial(1, space.vector_basis_inner(f, word[1])));
      continue;
    }
    BasisWord rest(word.begin() + 1, word.end());
    out.add(rest, amp * QPolynomial(space.vector_basis_inner(f, word[0])));
  }
  return out;
}

FockState apply_annihilation(const TestVector& f, const FockState& s) {
  int dim = f.dim();
  for (const auto& [word, amp] : s.amplitudes())
    for (int letter : word) dim = std::max(dim, letter + 1);
  return apply_annihilation(FockSpace(dim), f, s);
}

QPolynomial vacuum_moment(const FockSpace& space, const OperatorWord& word) {
  if (word.letters.empty()) throw DomainError("operator word must be nonempty");
  FockState state = FockState::vacuum();
  for (std::size_t j = word.letters.size(); j-- > 0;) {
    const OperatorLetter& letter = word.letters[j];
    state = letter.creation ? apply_creation(space, letter.vec, state)
                            : apply_annihilation(space, letter.vec, state);
    if (state.is_zero()) return {};
  }
  return state.amplitude(BasisWord{});
}

QPolynomial vacuum_moment(const OperatorWord& word) {
  return vacuum_moment(FockSpace(word.max_dim()), word);
}

QPolynomial vacuum_moment_gram(const Signature& s, const GramMatrix& gram,
                               const std::vector<int>& labels) {
  std::vector<int> resolved = labels;
  if (resolved.empty()) {
    if (gram.dim() != s.size())
      throw DomainError("vacuum_moment_gram: gram dimension must equal the word length");
    for (int j = 1; j <= s.size(); ++j) resolved.push_back(j);
  }
  if (static_cast<int>(resolved.size()) != s.size())
    throw DomainError("vacuum_moment_gram: one label per letter required");
  for (int label : resolved)
    if (label < 1 || label > gram.dim())
      throw DomainError("vacuum_moment_gram: label out of range for the gram matrix");

  const FockSpace space(gram);
  OperatorWord word;
  word.letters.reserve(static_cast<std::size_t>(s.size()));
  for (int j = 1; j <= s.size(); ++j)
    word.letters.push_back(
        OperatorLetter{s.at(j) == 1, TestVector::unit(gram.dim(), resolved[static_cast<std::size_t>(j - 1)] - 1)});
  return vacuum_moment(space, word);
}

QPolynomial p_nk(int n, int k) {
  if (n < 1) throw DomainError("p_nk: n must be positive");
  if (n > 7) throw SizeGuardError("p_nk: n exceeds the guard 7");
  if (k < 1 || k > n) throw DomainError("p_nk: k must lie in [1, n]");
  const TestVector f = TestVector::unit();
  const FockSpace space(1);
  QPolynomial total;
  for (const Signature& s : enumerate_plus_signatures(n, k)) {
    OperatorWord word;
    word.letters.reserve(static_cast<std::size_t>(2 * n));
    for (int j = 1; j <= 2 * n; ++j)
      word.letters.push_back(OperatorLetter{s.at(j) == 1, f});
    total += vacuum_moment(space, word);
  }
  return total;
}

QPolynomial p_n(int n) {
  if (n < 1) throw DomainError("p_n: n must be positive");
  if (n > 7) throw SizeGuardError("p_n: n exceeds the guard 7");
  QPolynomial total;
  for (int k = 1; k <= n; ++k) total += p_nk(n, k);
  return total;
}

Report verify_cts_embedding(int depth) {
  if (depth < 1) throw DomainError("verify_cts_embedding: depth must be >= 1");
  if (depth > 6) throw SizeGuardError("verify_cts_embedding: depth exceeds the guard 6");

  Report report("fock-cts-embedding");
  const QPolynomial one_plus_q = QPolynomial(1) + QPolynomial::variable();

  TriangleTable<QPolynomial> table(depth);
  for (int n = 1; n <= depth; ++n)
    for (int k = 1; k <= n; ++k) table.at(n, k) = p_nk(n + 1, k + 1);

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n < depth && ok; ++n) {
      for (int k = 1; k <= n && ok; ++k) {
        QPolynomial acc;
        for (int j = k; j <= n; ++j) acc += table.at(n, j);
        if (!(acc == table.at(n + 1, k + 1))) {
          ok = false;
          detail = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                   "): sum=" + acc.str() + " vs " + table.at(n + 1, k + 1).str();
        }
      }
    }
    report.add("triangle recurrence holds on the moment table", ok, detail);
  }

  std::vector<QPolynomial> pn_values(static_cast<std::size_t>(depth) + 1);
  for (int n = 1; n <= depth; ++n) pn_values[static_cast<std::size_t>(n)] = p_n(n);

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= depth && ok; ++n) {
      if (!(table.at(n, n) == one_plus_q)) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + table.at(n, n).str();
      }
    }
    report.add("top diagonal equals 1+q", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= depth && ok; ++n) {
      const QPolynomial expected = one_plus_q * pn_values[static_cast<std::size_t>(n)];
      if (!(table.at(n, 1) == expected)) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + table.at(n, 1).str() +
                 " vs " + expected.str();
      }
    }
    report.add("first column equals (1+q)P(n)", ok, detail);
  }

  {
    BoundarySequence<QPolynomial> boundary;
    boundary.reserve(static_cast<std::size_t>(depth));
    for (int n = 1; n <= depth; ++n)
      boundary.push_back(one_plus_q * pn_values[static_cast<std::size_t>(n)]);
    const TriangleTable<QPolynomial> solved = solve_closed_form(boundary);
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= depth && ok; ++n) {
      for (int k = 1; k <= n && ok; ++k) {
        if (!(solved.at(n, k) == table.at(n, k))) {
          ok = false;
          detail = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                   "): solver=" + solved.at(n, k).str() + " vs " + table.at(n, k).str();
        }
      }
    }
    report.add("equals closed-form solution over boundary (1+q)P(n)", ok, detail);
  }

  return report;
}

Report verify_sandwich(int n) {
  if (n < 3 || n > 6)
    throw DomainError("verify_sandwich: n must lie in [3, 6]");
  Report report("fock-sandwich");
  const Rational lower{catalan_number(n)};
  const Rational middle = p_n(n).eval(Rational(1));
  const Rational upper{semifactorial(2 * n - 1)};
  const bool ok = lower < middle && middle < upper;
  report.add("C_n < P(n)|_{q=1} < (2n-1)!! at n=" + std::to_string(n), ok,
             lower.str() + " < " + middle.str() + " < " + upper.str());
  return report;
}

}  // namespace qcat
