#ifndef SCHUB_POLY_HPP
#define SCHUB_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace schub {

using Rational = mpq_class;

/// Ordered list of variable names. Position in the list is the variable index
/// and also fixes the sequence used by the term orders.
class VariableRing {
 public:
  explicit VariableRing(std::vector<std::string> names);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // -1 if absent

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const VariableRing>;

/// Exponent vector, dense over the ring's variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(int nvars, int index, int exp = 1);

  int nvars() const { return static_cast<int>(exp_.size()); }
  int exponent(int i) const { return exp_[i]; }
  int degree() const { return deg_; }

  bool is_one() const { return deg_ == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exp_;
  int deg_ = 0;
};

/// Total well-orders on monomials over the ring's variable sequence.
/// GradedDiagonal: total degree, ties by reverse lexicographic (earlier
///   variables larger). Picks the main-diagonal term of the defining minors.
/// EliminateFirst: exponent of variable 0 first (larger wins), ties by
///   GradedDiagonal over the whole sequence.
/// PureLex: lexicographic, earlier variables larger.
struct TermOrder {
  enum class Kind { GradedDiagonal, EliminateFirst, PureLex };
  Kind kind = Kind::GradedDiagonal;

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

/// Variable degrees, either multidegrees in Z^n or coarse positive integers.
struct Grading {
  enum class Mode { Multi, Coarse, Standard };
  Mode mode = Mode::Standard;
  /// degree[v] is the (multi)degree of variable v; length-1 vectors in
  /// Coarse mode, length-n in Multi mode, ignored in Standard mode.
  std::vector<std::vector<int>> degree;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored sorted descending by Monomial::operator< (a fixed
/// storage order independent of any TermOrder); no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, Monomial m, Rational c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const {
    return terms_;
  }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rational& c) const;
  /// Multiply by the single term c * m.
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  bool operator==(const Polynomial& g) const { return terms_ == g.terms_; }

  /// Largest term under ord. Polynomial must be nonzero.
  const std::pair<Monomial, Rational>& leading_term(const TermOrder& ord) const;

  int total_degree() const;  // standard grading; -1 for zero
  /// Substitute variable `index` by the constant value.
  Polynomial substitute(int index, const Rational& value) const;
  /// Map every variable through `var_map` (index in target ring) into `target`.
  Polynomial rename(const RingPtr& target, const std::vector<int>& var_map) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<std::pair<Monomial, Rational>> terms_;
  void add_term(const Monomial& m, const Rational& c);
  friend Polynomial unsafe_from_terms(
      RingPtr, std::vector<std::pair<Monomial, Rational>>);
};

/// All terms share one (multi)degree under the grading.
bool is_homogeneous(const Polynomial& f, const Grading& grading);

/// (Multi)degree of a monomial under the grading.
std::vector<int> graded_degree(const Monomial& m, const Grading& grading);

/// Standard-degree homogenization with the ring's reserved variable t
/// (index 0, named "t"); f must not involve t.
Polynomial homogenize_t(const Polynomial& f);
/// Specialize t -> 1.
Polynomial set_t_to_one(const Polynomial& f);

/// Exact determinant by cofactor expansion along the sparsest row/column.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace schub

#endif
