#ifndef SCHUB_KLPOLY_HPP
#define SCHUB_KLPOLY_HPP

#include <string>
#include <vector>

#include "schub/perm.hpp"

namespace schub {

/// Polynomial in q with nonnegative integer coefficients; coeff[i] is the
/// coefficient of q^i. No trailing zeros; empty means the zero polynomial.
struct KLPolynomial {
  std::vector<long> coeff;

  static KLPolynomial zero() { return {}; }
  static KLPolynomial one() { return {{1}}; }

  bool is_zero() const { return coeff.empty(); }
  bool is_one() const { return coeff.size() == 1 && coeff[0] == 1; }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  long operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(coeff.size())) ? coeff[i] : 0;
  }

  std::string str() const;  // e.g. "1 + 2q + q^2"
  bool operator==(const KLPolynomial&) const = default;
};

/// P_{x,w}(q) by the standard descent recursion. Requires x <= w in Bruhat
/// order (throws otherwise); constant term is 1 and the degree is at most
/// (l(w) - l(x) - 1)/2.
KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w);

}  // namespace schub

#endif
