#ifndef SCHUB_GROEBNER_HPP
#define SCHUB_GROEBNER_HPP

#include <vector>

#include "schub/poly.hpp"

namespace schub {

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  TermOrder order;
  /// Pairwise tail-reduced, monic, lead terms minimal, sorted by lead term.
  bool reduced = false;
};

/// Remainder of f on division by G: no remainder term is divisible by any
/// lead term of G, and f - result lies in <G>.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord);

/// Reduced Groebner basis of <gens> (Buchberger, normal strategy, product
/// and chain criteria; the input is interreduced first).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const TermOrder& ord);

/// <A> == <B> via reduced-basis comparison.
bool ideal_equal(const std::vector<Polynomial>& A,
                 const std::vector<Polynomial>& B, const TermOrder& ord);

/// Lead monomials of a Groebner basis, minimalized under divisibility.
std::vector<Monomial> initial_ideal(const GroebnerBasis& G);

/// Drop monomials divisible by another one in the list.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> M);

/// Krull dimension of the quotient by the monomial ideal <M>.
int monomial_dimension(const std::vector<Monomial>& M, int numvars);

/// Degree of the quotient by <M> under the standard grading, via the
/// Hilbert series numerator evaluated after canceling (1-t)^dim.
long monomial_degree(const std::vector<Monomial>& M, int numvars);

}  // namespace schub

#endif
