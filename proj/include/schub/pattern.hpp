#ifndef SCHUB_PATTERN_HPP
#define SCHUB_PATTERN_HPP

#include <string>
#include <utility>
#include <vector>

#include "schub/perm.hpp"

namespace schub {

/// Strictly increasing positions phi_1 < ... < phi_m in {1..n}.
struct Embedding {
  std::vector<int> indices;
};

/// A Bruhat interval [u,v] used as a pattern.
struct IntervalPattern {
  BruhatInterval interval;
};

/// Finite generator list for a property locus, restricted to a working rank.
struct PatternIdealGenerators {
  std::string name;
  std::vector<IntervalPattern> generators;
  bool conjectural = false;
};

/// All index sets where w restricted is order-isomorphic to v.
/// Empty result means w classically avoids v.
std::vector<Embedding> classical_embeddings(const Permutation& v,
                                            const Permutation& w);

/// Phi(u): agrees with w off phi, patterned as u on phi:
/// Phi(u)(phi_j) = w(phi_{(v^{-1} u)(j)}).
/// Throws if phi is not a classical embedding of v into w.
Permutation phi_image(const Permutation& u, const Permutation& v,
                      const Permutation& w, const Embedding& phi);

/// Length criterion: l(v) - l(u) == l(w) - l(Phi(u)).
bool is_interval_embedding(const Permutation& u, const Permutation& v,
                           const Permutation& w, const Embedding& phi);

/// All (phi, Phi(u)) passing is_interval_embedding.
std::vector<std::pair<Embedding, Permutation>> interval_embeddings(
    const IntervalPattern& pat, const Permutation& w);

bool interval_avoids(const Permutation& w, const IntervalPattern& pat);

/// Bruhat-maximal elements of {Phi(u)} over all generators and embeddings.
/// The locus is the union of closed cells below these points.
std::vector<Permutation> locus_max_points(const Permutation& w,
                                          const PatternIdealGenerators& gens);

/// True iff x lies below some locus max point. Throws if x is not <= w.
bool locus_contains(const Permutation& x, const Permutation& w,
                    const PatternIdealGenerators& gens);

/// Generator families for the singular locus (three parameterized families).
PatternIdealGenerators singular_generators(int n);
/// Interval patterns whose avoidance characterizes global Gorensteinness.
PatternIdealGenerators gorenstein_generators(int n);
/// Conjectural generators of the non-Gorenstein locus (proven for n <= 6).
PatternIdealGenerators non_gorenstein_locus_generators(int n);
/// [4231,4231] (classical) and [3142,3412]; avoidance = factorial.
PatternIdealGenerators factorial_generators(int n);

}  // namespace schub

#endif
