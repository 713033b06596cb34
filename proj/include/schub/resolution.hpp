#ifndef SCHUB_RESOLUTION_HPP
#define SCHUB_RESOLUTION_HPP

#include <map>
#include <vector>

#include "schub/klideal.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Differential F_source -> F_target of free modules, entries in the ring.
/// entry[t][s] is the coefficient of target component t in the image of
/// source generator s. Degrees are under the coarse positive grading.
struct FreeModuleMap {
  std::vector<std::vector<Polynomial>> entry;  // [target][source]
  std::vector<int> target_degree;
  std::vector<int> source_degree;
  int target_rank() const { return static_cast<int>(target_degree.size()); }
  int source_rank() const { return static_cast<int>(source_degree.size()); }
};

struct BettiTable {
  std::vector<int> total;               // beta_0 .. beta_p
  std::map<std::pair<int, int>, int> graded;  // (i, degree) -> count
};

/// Free resolution of ring/<gens> by iterated Schreyer syzygies. degrees[v]
/// is the (positive) degree of ring variable v. Not minimal in general;
/// maps[0] is 1 x (#GB generators). Empty for the zero ideal.
std::vector<FreeModuleMap> schreyer_resolution(
    const std::vector<Polynomial>& gens, const RingPtr& ring,
    const std::vector<int>& degrees, const TermOrder& ord);

/// Resolution of spec.ring / <spec.generators> under kl_coarse_grading(spec.x).
std::vector<FreeModuleMap> schreyer_resolution(const KLIdealSpec& spec);

/// Cancel nonzero-constant entries until none remain (the unique minimal
/// resolution over the positively graded ring).
std::vector<FreeModuleMap> minimize_resolution(std::vector<FreeModuleMap> res);

BettiTable betti_table(const KLIdealSpec& spec);

/// Last nonzero Betti number of the quotient (its Cohen-Macaulay type).
int cm_type(const KLIdealSpec& spec);

/// beta_1: the number of minimal generators of the ideal.
int first_betti(const KLIdealSpec& spec);

}  // namespace schub

#endif
