#ifndef SCHUB_INVARIANTS_HPP
#define SCHUB_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "schub/klideal.hpp"
#include "schub/klpoly.hpp"
#include "schub/resolution.hpp"

namespace schub {

struct GorensteinStatus {
  bool value = true;
  /// True when decided by the conjectural locus families rather than an
  /// exact Cohen-Macaulay type computation (the families are proven
  /// correct for n <= 6).
  bool conjectural = false;
};

struct InvariantReport {
  Permutation x, w;
  bool smooth = false;
  long multiplicity = 1;
  GorensteinStatus gorenstein;
  std::optional<int> cm_type;
  std::optional<bool> lci;
  std::optional<KLPolynomial> kl_poly;

  /// {"x":..,"w":..,"smooth":..,"mult":..,"gorenstein":{"value":..,
  ///  "conjectural":..},"cm_type":..,"lci":..,"kl_poly":..}
  std::string json() const;
};

/// Global smoothness: classical avoidance of 3412 and 4231.
bool is_smooth(const Permutation& w);
/// Smoothness at e_x via the singular-locus interval patterns.
bool is_smooth_at(const Permutation& x, const Permutation& w);
/// Bruhat-maximal singular points of X_w.
std::vector<Permutation> singular_locus(const Permutation& w);

/// dim T_{e_x} X_w = (#free variables) - rank of the linear parts of the
/// defining ideal; equals l(w) - l(x) exactly at smooth points.
int tangent_space_dim(const Permutation& x, const Permutation& w);

/// Global Gorensteinness by interval pattern avoidance.
bool is_gorenstein(const Permutation& w);

struct ConjecturalLocus {
  std::vector<Permutation> max_points;
  bool conjectural = false;  // proven for n <= 6
};
/// Bruhat-maximal non-Gorenstein points from the conjectured families.
ConjecturalLocus non_gorenstein_locus(const Permutation& w);

/// Factoriality: classical 4231 and interval [3142,3412] avoidance.
bool is_factorial(const Permutation& w);

/// mult_{e_x}(X_w): degree of the projective tangent cone, from the lead
/// terms of a Groebner basis of the t-homogenized ideal under the
/// eliminate-t order, specialized at t = 1.
long multiplicity_at(const Permutation& x, const Permutation& w);

/// Local complete intersection at e_x: the minimal generator count of
/// I_{x,w} equals the codimension C(n,2) - l(w).
bool is_lci_at(const Permutation& x, const Permutation& w);

struct SurveyOptions {
  bool with_cm_type = false;
  bool with_lci = false;
  bool with_kl_poly = false;
  /// Restrict the sweep to one top permutation.
  std::optional<Permutation> only_w;
  /// Only report at x = identity.
  bool identity_only = false;
};

InvariantReport invariant_report(const Permutation& x, const Permutation& w,
                                 const SurveyOptions& opt = {});

/// Reports for every pair x <= w in S_n selected by the options.
std::vector<InvariantReport> survey(int n, const SurveyOptions& opt = {});

}  // namespace schub

#endif
