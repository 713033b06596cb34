#include "schub/invariants.hpp"

#include <json.hpp>

#include "schub/groebner.hpp"

namespace schub {

namespace {

/// Rank over Q of the degree-1 parts of the generators.
int linear_rank(const KLIdealSpec& spec) {
  const int nv = spec.ring->size();
  std::vector<std::vector<Rational>> rows;
  for (const Polynomial& g : spec.generators) {
    std::vector<Rational> row(nv, 0);
    bool nonzero = false;
    for (const auto& [m, c] : g.terms())
      if (m.degree() == 1)
        for (int v = 0; v < nv; ++v)
          if (m.exponent(v) == 1) {
            row[v] = c;
            nonzero = true;
          }
    if (nonzero) rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < nv && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int v = col; v < nv; ++v) rows[r][v] -= f * rows[rank][v];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_smooth(const Permutation& w) {
  return classical_embeddings(Permutation::parse("3412"), w).empty() &&
         classical_embeddings(Permutation::parse("4231"), w).empty();
}

bool is_smooth_at(const Permutation& x, const Permutation& w) {
  return !locus_contains(x, w, singular_generators(w.n()));
}

std::vector<Permutation> singular_locus(const Permutation& w) {
  return locus_max_points(w, singular_generators(w.n()));
}

int tangent_space_dim(const Permutation& x, const Permutation& w) {
  const KLIdealSpec spec = kl_ideal(x, w);
  return spec.ring->size() - linear_rank(spec);
}

bool is_gorenstein(const Permutation& w) {
  for (const IntervalPattern& pat : gorenstein_generators(w.n()).generators)
    if (!interval_avoids(w, pat)) return false;
  return true;
}

ConjecturalLocus non_gorenstein_locus(const Permutation& w) {
  ConjecturalLocus out;
  out.max_points = locus_max_points(w, non_gorenstein_locus_generators(w.n()));
  out.conjectural = w.n() > 6;
  return out;
}

bool is_factorial(const Permutation& w) {
  for (const IntervalPattern& pat : factorial_generators(w.n()).generators)
    if (!interval_avoids(w, pat)) return false;
  return true;
}

long multiplicity_at(const Permutation& x, const Permutation& w) {
  const KLIdealSpec spec = kl_ideal(x, w);
  if (spec.generators.empty()) return 1;
  const int nv = spec.ring->size();

  std::vector<std::string> names{"t"};
  for (int v = 0; v < nv; ++v) names.push_back(spec.ring->name(v));
  const RingPtr tring = std::make_shared<VariableRing>(std::move(names));
  std::vector<int> shift(nv);
  for (int v = 0; v < nv; ++v) shift[v] = v + 1;

  std::vector<Polynomial> homog;
  for (const Polynomial& g : spec.generators)
    homog.push_back(homogenize_t(g.rename(tring, shift)));

  // Lead terms under the eliminate-t order pick out the lowest-degree
  // forms; specializing t -> 1 leaves the initial ideal of the tangent cone.
  // Homogenizing the generators only gives an ideal contained in the
  // homogenization of the ideal, so saturate by t: strip common t-factors
  // from the basis and recompute until stable.
  const TermOrder elim{TermOrder::Kind::EliminateFirst};
  GroebnerBasis G = buchberger(homog, elim);
  for (bool divided = true; divided;) {
    divided = false;
    std::vector<Polynomial> next;
    for (const Polynomial& g : G.generators) {
      int k = g.terms()[0].first.exponent(0);
      for (const auto& [m, c] : g.terms()) k = std::min(k, m.exponent(0));
      if (k == 0) {
        next.push_back(g);
        continue;
      }
      divided = true;
      const Monomial tk = Monomial::var(tring->size(), 0, k);
      Polynomial h = Polynomial::zero(tring);
      for (const auto& [m, c] : g.terms())
        h += Polynomial::term(tring, m / tk, c);
      next.push_back(std::move(h));
    }
    if (divided) G = buchberger(next, elim);
  }
  std::vector<Monomial> leads;
  for (const Monomial& m : initial_ideal(G)) {
    std::vector<int> e(nv);
    for (int v = 0; v < nv; ++v) e[v] = m.exponent(v + 1);
    leads.emplace_back(std::move(e));
  }
  return monomial_degree(minimalize_monomials(std::move(leads)), nv);
}

bool is_lci_at(const Permutation& x, const Permutation& w) {
  const int n = w.n();
  const int codim = n * (n - 1) / 2 - w.length();
  return first_betti(kl_ideal(x, w)) == codim;
}

InvariantReport invariant_report(const Permutation& x, const Permutation& w,
                                 const SurveyOptions& opt) {
  InvariantReport rep;
  rep.x = x;
  rep.w = w;
  rep.smooth = is_smooth_at(x, w);
  rep.multiplicity = rep.smooth ? 1 : multiplicity_at(x, w);
  const KLIdealSpec spec = kl_ideal(x, w);
  if (opt.with_cm_type || w.n() <= 5) rep.cm_type = cm_type(spec);
  if (rep.cm_type) {
    rep.gorenstein = {*rep.cm_type == 1, false};
  } else {
    rep.gorenstein = {!locus_contains(x, w, non_gorenstein_locus_generators(w.n())),
                      w.n() > 6};
  }
  if (!opt.with_cm_type) rep.cm_type.reset();
  if (opt.with_lci) rep.lci = is_lci_at(x, w);
  if (opt.with_kl_poly) rep.kl_poly = kl_polynomial(x, w);
  return rep;
}

std::vector<InvariantReport> survey(int n, const SurveyOptions& opt) {
  std::vector<Permutation> tops;
  if (opt.only_w)
    tops.push_back(*opt.only_w);
  else
    tops = all_permutations(n);
  std::vector<InvariantReport> out;
  for (const Permutation& w : tops) {
    if (opt.identity_only) {
      out.push_back(invariant_report(Permutation::identity(n), w, opt));
      continue;
    }
    for (const Permutation& x :
         interval_elements({Permutation::identity(n), w}))
      out.push_back(invariant_report(x, w, opt));
  }
  return out;
}

std::string InvariantReport::json() const {
  nlohmann::ordered_json j;
  j["x"] = x.str();
  j["w"] = w.str();
  j["smooth"] = smooth;
  j["mult"] = multiplicity;
  j["gorenstein"] = {{"value", gorenstein.value},
                     {"conjectural", gorenstein.conjectural}};
  j["cm_type"] = cm_type ? nlohmann::ordered_json(*cm_type)
                         : nlohmann::ordered_json(nullptr);
  j["lci"] = lci ? nlohmann::ordered_json(*lci) : nlohmann::ordered_json(nullptr);
  if (kl_poly)
    j["kl_poly"] = kl_poly->coeff;
  else
    j["kl_poly"] = nullptr;
  return j.dump();
}

}  // namespace schub
