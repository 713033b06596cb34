#include "schub/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "schub/groebner.hpp"

namespace schub {

namespace {

using Element = std::vector<Polynomial>;  // dense over target components

int mono_degree(const Monomial& m, const std::vector<int>& var_deg) {
  int d = 0;
  for (int v = 0; v < m.nvars(); ++v) d += m.exponent(v) * var_deg[v];
  return d;
}

bool element_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

/// Generators of one level of the resolution together with the lead data of
/// the Schreyer order they induce. flat[i] is the product of lead monomials
/// down the tower, so module terms compare by (flat image, then component).
struct Level {
  std::vector<Element> gens;
  std::vector<int> lead_comp;
  std::vector<Monomial> lead_mono;
  std::vector<Rational> lead_coeff;
  std::vector<Monomial> flat;
  std::vector<int> degree;
};

struct ModLead {
  int comp = -1;
  Monomial mono;
  Rational coeff;
};

ModLead module_lead(const Element& e, const std::vector<Monomial>& flat_prev,
                    const TermOrder& ord) {
  ModLead best;
  Monomial best_img;
  for (int c = 0; c < static_cast<int>(e.size()); ++c) {
    if (e[c].is_zero()) continue;
    const auto& [m, coef] = e[c].leading_term(ord);
    const Monomial img = m * flat_prev[c];
    if (best.comp < 0 || ord.less(best_img, img) ||
        (img == best_img && c < best.comp)) {
      best = {c, m, coef};
      best_img = img;
    }
  }
  return best;
}

void axpy(Element& e, const Rational& scale, const Monomial& shift,
          const Element& g) {
  for (size_t c = 0; c < e.size(); ++c)
    if (!g[c].is_zero()) e[c] -= g[c].times_term(shift, scale);
}

/// Reduce e to zero against the level's generators, recording the quotient
/// applied to each generator. Throws if a lead term has no divisor (the
/// level is expected to be a Groebner basis).
void reduce_to_zero(Element e, const Level& lv,
                    const std::vector<Monomial>& flat_prev,
                    const TermOrder& ord, std::vector<Polynomial>& quotient) {
  while (!element_zero(e)) {
    const ModLead lt = module_lead(e, flat_prev, ord);
    bool hit = false;
    for (size_t i = 0; i < lv.gens.size() && !hit; ++i) {
      if (lv.lead_comp[i] != lt.comp || !lv.lead_mono[i].divides(lt.mono))
        continue;
      const Monomial shift = lt.mono / lv.lead_mono[i];
      const Rational scale = lt.coeff / lv.lead_coeff[i];
      axpy(e, scale, shift, lv.gens[i]);
      quotient[i] += Polynomial::term(quotient[i].ring(), shift, scale);
      hit = true;
    }
    if (!hit) throw std::logic_error("syzygy S-pair did not reduce to zero");
  }
}

/// Keep only generators whose lead is not divisible by another kept lead in
/// the same component (still a Groebner basis of the same module).
void prune_minimal(Level& lv) {
  const int t = static_cast<int>(lv.gens.size());
  std::vector<bool> drop(t, false);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t && !drop[i]; ++j) {
      if (i == j || drop[j] || lv.lead_comp[i] != lv.lead_comp[j]) continue;
      if (lv.lead_mono[j].divides(lv.lead_mono[i]) &&
          (lv.lead_mono[i] != lv.lead_mono[j] || j < i))
        drop[i] = true;
    }
  Level kept;
  for (int i = 0; i < t; ++i) {
    if (drop[i]) continue;
    kept.gens.push_back(std::move(lv.gens[i]));
    kept.lead_comp.push_back(lv.lead_comp[i]);
    kept.lead_mono.push_back(lv.lead_mono[i]);
    kept.lead_coeff.push_back(lv.lead_coeff[i]);
    kept.flat.push_back(lv.flat[i]);
    kept.degree.push_back(lv.degree[i]);
  }
  lv = std::move(kept);
}

Level syzygy_level(const Level& lv, const std::vector<Monomial>& flat_prev,
                   const RingPtr& ring, const std::vector<int>& var_deg,
                   const TermOrder& ord) {
  const int t = static_cast<int>(lv.gens.size());
  Level next;
  for (int i = 0; i < t; ++i) {
    // The syzygy of the pair (i,j) leads with (lcm_ij/lm_i) e_i, so for
    // fixed i only pairs with divisibility-minimal leads are needed.
    std::vector<int> js;
    std::vector<Monomial> us;
    for (int j = i + 1; j < t; ++j) {
      if (lv.lead_comp[i] != lv.lead_comp[j]) continue;
      js.push_back(j);
      us.push_back(lcm(lv.lead_mono[i], lv.lead_mono[j]) / lv.lead_mono[i]);
    }
    for (size_t a = 0; a < js.size(); ++a) {
      bool skip = false;
      for (size_t b = 0; b < js.size() && !skip; ++b)
        if (a != b && us[b].divides(us[a]) && (us[a] != us[b] || b < a))
          skip = true;
      if (skip) continue;
      const int j = js[a];
      const Monomial mlcm = lcm(lv.lead_mono[i], lv.lead_mono[j]);

      Element spair(lv.gens[i].size(), Polynomial::zero(ring));
      axpy(spair, -1, mlcm / lv.lead_mono[i], lv.gens[i]);
      axpy(spair, lv.lead_coeff[i] / lv.lead_coeff[j], mlcm / lv.lead_mono[j],
           lv.gens[j]);
      std::vector<Polynomial> q(t, Polynomial::zero(ring));
      reduce_to_zero(spair, lv, flat_prev, ord, q);

      Element s(t, Polynomial::zero(ring));
      s[i] = Polynomial::term(ring, mlcm / lv.lead_mono[i], 1);
      s[j] = Polynomial::term(ring, mlcm / lv.lead_mono[j],
                              -lv.lead_coeff[i] / lv.lead_coeff[j]);
      for (int l = 0; l < t; ++l) s[l] -= q[l];
      next.gens.push_back(std::move(s));
      next.lead_comp.push_back(i);
      next.lead_mono.push_back(mlcm / lv.lead_mono[i]);
      next.lead_coeff.push_back(1);
      next.flat.push_back((mlcm / lv.lead_mono[i]) * lv.flat[i]);
      next.degree.push_back(mono_degree(mlcm / lv.lead_mono[i], var_deg) +
                            lv.degree[i]);
    }
  }
  prune_minimal(next);
  return next;
}

FreeModuleMap to_map(const Level& lv, const std::vector<int>& target_degree,
                     const RingPtr& ring) {
  FreeModuleMap mp;
  mp.target_degree = target_degree;
  mp.source_degree = lv.degree;
  const int rows = static_cast<int>(target_degree.size());
  const int cols = static_cast<int>(lv.gens.size());
  mp.entry.assign(rows, std::vector<Polynomial>(cols, Polynomial::zero(ring)));
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) mp.entry[r][c] = lv.gens[c][r];
  return mp;
}

}  // namespace

std::vector<FreeModuleMap> schreyer_resolution(
    const std::vector<Polynomial>& gens, const RingPtr& ring,
    const std::vector<int>& degrees, const TermOrder& ord) {
  const GroebnerBasis G = buchberger(gens, ord);
  if (G.generators.empty()) return {};

  Level lv;
  std::vector<Monomial> flat_prev{Monomial::one(ring->size())};
  for (const Polynomial& g : G.generators) {
    lv.gens.push_back({g});
    const auto& [m, c] = g.leading_term(ord);
    lv.lead_comp.push_back(0);
    lv.lead_mono.push_back(m);
    lv.lead_coeff.push_back(c);
    lv.flat.push_back(m);
    lv.degree.push_back(mono_degree(m, degrees));
  }

  std::vector<FreeModuleMap> maps;
  maps.push_back(to_map(lv, {0}, ring));
  while (true) {
    Level next = syzygy_level(lv, flat_prev, ring, degrees, ord);
    if (next.gens.empty()) break;
    maps.push_back(to_map(next, lv.degree, ring));
    flat_prev = lv.flat;
    lv = std::move(next);
  }
  return maps;
}

std::vector<FreeModuleMap> schreyer_resolution(const KLIdealSpec& spec) {
  std::vector<int> degrees;
  const GenericMatrix gm = generic_matrix(spec.x);
  if (gm.ring->size() == spec.ring->size()) {
    const Grading g = kl_coarse_grading(spec.x);
    for (const auto& d : g.degree) degrees.push_back(d[0]);
  } else {
    degrees.assign(spec.ring->size(), 1);  // fully generic ring
  }
  return schreyer_resolution(spec.generators, spec.ring,
                             degrees, TermOrder{TermOrder::Kind::GradedDiagonal});
}

namespace {

bool is_unit_entry(const Polynomial& p) {
  return !p.is_zero() && p.total_degree() == 0;
}

void erase_row(FreeModuleMap& mp, int r) {
  mp.entry.erase(mp.entry.begin() + r);
  mp.target_degree.erase(mp.target_degree.begin() + r);
}

void erase_col(FreeModuleMap& mp, int c) {
  for (auto& row : mp.entry) row.erase(row.begin() + c);
  mp.source_degree.erase(mp.source_degree.begin() + c);
}

}  // namespace

std::vector<FreeModuleMap> minimize_resolution(std::vector<FreeModuleMap> res) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < res.size() && !changed; ++k) {
      FreeModuleMap& M = res[k];
      for (int r = 0; r < M.target_rank() && !changed; ++r)
        for (int c = 0; c < M.source_rank() && !changed; ++c) {
          if (!is_unit_entry(M.entry[r][c])) continue;
          const Rational u = M.entry[r][c].terms()[0].second;
          // Clear row r by column operations; mirror them on the rows of
          // the next map so compositions stay zero.
          for (int c2 = 0; c2 < M.source_rank(); ++c2) {
            if (c2 == c || M.entry[r][c2].is_zero()) continue;
            const Polynomial lambda = M.entry[r][c2] * (1 / u);
            for (int r2 = 0; r2 < M.target_rank(); ++r2)
              M.entry[r2][c2] -= lambda * M.entry[r2][c];
            if (k + 1 < res.size()) {
              FreeModuleMap& N = res[k + 1];
              for (int s = 0; s < N.source_rank(); ++s)
                N.entry[c][s] += lambda * N.entry[c2][s];
            }
          }
          erase_row(M, r);
          erase_col(M, c);
          if (k + 1 < res.size()) erase_row(res[k + 1], c);
          if (k > 0) erase_col(res[k - 1], r);
          changed = true;
        }
    }
  }
  // Drop empty tail maps.
  while (!res.empty() && res.back().source_rank() == 0) res.pop_back();
  return res;
}

BettiTable betti_table(const KLIdealSpec& spec) {
  const auto res = minimize_resolution(schreyer_resolution(spec));
  BettiTable b;
  b.total.push_back(1);
  b.graded[{0, 0}] = 1;
  for (size_t k = 0; k < res.size(); ++k) {
    b.total.push_back(res[k].source_rank());
    for (int d : res[k].source_degree) ++b.graded[{static_cast<int>(k) + 1, d}];
  }
  return b;
}

int cm_type(const KLIdealSpec& spec) { return betti_table(spec).total.back(); }

int first_betti(const KLIdealSpec& spec) {
  const BettiTable b = betti_table(spec);
  return b.total.size() > 1 ? b.total[1] : 0;
}

}  // namespace schub
