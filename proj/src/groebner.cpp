#include "schub/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schub {

namespace {

struct OrdGreater {
  const TermOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->less(b, a);
  }
};

using WorkPoly = std::map<Monomial, Rational, OrdGreater>;

WorkPoly to_work(const Polynomial& f, const TermOrder& ord) {
  WorkPoly p(OrdGreater{&ord});
  for (const auto& [m, c] : f.terms()) p.emplace(m, c);
  return p;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& p) {
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Polynomial out = Polynomial::zero(ring);
  for (auto& [m, c] : terms) out += Polynomial::term(ring, m, c);
  return out;
}

struct Divisor {
  Monomial lead;
  Rational lead_coeff;
  const Polynomial* poly;
};

// p -= (c/lc_g) * (m/lm_g) * g
void reduce_step(WorkPoly& p, const Monomial& m, const Rational& c,
                 const Divisor& g) {
  const Monomial shift = m / g.lead;
  const Rational scale = c / g.lead_coeff;
  for (const auto& [gm, gc] : g.poly->terms()) {
    const Monomial key = gm * shift;
    auto it = p.find(key);
    if (it == p.end()) {
      p.emplace(key, -(scale * gc));
    } else {
      it->second -= scale * gc;
      if (it->second == 0) p.erase(it);
    }
  }
}

// Remainder and optional quotient recording (quotients[i] accumulates the
// multiplier applied to divisors[i]).
Polynomial divide(const Polynomial& f, const std::vector<Divisor>& divisors,
                  const TermOrder& ord) {
  WorkPoly p = to_work(f, ord);
  WorkPoly r(OrdGreater{&ord});
  while (!p.empty()) {
    const auto [m, c] = *p.begin();
    const Divisor* hit = nullptr;
    for (const auto& d : divisors)
      if (d.lead.divides(m)) {
        hit = &d;
        break;
      }
    if (hit) {
      reduce_step(p, m, c, *hit);
    } else {
      r.emplace(m, c);
      p.erase(p.begin());
    }
  }
  return from_work(f.ring(), r);
}

std::vector<Divisor> make_divisors(const std::vector<Polynomial>& G,
                                   const TermOrder& ord) {
  std::vector<Divisor> d;
  d.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    const auto& lt = g.leading_term(ord);
    d.push_back({lt.first, lt.second, &g});
  }
  return d;
}

Polynomial make_monic(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) return f;
  return f * (1 / f.leading_term(ord).second);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord) {
  return divide(f, make_divisors(G, ord), ord);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const TermOrder& ord) {
  GroebnerBasis gb{{}, ord, true};
  // Interreduce the input first; kl_ideal construction can hand us many
  // redundant minors and the pair loop is quadratic in the basis size.
  std::vector<const Polynomial*> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(&g);
  std::sort(in.begin(), in.end(), [&](const Polynomial* a, const Polynomial* b) {
    const auto& la = a->leading_term(ord).first;
    const auto& lb = b->leading_term(ord).first;
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return ord.less(la, lb);
  });
  std::vector<Polynomial> G;
  for (const Polynomial* g : in) {
    Polynomial h = normal_form(*g, G, ord);
    if (!h.is_zero()) G.push_back(make_monic(h, ord));
  }
  if (G.empty()) return gb;

  std::vector<Monomial> lead;
  for (const auto& g : G) lead.push_back(g.leading_term(ord).first);

  struct Pair {
    int i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.lcm != b.lcm) return ord.less(a.lcm, b.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) pairs.push_back({i, j, lcm(lead[i], lead[j])});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    // Product criterion.
    if (gcd(lead[pr.i], lead[pr.j]).is_one()) continue;
    // Chain criterion (acyclic form): skip when some lead[k] divides the lcm
    // and both sub-lcms are strictly smaller.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j || !lead[k].divides(pr.lcm)) continue;
      if (lcm(lead[pr.i], lead[k]) != pr.lcm && lcm(lead[pr.j], lead[k]) != pr.lcm)
        skip = true;
    }
    if (skip) continue;

    const Polynomial spoly =
        G[pr.i].times_term(pr.lcm / lead[pr.i], 1) -
        G[pr.j].times_term(pr.lcm / lead[pr.j],
                           G[pr.i].leading_term(ord).second /
                               G[pr.j].leading_term(ord).second);
    Polynomial h = normal_form(spoly, G, ord);
    if (h.is_zero()) continue;
    G.push_back(make_monic(h, ord));
    lead.push_back(G.back().leading_term(ord).first);
    add_pairs_for(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = G[i].leading_term(ord).first;
      const Monomial& lj = G[j].leading_term(ord).first;
      redundant = lj.divides(li) && (li != lj || j < i);
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Tail-reduce to the unique reduced basis.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = make_monic(normal_form(minimal[i], others, ord), ord);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.less(a.leading_term(ord).first,
                              b.leading_term(ord).first);
            });
  gb.generators = std::move(minimal);
  return gb;
}

bool ideal_equal(const std::vector<Polynomial>& A,
                 const std::vector<Polynomial>& B, const TermOrder& ord) {
  const GroebnerBasis ga = buchberger(A, ord);
  const GroebnerBasis gb = buchberger(B, ord);
  return ga.generators == gb.generators;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> M) {
  std::sort(M.begin(), M.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.degree() < b.degree();
            });
  std::vector<Monomial> out;
  for (const auto& m : M) {
    bool covered = false;
    for (const auto& g : out)
      if (g.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& G) {
  std::vector<Monomial> M;
  for (const auto& g : G.generators)
    if (!g.is_zero()) M.push_back(g.leading_term(G.order).first);
  return minimalize_monomials(std::move(M));
}

namespace {

using Mask = unsigned long long;

void min_cover(const std::vector<Mask>& supports, Mask covered, int chosen,
               int& best) {
  if (chosen >= best) return;
  int pick = -1;
  for (size_t i = 0; i < supports.size(); ++i)
    if (!(supports[i] & covered)) {
      if (pick < 0 ||
          __builtin_popcountll(supports[i]) < __builtin_popcountll(supports[pick]))
        pick = static_cast<int>(i);
    }
  if (pick < 0) {
    best = chosen;
    return;
  }
  Mask s = supports[pick];
  while (s) {
    Mask bit = s & (-s);
    s ^= bit;
    min_cover(supports, covered | bit, chosen + 1, best);
  }
}

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> M, int numvars);

std::vector<mpz_class> poly_mul_one_minus_tk(const std::vector<mpz_class>& a,
                                             int k) {
  std::vector<mpz_class> out(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + k] -= a[i];
  }
  return out;
}

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> M, int numvars) {
  M = minimalize_monomials(std::move(M));
  if (M.empty()) return {1};
  if (M.size() == 1 && M[0].is_one()) return {0};
  // Pure powers of distinct variables: product of (1 - t^d).
  bool pure = true;
  for (const auto& m : M) {
    int nz = 0;
    for (int i = 0; i < numvars; ++i) nz += m.exponent(i) > 0;
    if (nz > 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    std::vector<mpz_class> N{1};
    for (const auto& m : M) N = poly_mul_one_minus_tk(N, m.degree());
    return N;
  }
  // Pivot on the most frequent variable among non-pure generators.
  std::vector<int> freq(numvars, 0);
  for (const auto& m : M) {
    int nz = 0;
    for (int i = 0; i < numvars; ++i) nz += m.exponent(i) > 0;
    if (nz <= 1) continue;
    for (int i = 0; i < numvars; ++i)
      if (m.exponent(i) > 0) ++freq[i];
  }
  const int x = static_cast<int>(std::max_element(freq.begin(), freq.end()) -
                                 freq.begin());
  const Monomial xm = Monomial::var(numvars, x);
  std::vector<Monomial> sum_gens{xm}, colon_gens;
  for (const auto& m : M) {
    if (m.exponent(x) == 0) sum_gens.push_back(m);
    colon_gens.push_back(m.exponent(x) > 0 ? m / xm : m);
  }
  std::vector<mpz_class> a = hilbert_numerator(std::move(sum_gens), numvars);
  std::vector<mpz_class> b = hilbert_numerator(std::move(colon_gens), numvars);
  std::vector<mpz_class> out(std::max(a.size(), b.size() + 1), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

int monomial_dimension(const std::vector<Monomial>& M, int numvars) {
  if (numvars > 63) throw std::invalid_argument("too many variables");
  std::vector<Mask> supports;
  for (const auto& m : minimalize_monomials(M)) {
    if (m.is_one()) return -1;  // unit ideal: empty scheme
    Mask s = 0;
    for (int i = 0; i < numvars; ++i)
      if (m.exponent(i) > 0) s |= Mask{1} << i;
    supports.push_back(s);
  }
  int best = numvars;
  min_cover(supports, 0, 0, best);
  return numvars - best;
}

long monomial_degree(const std::vector<Monomial>& M, int numvars) {
  const int dim = monomial_dimension(M, numvars);
  if (dim < 0) throw std::invalid_argument("unit ideal has no degree");
  std::vector<mpz_class> N = hilbert_numerator(M, numvars);
  // Cancel (1-t)^(numvars - dim), then evaluate at t = 1.
  for (int k = 0; k < numvars - dim; ++k) {
    std::vector<mpz_class> q(N.size(), 0);
    mpz_class run = 0;
    for (size_t i = 0; i < N.size(); ++i) {
      run += N[i];
      q[i] = run;
    }
    if (run != 0) throw std::logic_error("Hilbert numerator not divisible");
    q.pop_back();
    N = std::move(q);
  }
  mpz_class total = 0;
  for (const auto& c : N) total += c;
  return static_cast<long>(total.get_si());
}

}  // namespace schub
