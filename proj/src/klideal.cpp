#include "schub/klideal.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "schub/groebner.hpp"

namespace schub {

namespace {

std::string var_name(int n, int i, int j) {
  if (n <= 9) return "z" + std::to_string(i) + std::to_string(j);
  return "z" + std::to_string(i) + "_" + std::to_string(j);
}

GenericMatrix build_matrix(int n, const std::optional<Permutation>& x) {
  GenericMatrix gm;
  gm.n = n;
  gm.x = x;
  // 0 = free, 1 = one, -1 = zero
  std::vector<std::vector<int>> kind(n + 1, std::vector<int>(n + 1, 0));
  if (x) {
    for (int c = 1; c <= n; ++c) {
      const int r = (*x)(c);
      kind[r][c] = 1;
      for (int b = c + 1; b <= n; ++b) kind[r][b] = -1;  // right of the 1
      for (int a = 1; a < r; ++a) kind[a][c] = -1;       // above the 1
    }
  }
  // Free cells in ascending label order z_{n-a+1,b}: a descending, b ascending.
  std::vector<std::string> names;
  gm.var_index.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int a = n; a >= 1; --a)
    for (int b = 1; b <= n; ++b)
      if (kind[a][b] == 0) {
        gm.var_index[a][b] = static_cast<int>(names.size());
        names.push_back(var_name(n, n - a + 1, b));
      }
  gm.ring = std::make_shared<VariableRing>(std::move(names));
  gm.entry.assign(n + 1, std::vector<Polynomial>(n + 1, Polynomial::zero(gm.ring)));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (kind[a][b] == 1)
        gm.entry[a][b] = Polynomial::constant(gm.ring, 1);
      else if (kind[a][b] == 0)
        gm.entry[a][b] = Polynomial::variable(gm.ring, gm.var_index[a][b]);
    }
  return gm;
}

void subsets(int lo, int hi, int k, std::vector<int>& cur,
             const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 0) {
    fn(cur);
    return;
  }
  for (int v = lo; v <= hi - k + 1; ++v) {
    cur.push_back(v);
    subsets(v + 1, hi, k - 1, cur, fn);
    cur.pop_back();
  }
}

KLIdealSpec minors_at(const GenericMatrix& gm, const Permutation& w,
                      bool all_positions) {
  const int n = w.n();
  const RankMatrix R = rank_matrix(w);
  std::vector<std::pair<int, int>> positions;
  if (all_positions) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) positions.emplace_back(i, j);
  } else {
    const auto ess = essential_set(w);
    positions.assign(ess.begin(), ess.end());
  }
  KLIdealSpec spec;
  spec.w = w;
  spec.ring = gm.ring;
  std::vector<Polynomial> gens;
  std::set<std::vector<std::pair<Monomial, Rational>>> seen;
  for (const auto& [i, j] : positions) {
    const int k = 1 + R(i, j);
    if (k > std::min(n - i + 1, j)) continue;
    std::vector<int> rows, cols;
    subsets(i, n, k, rows, [&](const std::vector<int>& rs) {
      subsets(1, j, k, cols, [&](const std::vector<int>& cs) {
        std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>());
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub[a].push_back(gm.entry[rs[a]][cs[b]]);
        Polynomial d = determinant(sub);
        if (d.is_zero()) return;
        if (d.total_degree() == 0)
          throw std::logic_error("unit Kazhdan-Lusztig ideal");
        if (d.terms()[0].second < 0) d = -d;
        if (seen.insert(d.terms()).second) gens.push_back(std::move(d));
      });
    });
  }
  spec.generators = std::move(gens);
  return spec;
}

}  // namespace

RankMatrix rank_matrix(const Permutation& w) {
  RankMatrix R;
  R.n = w.n();
  R.r = bruhat_rank_table(w);
  return R;
}

std::set<std::pair<int, int>> diagram(const Permutation& w) {
  const int n = w.n();
  const Permutation winv = w.inverse();
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (winv(i) > j && w(j) < i) out.insert({i, j});
  return out;
}

std::set<std::pair<int, int>> essential_set(const Permutation& w) {
  const auto D = diagram(w);
  std::set<std::pair<int, int>> out;
  for (const auto& [i, j] : D)
    if (!D.contains({i - 1, j}) && !D.contains({i, j + 1})) out.insert({i, j});
  return out;
}

GenericMatrix generic_matrix(const Permutation& x) {
  return build_matrix(x.n(), x);
}

GenericMatrix fully_generic_matrix(int n) { return build_matrix(n, std::nullopt); }

KLIdealSpec kl_ideal(const Permutation& x, const Permutation& w,
                     bool all_positions) {
  if (!bruhat_leq(x, w)) throw std::invalid_argument("x not below w");
  KLIdealSpec spec = minors_at(generic_matrix(x), w, all_positions);
  spec.x = x;
  return spec;
}

KLIdealSpec matrix_schubert_ideal(const Permutation& w) {
  KLIdealSpec spec = minors_at(fully_generic_matrix(w.n()), w, false);
  spec.x = Permutation::identity(w.n());
  return spec;
}

namespace {

Grading grading_for(const Permutation& x, bool coarse) {
  const GenericMatrix gm = generic_matrix(x);
  const int n = x.n();
  const Permutation xinv = x.inverse();
  Grading g;
  g.mode = coarse ? Grading::Mode::Coarse : Grading::Mode::Multi;
  g.degree.resize(gm.ring->size());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const int t = gm.var_index[a][b];
      if (t < 0) continue;
      const int i = xinv(a);  // column of the 1 in grid row a
      if (coarse) {
        g.degree[t] = {i - b};
      } else {
        std::vector<int> d(n, 0);
        d[i - 1] += 1;
        d[b - 1] -= 1;
        g.degree[t] = std::move(d);
      }
    }
  return g;
}

}  // namespace

Grading kl_multigrading(const Permutation& x) { return grading_for(x, false); }

Grading kl_coarse_grading(const Permutation& x) { return grading_for(x, true); }

bool verify_interval_isomorphism(const Permutation& u, const Permutation& v,
                                 const Permutation& w, const Embedding& phi) {
  if (!is_interval_embedding(u, v, w, phi))
    throw std::invalid_argument("not an interval pattern embedding");
  const Permutation x = phi_image(u, v, w, phi);
  const int n = w.n(), m = v.n();

  const KLIdealSpec big = kl_ideal(x, w);
  const GenericMatrix big_gm = generic_matrix(x);
  const TermOrder ord{TermOrder::Kind::GradedDiagonal};
  const GroebnerBasis G = buchberger(big.generators, ord);

  // Non-embedded columns and the rows of their 1s in Z^{(x)}.
  std::vector<bool> col_cut(n + 1, false), row_cut(n + 1, false);
  std::vector<bool> embedded(n + 1, false);
  for (int p : phi.indices) embedded[p] = true;
  for (int j = 1; j <= n; ++j)
    if (!embedded[j]) {
      col_cut[j] = true;
      row_cut[x(j)] = true;
    }

  // Every free variable in a cut row or column must be forced to zero,
  // i.e. appear on its own in the reduced basis.
  std::vector<bool> forced(big.ring->size(), false);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const int t = big_gm.var_index[a][b];
      if (t < 0 || (!row_cut[a] && !col_cut[b])) continue;
      forced[t] = true;
      const Polynomial var = Polynomial::variable(big.ring, t);
      if (std::find(G.generators.begin(), G.generators.end(), var) ==
          G.generators.end())
        return false;
    }

  // Delete the cut rows/columns: surviving display cell (A,B) of the big
  // matrix lands at (u(c), b) in the small one, where phi_b = B and
  // phi_c carries the 1 of row A.
  const KLIdealSpec small = kl_ideal(u, v);
  const GenericMatrix small_gm = generic_matrix(u);
  const Permutation xinv = x.inverse();
  std::vector<int> pos_in_phi(n + 1, 0);
  for (int b = 1; b <= m; ++b) pos_in_phi[phi.indices[b - 1]] = b;
  std::vector<int> var_map(big.ring->size(), 0);
  for (int A = 1; A <= n; ++A)
    for (int B = 1; B <= n; ++B) {
      const int t = big_gm.var_index[A][B];
      if (t < 0 || forced[t]) continue;
      const int b = pos_in_phi[B];
      const int c = pos_in_phi[xinv(A)];
      if (b == 0 || c == 0) return false;
      const int target = small_gm.var_index[u(c)][b];
      if (target < 0) return false;
      var_map[t] = target;
    }

  std::vector<Polynomial> mapped;
  for (const Polynomial& g : G.generators) {
    Polynomial h = g;
    for (int t = 0; t < big.ring->size(); ++t)
      if (forced[t]) h = h.substitute(t, 0);
    if (h.is_zero()) continue;
    mapped.push_back(h.rename(small.ring, var_map));
  }
  return ideal_equal(mapped, small.generators, ord);
}

}  // namespace schub
