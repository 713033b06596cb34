#include "schub/pattern.hpp"

#include <algorithm>
#include <set>

namespace schub {

namespace {

void embed_search(const Permutation& v, const Permutation& w, int k,
                  std::vector<int>& picked, std::vector<Embedding>& out) {
  const int m = v.n(), n = w.n();
  if (k == m) {
    out.push_back(Embedding{picked});
    return;
  }
  int start = k == 0 ? 1 : picked.back() + 1;
  for (int pos = start; pos <= n - (m - k - 1); ++pos) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      ok = (w(picked[a]) < w(pos)) == (v(a + 1) < v(k + 1));
    if (!ok) continue;
    picked.push_back(pos);
    embed_search(v, w, k + 1, picked, out);
    picked.pop_back();
  }
}

/// Descending segment j, j-1, ..., i; empty when j < i.
void push_segment(std::vector<int>& word, int j, int i) {
  for (int k = j; k >= i; --k) word.push_back(k);
}

IntervalPattern make_pattern(std::vector<int> bottom, std::vector<int> top) {
  IntervalPattern pat{{Permutation(std::move(bottom)), Permutation(std::move(top))}};
  if (!bruhat_leq(pat.interval.bottom, pat.interval.top))
    throw std::logic_error("generator family produced a non-interval");
  return pat;
}

// [ (a+1)a...1 (a+b+2)...(a+2),  (a+b+2)(a+1)a...2 (a+b+1)...(a+2) 1 ]
IntervalPattern family_one(int a, int b) {
  std::vector<int> u, v;
  push_segment(u, a + 1, 1);
  push_segment(u, a + b + 2, a + 2);
  v.push_back(a + b + 2);
  push_segment(v, a + 1, 2);
  push_segment(v, a + b + 1, a + 2);
  v.push_back(1);
  return make_pattern(std::move(u), std::move(v));
}

// [ (a+1)...1 (a+3)(a+2) (a+b+4)...(a+4),
//   (a+3)(a+1)...2 (a+b+4) 1 (a+b+3)...(a+4) (a+2) ]
IntervalPattern family_two(int a, int b) {
  std::vector<int> u, v;
  push_segment(u, a + 1, 1);
  u.push_back(a + 3);
  u.push_back(a + 2);
  push_segment(u, a + b + 4, a + 4);
  v.push_back(a + 3);
  push_segment(v, a + 1, 2);
  v.push_back(a + b + 4);
  v.push_back(1);
  push_segment(v, a + b + 3, a + 4);
  v.push_back(a + 2);
  return make_pattern(std::move(u), std::move(v));
}

// [ 1 (a+3)...2 (a+4),  (a+3)(a+4)(a+2)...3 1 2 ]
IntervalPattern family_three(int a) {
  std::vector<int> u, v;
  u.push_back(1);
  push_segment(u, a + 3, 2);
  u.push_back(a + 4);
  v.push_back(a + 3);
  v.push_back(a + 4);
  push_segment(v, a + 2, 3);
  v.push_back(1);
  v.push_back(2);
  return make_pattern(std::move(u), std::move(v));
}

}  // namespace

std::vector<Embedding> classical_embeddings(const Permutation& v,
                                            const Permutation& w) {
  if (v.n() > w.n()) throw std::invalid_argument("pattern larger than target");
  std::vector<Embedding> out;
  std::vector<int> picked;
  embed_search(v, w, 0, picked, out);
  return out;
}

Permutation phi_image(const Permutation& u, const Permutation& v,
                      const Permutation& w, const Embedding& phi) {
  const int m = v.n();
  if (u.n() != m || static_cast<int>(phi.indices.size()) != m)
    throw std::invalid_argument("pattern rank mismatch");
  // Check phi classically embeds v into w.
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if ((w(phi.indices[a - 1]) < w(phi.indices[b - 1])) != (v(a) < v(b)))
        throw std::invalid_argument("phi is not an embedding of v into w");
  const Permutation vinv_u = [&] {
    const Permutation vinv = v.inverse();
    std::vector<int> comp(m);
    for (int j = 1; j <= m; ++j) comp[j - 1] = vinv(u(j));
    return Permutation(std::move(comp));
  }();
  std::vector<int> word = w.word();
  for (int j = 1; j <= m; ++j)
    word[phi.indices[j - 1] - 1] = w(phi.indices[vinv_u(j) - 1]);
  return Permutation(std::move(word));
}

bool is_interval_embedding(const Permutation& u, const Permutation& v,
                           const Permutation& w, const Embedding& phi) {
  if (!bruhat_leq(u, v)) throw std::invalid_argument("u not below v");
  const Permutation x = phi_image(u, v, w, phi);
  return v.length() - u.length() == w.length() - x.length();
}

std::vector<std::pair<Embedding, Permutation>> interval_embeddings(
    const IntervalPattern& pat, const Permutation& w) {
  std::vector<std::pair<Embedding, Permutation>> out;
  const auto& u = pat.interval.bottom;
  const auto& v = pat.interval.top;
  if (v.n() > w.n()) return out;
  for (const auto& phi : classical_embeddings(v, w)) {
    Permutation x = phi_image(u, v, w, phi);
    if (v.length() - u.length() == w.length() - x.length())
      out.emplace_back(phi, std::move(x));
  }
  return out;
}

bool interval_avoids(const Permutation& w, const IntervalPattern& pat) {
  return interval_embeddings(pat, w).empty();
}

std::vector<Permutation> locus_max_points(const Permutation& w,
                                          const PatternIdealGenerators& gens) {
  std::set<Permutation> points;
  for (const auto& pat : gens.generators)
    for (auto& [phi, x] : interval_embeddings(pat, w)) points.insert(x);
  // Keep Bruhat-maximal elements only.
  std::vector<Permutation> out;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& q : points)
      if (p != q && bruhat_leq(p, q)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(p);
  }
  return out;
}

bool locus_contains(const Permutation& x, const Permutation& w,
                    const PatternIdealGenerators& gens) {
  if (!bruhat_leq(x, w)) throw std::invalid_argument("x not below w");
  for (const auto& p : locus_max_points(w, gens))
    if (bruhat_leq(x, p)) return true;
  return false;
}

PatternIdealGenerators singular_generators(int n) {
  PatternIdealGenerators out{"singular", {}, false};
  for (int a = 1; a + 3 <= n; ++a)
    for (int b = 1; a + b + 2 <= n; ++b) out.generators.push_back(family_one(a, b));
  for (int a = 0; a + 4 <= n; ++a)
    for (int b = 0; a + b + 4 <= n; ++b) out.generators.push_back(family_two(a, b));
  // a starts at 1: [14325, 45312] is needed (45312 is singular but contains
  // no other generator), even though one source list starts this family at 2.
  for (int a = 1; a + 4 <= n; ++a) out.generators.push_back(family_three(a));
  return out;
}

PatternIdealGenerators gorenstein_generators(int n) {
  PatternIdealGenerators out{"gorenstein", {}, false};
  for (int a = 1; a + 3 <= n; ++a)
    for (int b = 1; a + b + 2 <= n; ++b)
      if (a != b) out.generators.push_back(family_one(a, b));
  for (int a = 0; a + 4 <= n; ++a)
    for (int b = 0; a + b + 4 <= n; ++b)
      if (a > 0 || b > 0) out.generators.push_back(family_two(a, b));
  return out;
}

PatternIdealGenerators non_gorenstein_locus_generators(int n) {
  PatternIdealGenerators out = gorenstein_generators(n);
  out.name = "non-gorenstein-locus";
  out.conjectural = n > 6;
  return out;
}

PatternIdealGenerators factorial_generators(int n) {
  PatternIdealGenerators out{"factorial", {}, false};
  if (n >= 4) {
    out.generators.push_back(
        make_pattern({4, 2, 3, 1}, {4, 2, 3, 1}));
    out.generators.push_back(
        make_pattern({3, 1, 4, 2}, {3, 4, 1, 2}));
  }
  return out;
}

}  // namespace schub
