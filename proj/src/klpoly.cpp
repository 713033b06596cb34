#include "schub/klpoly.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace schub {

namespace {

KLPolynomial trimmed(std::vector<long> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return {std::move(c)};
}

KLPolynomial shift_add(const KLPolynomial& a, const KLPolynomial& b, int k,
                       long scale) {
  // a + scale * q^k * b
  std::vector<long> c = a.coeff;
  if (c.size() < b.coeff.size() + k) c.resize(b.coeff.size() + k, 0);
  for (size_t i = 0; i < b.coeff.size(); ++i) c[i + k] += scale * b.coeff[i];
  return trimmed(std::move(c));
}

int first_right_descent(const Permutation& w) {
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) return i;
  return 0;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

KLPolynomial compute(const Permutation& x, const Permutation& w,
                     std::map<Key, KLPolynomial>& memo) {
  if (x == w) return KLPolynomial::one();
  if (x.length() >= w.length() || !bruhat_leq(x, w))
    return KLPolynomial::zero();
  const Key key{x.word(), w.word()};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const int i = first_right_descent(w);
  const Permutation v = w.swap_positions(i, i + 1);  // ws < w
  const Permutation xs = x.swap_positions(i, i + 1);
  const int c = xs.length() < x.length() ? 1 : 0;

  // P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
  //           - sum over z with zs < z, x <= z <= v of mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
  KLPolynomial p = shift_add(KLPolynomial::zero(), compute(xs, v, memo), 1 - c, 1);
  p = shift_add(p, compute(x, v, memo), c, 1);
  const auto zs_list =
      bruhat_leq(x, v) ? interval_elements({x, v}) : std::vector<Permutation>{};
  for (const Permutation& z : zs_list) {
    if (z.swap_positions(i, i + 1).length() >= z.length()) continue;
    const int gap = v.length() - z.length();
    if (gap % 2 == 0) continue;  // mu(z,v) vanishes unless the gap is odd
    const long mu = compute(z, v, memo)[(gap - 1) / 2];
    if (mu == 0) continue;
    p = shift_add(p, compute(x, z, memo), (w.length() - z.length()) / 2, -mu);
  }
  memo.emplace(key, p);
  return p;
}

}  // namespace

std::string KLPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeff[i] != 1 || i == 0) out += std::to_string(coeff[i]);
    if (i == 1) out += "q";
    if (i > 1) out += "q^" + std::to_string(i);
  }
  return out;
}

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
  if (!bruhat_leq(x, w)) throw std::invalid_argument("x not below w");
  std::map<Key, KLPolynomial> memo;
  return compute(x, w, memo);
}

}  // namespace schub
