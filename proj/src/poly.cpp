#include "schub/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

VariableRing::VariableRing(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate variable name " + names_[i]);
}

int VariableRing::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    deg_ += e;
  }
}

Monomial Monomial::var(int nvars, int index, int exp) {
  std::vector<int> e(nvars, 0);
  e[index] = exp;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  if (deg_ > m.deg_) return false;
  for (int i = 0; i < nvars(); ++i)
    if (exp_[i] > m.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i) e[i] += m.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& m) const {
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i) {
    e[i] -= m.exp_[i];
    if (e[i] < 0) throw std::invalid_argument("inexact monomial division");
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exp_);
  for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exp_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exp_);
  for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(e[i], b.exp_[i]);
  return Monomial(std::move(e));
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  auto grevlex = [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    // Reverse lexicographic tie-break: at the last differing variable the
    // monomial with the larger exponent is the smaller one.
    for (int i = x.nvars() - 1; i >= 0; --i)
      if (x.exponent(i) != y.exponent(i)) return x.exponent(i) > y.exponent(i);
    return false;
  };
  switch (kind) {
    case Kind::GradedDiagonal:
      return grevlex(a, b);
    case Kind::EliminateFirst:
      if (a.exponent(0) != b.exponent(0)) return a.exponent(0) < b.exponent(0);
      return grevlex(a, b);
    case Kind::PureLex:
      for (int i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
      return false;
  }
  return false;
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial f(std::move(ring));
  if (c != 0) f.terms_.emplace_back(Monomial::one(f.ring_->size()), std::move(c));
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Polynomial f(std::move(ring));
  f.terms_.emplace_back(Monomial::var(f.ring_->size(), index), Rational(1));
  return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
  Polynomial f(std::move(ring));
  if (c != 0) f.terms_.emplace_back(std::move(m), std::move(c));
  return f;
}

Polynomial unsafe_from_terms(RingPtr ring,
                             std::vector<std::pair<Monomial, Rational>> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() && b != g.terms_.end()) {
    if (a->first == b->first) {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a, ++b;
    } else if (a->first > b->first) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, g.terms_.end());
  return unsafe_from_terms(ring_ ? ring_ : g.ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_);
  for (auto& [m, c] : out) c = -c;
  return unsafe_from_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial::zero(ring_);
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [tm, tc] : terms_) out.emplace_back(tm * m, tc * c);
  return unsafe_from_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (ring_) return times_term(Monomial::one(ring_->size()), c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (const auto& [am, ac] : terms_)
    for (const auto& [bm, bc] : g.terms_) {
      Rational& slot = acc[am * bm];
      slot += ac * bc;
    }
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return unsafe_from_terms(ring_ ? ring_ : g.ring_, std::move(out));
}

const std::pair<Monomial, Rational>& Polynomial::leading_term(
    const TermOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  const std::pair<Monomial, Rational>* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.less(best->first, t.first)) best = &t;
  return *best;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Polynomial Polynomial::substitute(int index, const Rational& value) const {
  Polynomial out = Polynomial::zero(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(index);
    std::vector<int> exp(m.nvars());
    for (int i = 0; i < m.nvars(); ++i) exp[i] = i == index ? 0 : m.exponent(i);
    Rational scaled = c;
    for (int k = 0; k < e; ++k) scaled *= value;
    out += Polynomial::term(ring_, Monomial(std::move(exp)), scaled);
  }
  return out;
}

Polynomial Polynomial::rename(const RingPtr& target,
                              const std::vector<int>& var_map) const {
  Polynomial out = Polynomial::zero(target);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exp(target->size(), 0);
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.exponent(i) == 0) continue;
      if (var_map[i] < 0)
        throw std::invalid_argument("variable has no image in target ring");
      exp[var_map[i]] += m.exponent(i);
    }
    out += Polynomial::term(target, Monomial(std::move(exp)), c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.exponent(i) == 0) continue;
      out += "*" + ring_->name(i);
      if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
    }
  }
  return out;
}

std::vector<int> graded_degree(const Monomial& m, const Grading& grading) {
  if (grading.mode == Grading::Mode::Standard) return {m.degree()};
  const int dim = grading.mode == Grading::Mode::Coarse
                      ? 1
                      : static_cast<int>(grading.degree.at(0).size());
  std::vector<int> d(dim, 0);
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) == 0) continue;
    const auto& dv = grading.degree.at(i);
    for (int k = 0; k < dim; ++k) d[k] += m.exponent(i) * dv[k];
  }
  return d;
}

bool is_homogeneous(const Polynomial& f, const Grading& grading) {
  if (f.is_zero()) return true;
  const auto d0 = graded_degree(f.terms()[0].first, grading);
  for (const auto& [m, c] : f.terms())
    if (graded_degree(m, grading) != d0) return false;
  return true;
}

Polynomial homogenize_t(const Polynomial& f) {
  const auto& ring = f.ring();
  if (ring->size() == 0 || ring->name(0) != "t")
    throw std::invalid_argument("ring has no reserved variable t");
  const int d = f.total_degree();
  Polynomial out = Polynomial::zero(ring);
  for (const auto& [m, c] : f.terms()) {
    if (m.exponent(0) != 0)
      throw std::invalid_argument("polynomial already involves t");
    out += Polynomial::term(ring, m * Monomial::var(ring->size(), 0, d - m.degree()), c);
  }
  return out;
}

Polynomial set_t_to_one(const Polynomial& f) { return f.substitute(0, 1); }

namespace {

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m,
                   std::vector<int> rows, std::vector<int> cols, RingPtr ring) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return Polynomial::constant(ring, 1);
  if (k == 1) return m[rows[0]][cols[0]];
  // Expand along the row or column with the most zero entries.
  int best_row = 0, best_row_zeros = -1;
  for (int a = 0; a < k; ++a) {
    int z = 0;
    for (int b = 0; b < k; ++b) z += m[rows[a]][cols[b]].is_zero();
    if (z > best_row_zeros) best_row_zeros = z, best_row = a;
  }
  int best_col = 0, best_col_zeros = -1;
  for (int b = 0; b < k; ++b) {
    int z = 0;
    for (int a = 0; a < k; ++a) z += m[rows[a]][cols[b]].is_zero();
    if (z > best_col_zeros) best_col_zeros = z, best_col = b;
  }
  const bool by_row = best_row_zeros >= best_col_zeros;
  Polynomial out = Polynomial::zero(ring);
  for (int p = 0; p < k; ++p) {
    const Polynomial& entry =
        by_row ? m[rows[best_row]][cols[p]] : m[rows[p]][cols[best_col]];
    if (entry.is_zero()) continue;
    std::vector<int> r2 = rows, c2 = cols;
    if (by_row) {
      r2.erase(r2.begin() + best_row);
      c2.erase(c2.begin() + p);
    } else {
      r2.erase(r2.begin() + p);
      c2.erase(c2.begin() + best_col);
    }
    Polynomial minor = det_rec(m, std::move(r2), std::move(c2), ring);
    Polynomial contrib = entry * minor;
    if (((by_row ? best_row : best_col) + p) % 2) contrib = -contrib;
    out += contrib;
  }
  return out;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const int k = static_cast<int>(m.size());
  RingPtr ring;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("matrix not square");
    for (const auto& e : row)
      if (e.ring()) ring = e.ring();
  }
  if (!ring) throw std::invalid_argument("matrix has no ring context");
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return det_rec(m, idx, idx, ring);
}

}  // namespace schub
