#include "schub/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace schub {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation word");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest_element(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text, bool zero_indexed) {
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string tok(text.substr(pos, next - pos));
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad permutation entry");
      word.push_back(v);
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad permutation digit");
      word.push_back(c - '0');
    }
  }
  if (zero_indexed)
    for (int& v : word) ++v;
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < n(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (word_[i] > word_[j]) ++count;
  return count;
}

Permutation Permutation::swap_positions(int i, int j) const {
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  if (n() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < n(); ++i) {
      if (i) out += ',';
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

std::vector<std::vector<int>> bruhat_rank_table(const Permutation& w) {
  const int n = w.n();
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = n; i >= 1; --i)
    for (int j = 1; j <= n; ++j)
      r[i][j] = r[i][j - 1] + (w(j) >= i ? 1 : 0);
  return r;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("rank mismatch");
  const auto ru = bruhat_rank_table(u);
  const auto rw = bruhat_rank_table(w);
  for (int i = 1; i <= u.n(); ++i)
    for (int j = 1; j <= u.n(); ++j)
      if (ru[i][j] > rw[i][j]) return false;
  return true;
}

std::vector<Permutation> bruhat_covers(const Permutation& w) {
  std::vector<Permutation> out;
  const int len = w.length();
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j) {
      if (w(i) <= w(j)) continue;
      Permutation u = w.swap_positions(i, j);
      if (u.length() == len - 1) out.push_back(std::move(u));
    }
  return out;
}

std::vector<Permutation> interval_elements(const BruhatInterval& iv) {
  if (!bruhat_leq(iv.bottom, iv.top))
    throw std::invalid_argument("bottom not below top in Bruhat order");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier{iv.top};
  seen.insert(iv.top);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& z : frontier)
      for (auto& c : bruhat_covers(z)) {
        if (seen.count(c) || !bruhat_leq(iv.bottom, c)) continue;
        seen.insert(c);
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace schub
