#ifndef SCHUB_PERM_HPP
#define SCHUB_PERM_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schub {

/// A permutation of S_n in one-line notation, 1-indexed: w(i) = word[i-1].
/// Immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w0 with w0(i) = n+1-i.
  static Permutation longest_element(int n);
  /// Accepts contiguous digits ("35142") or comma-separated ("5,8,9,7,1,6,2,3,4").
  /// With zero_indexed, entries 0..n-1 are shifted up by one on input.
  static Permutation parse(std::string_view text, bool zero_indexed = false);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// Coxeter length = inversion count.
  int length() const;
  /// Right multiplication by the transposition (i <-> j) of positions.
  Permutation swap_positions(int i, int j) const;

  /// Digits for n <= 9, comma-separated otherwise.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

struct BruhatInterval {
  Permutation bottom;
  Permutation top;
};

/// r^w_{ij} = #{k : w(k) >= i and k <= j}, 1-indexed (i = row from top).
std::vector<std::vector<int>> bruhat_rank_table(const Permutation& w);

/// Bruhat order via entrywise rank-matrix dominance. Throws on rank mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// All u = w (i <-> j) with length(u) = length(w) - 1 (downward covers).
std::vector<Permutation> bruhat_covers(const Permutation& w);

/// All z with bottom <= z <= top, by downward BFS from top filtered by
/// bruhat_leq. Sorted lexicographically.
std::vector<Permutation> interval_elements(const BruhatInterval& iv);

/// Every element of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schub

#endif
