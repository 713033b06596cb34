#ifndef SCHUB_KLIDEAL_HPP
#define SCHUB_KLIDEAL_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "schub/pattern.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/// r_{ij} = #{k <= j : w(k) >= i}, rows indexed from the top, 1-based.
struct RankMatrix {
  int n = 0;
  std::vector<std::vector<int>> r;  // (n+1) x (n+1), index from 1
  int operator()(int i, int j) const { return r[i][j]; }
};

RankMatrix rank_matrix(const Permutation& w);

/// Positions (i,j), rows from the top, not struck by any hook drawn right
/// and above a 1 of the permutation matrix (1s sit at (w(k), k)).
/// Cardinality is C(n,2) - l(w) under this orientation.
std::set<std::pair<int, int>> diagram(const Permutation& w);
/// Northeast-most diagram boxes: no diagram box at (i-1,j) or (i,j+1).
std::set<std::pair<int, int>> essential_set(const Permutation& w);

/// The patterned matrix Z^{(x)}: a 1 at (x(i), i) for each column i, zeros
/// to the right of and above every 1, free variables elsewhere. The cell at
/// grid row a (from the top), column b is labeled z_{n-a+1,b}. When x is
/// absent every cell is a free variable (fully generic matrix).
struct GenericMatrix {
  int n = 0;
  std::optional<Permutation> x;
  RingPtr ring;  // free variables, ascending label order z11, z12, ..., z21, ...
  std::vector<std::vector<Polynomial>> entry;  // entry[a][b], 1-based
  /// Ring index of the variable at grid cell (a,b), or -1 for a 0/1 cell.
  std::vector<std::vector<int>> var_index;
};

GenericMatrix generic_matrix(const Permutation& x);
GenericMatrix fully_generic_matrix(int n);

struct KLIdealSpec {
  Permutation x, w;
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// I_{x,w}: all (1 + r^w_{ij})-minors of the southwest submatrices of Z^{(x)}
/// (rows i..n, columns 1..j), taken at the essential positions of w (or at
/// every position with all_positions). Identically zero minors are dropped;
/// rank conditions exceeding the submatrix size are skipped.
/// Throws if x is not below w, or if a minor degenerates to a nonzero
/// constant (which certifies the same).
KLIdealSpec kl_ideal(const Permutation& x, const Permutation& w,
                     bool all_positions = false);

/// I_w: the same minors on the fully generic n x n matrix.
KLIdealSpec matrix_schubert_ideal(const Permutation& w);

/// Multigrading making I_{x,w} homogeneous: z_{n-x(i)+1, j} has multidegree
/// e_i - e_j in Z^n.
Grading kl_multigrading(const Permutation& x);
/// The coarse version: z_{n-x(i)+1, j} has degree i - j, positive on all
/// free variables of Z^{(x)}.
Grading kl_coarse_grading(const Permutation& x);

/// Check the local isomorphism N_{u,v} = N_{Phi(u),w} explicitly: the
/// variables in the non-embedded rows/columns must appear in the reduced
/// Groebner basis of I_{Phi(u),w}; setting them to zero and renaming the
/// survivors along the row/column deletion must reproduce I_{u,v}.
/// Throws unless phi is an interval pattern embedding of [u,v] into w.
bool verify_interval_isomorphism(const Permutation& u, const Permutation& v,
                                 const Permutation& w, const Embedding& phi);

}  // namespace schub

#endif
