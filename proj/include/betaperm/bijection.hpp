#pragma once

#include "betaperm/beta_tree.hpp"
#include "betaperm/permutation.hpp"

#include <utility>
#include <vector>

namespace betaperm {

/// The pieces psi works with for an input written as sigma n tau.
/// Index i of `intervals`, `blocks`, `shifts` refers to the (i+1)-th
/// value interval of sigma; `below` holds the letters of tau smaller than
/// every letter of sigma.
struct PsiDecomposition {
  Word sigma;
  Word tau;
  std::vector<Word> intervals; // maximal runs of consecutive values of sigma, ascending
  Word below;                  // letters of tau below the first interval
  std::vector<Word> blocks;    // letters of tau between interval i and i+1 (or n)
  std::vector<int> shifts;     // m_i: letters right of min(block) below everything left of it
  std::vector<int> left_values;  // L, ascending
  std::vector<int> right_values; // [n-1] \ L, ascending
};

/// Whether `p` lies in the domain of psi and theta: an avoider of length at
/// least 2 whose first letter is not n and in which n precedes n-1.
bool in_psi_domain(const Permutation& p);

PsiDecomposition psi_decomposition(const Permutation& p);

/// Turns an element of the psi domain into an indecomposable avoider.
Permutation psi(const Permutation& p);
/// Inverse of psi on indecomposable avoiders whose first letter is not n.
Permutation psi_inv(const Permutation& p);

/// phi(1, p) prepends n; phi(i, p) for i > 1 inserts n before the i-th
/// left-to-right maximum and applies psi. phi(1, empty) = 1.
Permutation phi(int i, const Permutation& p);
/// Inverse of phi on indecomposable avoiders.
std::pair<int, Permutation> phi_inv(const Permutation& p);

/// The bijection from beta(1,0)-trees with n+1 nodes to avoiders of length n.
Permutation tree_to_perm(const BetaTree& t);
/// Inverse of tree_to_perm; rejects non-avoiders.
BetaTree perm_to_tree(const Permutation& p);

/// Alternative to psi: writes p = sigma tau n rho with tau n rho the
/// rightmost component and returns tau~ sigma~ n rho~, where tau~ rho~ is
/// the standardization of tau rho and sigma~ is sigma shifted up by |tau rho|.
Permutation theta(const Permutation& p);
/// phi with theta in place of psi.
Permutation phi_theta(int i, const Permutation& p);
/// tree_to_perm built from phi_theta.
Permutation tree_to_perm_theta(const BetaTree& t);

namespace detail {
/// phi without the avoider and range checks, for generators whose inputs
/// are avoiders by construction.
Permutation phi_unchecked(int i, const Permutation& p);
} // namespace detail

} // namespace betaperm
