#pragma once

// Young's orthogonal form of the symmetric group on SYT bases: adjacent
// transposition matrices, arbitrary permutation matrices, Jucys-Murphy
// eigenvalues, and the 2x2 SWAP blocks used by the second-moment analysis.

#include "partitions.hpp"
#include "sqrt_rational.hpp"
#include "tableaux.hpp"

#include <vector>

namespace keyl {

// Dense square matrix in 50-digit floats over the enumerate_syt(p) basis.
struct YorMatrix {
    int dim = 0;
    std::vector<Real> a; // row-major

    Real& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const Real& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

    static YorMatrix identity(int dim);
    YorMatrix operator*(const YorMatrix& o) const;
    YorMatrix transpose() const;
    Real max_abs_diff(const YorMatrix& o) const;
};

// Exact description of how the adjacent transposition (i, i+1) acts on one
// SYT: either a pure sign, or a 2x2 mix with the partner tableau.
struct AdjacentAction {
    SqrtRat diag;        // coefficient on |S> itself
    SqrtRat off;         // coefficient on |S'> (zero when no partner)
    int partner = -1;    // index of S' in enumerate_syt order, -1 if none
};

// Action of (i, i+1) on each SYT of shape p, in enumerate_syt order.
std::vector<AdjacentAction> adjacent_action(const Partition& p, int i);

YorMatrix transposition_matrix(const Partition& p, int i); // (i, i+1)

// One-line permutation: perm[t-1] is the image of t.
bool is_permutation(const std::vector<int>& perm);
YorMatrix perm_matrix(const Partition& p, const std::vector<int>& perm);

// Eigenvalues of the k-th Jucys-Murphy element: cont_S(k) per SYT.
std::vector<long> jucys_murphy(const Partition& p, int k);

struct SwapBlock {
    enum Kind { horizontal, vertical, swappable } kind;
    long delta = 0;      // Delta_{ji}
    // For swappable blocks: rows [[1/delta, sqrt(1-1/delta^2)],
    //                             [sqrt(1-1/delta^2), -1/delta]].
    // For horizontal: the 1x1 value +1; vertical: -1.
    Rat entry(int r, int c) const;      // exact rational part (diagonal)
    SqrtRat entry_sqrt(int r, int c) const; // full entries as sign*sqrt
    int size() const { return kind == swappable ? 2 : 1; }
};

// The SWAP block attached to adding boxes at rows i and j of p. Throws when
// neither insertion order yields a valid pair of diagrams.
SwapBlock swap_block(const Partition& p, int i, int j);

} // namespace keyl
