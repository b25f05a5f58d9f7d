#pragma once

// Toy-scale dense verification of the Schur transform: the recursive
// construction from Clebsch-Gordan unitaries, Schur-Weyl block-
// diagonalization against Young's orthogonal form, the diagonal action of
// Jucys-Murphy elements, and unbiasedness of the partial-trace functional.
// Hard caps (n <= 4, d <= 3) keep everything a few hundred dimensions.

#include "partitions.hpp"
#include "tableaux.hpp"
#include "yor.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace keyl {

using CMat = Eigen::MatrixXcd;

// Basis layout of the Schur side of (C^d)^{x n}: partitions in enumeration
// order, then SYT-major / SSYT-minor within each irrep block.
struct SchurIrrepBlock {
    Partition shape;
    std::vector<StandardTableau> syts;
    std::vector<Ssyt> ssyts;
    int offset = 0;

    int index(int s_idx, int t_idx) const {
        return offset + s_idx * static_cast<int>(ssyts.size()) + t_idx;
    }
};

struct SchurIndex {
    int n = 0, d = 0, total = 0;
    std::vector<SchurIrrepBlock> irreps;
};

SchurIndex schur_index(int n, int d);

constexpr int kDenseMaxN = 4;
constexpr int kDenseMaxD = 3;

// U_SW^(n) as a dense matrix from the computational to the Schur basis,
// built recursively from the Clebsch-Gordan insertion branches. Throws
// beyond the size caps.
CMat build_schur_transform(int n, int d);

CMat kron(const CMat& a, const CMat& b);

// P(pi): the content of register j moves to register pi(j) (one-line
// notation, 1-based).
CMat perm_op(int n, int d, const std::vector<int>& perm);

// U^{x n}.
CMat power_op(int n, const CMat& u);

// Seeded Haar-random unitary: Gram-Schmidt of a complex Gaussian matrix
// whose entries come from an explicit Box-Muller on raw mt19937_64 draws.
CMat haar_unitary(int d, std::mt19937_64& rng);

// Seeded random density matrix G G^dagger / tr.
CMat random_density(int d, std::mt19937_64& rng);

double unitarity_residual(int n, int d);

// max over samples of || U_SW P(pi) Q(U) U_SW^dagger - sum_lambda
// |l><l| (x) kappa_lambda(pi) (x) nu_lambda(U) ||_F, with kappa from
// Young's orthogonal form and nu extracted from the pi = id conjugation.
double schur_weyl_residual(int n, int d, int n_perms, int n_unitaries, std::uint64_t seed);

// nu_lambda(U) recovered through a transposition block agrees with the one
// recovered at pi = id.
double rep_consistency_residual(int n, int d, std::uint64_t seed);

// rho^{x n} conjugates to identity-on-the-permutation-register blocks.
double state_block_residual(int n, int d, int n_states, std::uint64_t seed);

// All X_k = sum_{j<k} (j k) act diagonally with entries cont_S(k).
double jm_residual(int n, int d);

// || tr_{[n]}((1/n) X_{n+1} rho^{x n} (x) I) - rho ||_F over random states
// (and rho = I/d).
double unbiased_trace_residual(int n, int d, int n_states, std::uint64_t seed);

} // namespace keyl
