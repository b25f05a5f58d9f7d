#pragma once

// Dimensions, Schur polynomials, and the weak Schur sampling distribution
// Pr[lambda] = dim_sp(lambda) * s_lambda(alpha), all in exact rationals.

#include "partitions.hpp"

#include <map>
#include <vector>

namespace keyl {

// Dimension of the symmetric-group irrep: n! / prod(hooks).
Int dim_sp(const Partition& p);

// Dimension of the GL(d) irrep, Weyl form:
//   prod_{1<=i<j<=d} (lambda_i - lambda_j + j - i) / (j - i).
// Returns 0 when rows are not weakly decreasing (invalid shape), which is
// exactly the convention the dimension-ratio symbols rely on.
Int dim_weyl_rows(const std::vector<long>& rows);
Int dim_weyl(const Partition& p, int d); // p padded/truncated to length d; 0 if length(p) > d

// Hook-content formula: prod_cells (d + j - i) / hook(i,j).
Int dim_weyl_hook_content(const Partition& p, int d);

// Schur polynomial s_lambda(alpha_1..alpha_d) as the SSYT weight sum,
// computed by the branching recursion over horizontal strips.
Rat schur_poly(const Partition& p, const std::vector<Rat>& alpha);

// Weak Schur sampling distribution over partitions of n with <= d rows.
struct WssEntry {
    Partition shape;
    Rat prob;
};
std::vector<WssEntry> wss_distribution(long n, const std::vector<Rat>& alpha);

// p2*(lambda) = sum_i lambda_i^2 - lambda_i (2i - 1); the unbiased estimator
// of n(n-1) p2(alpha) under weak Schur sampling.
long p2_star(const Partition& p);

// Exact expectations under the weak Schur sampling distribution.
Rat expect_p2_star(long n, const std::vector<Rat>& alpha);
Rat expect_length(long n, const std::vector<Rat>& alpha);
Rat expect_length_sq(long n, const std::vector<Rat>& alpha);

// Var[ |f(lambda)/n|^2 estimate ] = E[ sum_i (f_i/n)^2 ] - p2(alpha), for a
// rule assigning each shape a legal spectrum f(lambda).
using SpectrumRule = std::vector<Rat> (*)(const Partition&);
Rat estimator_variance(long n, const std::vector<Rat>& alpha, SpectrumRule rule);

Rat p2_of(const std::vector<Rat>& alpha);

} // namespace keyl
