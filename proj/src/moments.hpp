#pragma once

// Verification engine for the first- and second-moment identities behind
// the debiased Keyl estimator: first-moment diagonal identity, partial sums
// of two-step coefficients, the diagonal-expression and boundary identities,
// the main second-moment lemma on SWAP blocks, the decomposition of the
// correlation weights, block equalities, complement coefficients, and the
// exact estimator-variance functionals.

#include "clebsch_gordan.hpp"
#include "partitions.hpp"
#include "schur_stats.hpp"
#include "yor.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace keyl {

struct CheckFailure {
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    long checked = 0;
    std::vector<CheckFailure> failures;

    bool pass() const { return failures.empty(); }
    void expect(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs);
    void expect_eq(const Rat& lhs, const Rat& rhs, const std::string& where);
    void merge(const Report& o);
    std::string summary() const;
};

// Spectra as rational vectors of length d.
std::vector<Rat> to_rat_spectrum(const SignedShape& s);
std::vector<Rat> donate_spectrum(const Partition& p);
std::vector<Rat> staircase_spectrum(const Partition& p);
std::vector<Rat> staircase_r_spectrum(const Partition& p, int r);

// Seeded rational spectra that are legal for p by construction (each block
// keeps its donate block sum; entries are jittered around the block mean).
std::vector<std::vector<Rat>> random_legal_spectra(const Partition& p, int count,
                                                   std::uint64_t seed);

// sum_k f_k |c^lambda_{k->i}|^2, exact.
Rat first_moment_sum(const Partition& p, int d, const std::vector<Rat>& f, int i);

// Per-(lambda, {i,j}) second-moment block over the span of S_ij and S_ji.
// Entries carry the dim(V_lambda)/dim(V_{lambda_ij}) ratio and the 1/n^2
// normalization; weights are donate(lambda)_k * donate(lambda)_l for the
// averaged matrix and donate(lambda)_{max(k,l)} for the correlation matrix.
struct MomentBlock {
    bool valid_ij = false, valid_ji = false;
    Rat diag_ij = 0, diag_ji = 0; // exact
    Real off = 0;                 // only meaningful when both orders valid
    int size() const { return (valid_ij && valid_ji) ? 2 : 1; }
};
MomentBlock moment_block(const Partition& p, int d, int i, int j, bool corr);

// Multipliers m^lambda_j of the projector decomposition
//   sum_{k,l} donate(lambda)_{max(k,l)} |k><k| (x) |l><l|
//     = sum_j m_j Pi_{<=j} (x) Pi_{<=j} - length(lambda) I (x) I;
// nonzero only at the last index of each block.
std::vector<long> mcorr_multipliers(const Partition& p);

// Each verifier sweeps all partitions of m <= n (main lemma: 1 <= m <= n)
// with ambient length d and records one failure per violated identity.
Report verify_first_moment(long n, int d, std::uint64_t seed, int threads);
Report verify_partial_sums(long n, int d, int threads);
Report verify_diagonal_expression(long n, int d, int threads);
Report verify_main_lemma(long n, int d, int threads);
Report verify_mcorr_decomposition(long n, int d, int threads);
Report verify_block_equalities(long n, int d, int threads);
Report verify_complement_cg(long n, int d, int threads);

// Exact variance of the spectrum estimate under weak Schur sampling for an
// arbitrary per-shape spectrum rule.
Rat variance_for_rule(long n, const std::vector<Rat>& alpha,
                      const std::function<std::vector<Rat>(const Partition&)>& rule);

// Var(donate) <= Var(f) for staircase, pinned-rank and random legal rules,
// and Var(donate) <= 2d/n + d^2 E[length(lambda)]/n^2.
Report verify_variance(long n, int d, const std::vector<Rat>& alpha, std::uint64_t seed);

} // namespace keyl
