#pragma once

// Clebsch-Gordan coefficients for V_lambda (x) C^d in the Gelfand-Tsetlin
// basis, via the product of reduced scalar factors over levels. Phases are
// fixed by the scalar-factor formulas; everything is sign * sqrt(rational).

#include "partitions.hpp"
#include "sqrt_rational.hpp"
#include "tableaux.hpp"

#include <optional>
#include <vector>

namespace keyl {

// <T' | T, k>: amplitude for the tableau T (shape in <= d rows, alphabet d)
// absorbing the letter k and yielding T'. Zero (sign 0) whenever the level
// shapes of T' do not differ from those of T in the allowed strip pattern.
SqrtRat cg_coefficient(const Ssyt& t, int k, const Ssyt& tprime, int d);

// All T' with nonzero <T'|T,k>, with their amplitudes, via the insertion
// (branching bump) algorithm. Sum of squared amplitudes is 1.
struct CgBranch {
    Ssyt tableau;
    SqrtRat amp;
};
std::vector<CgBranch> cg_insert(const Ssyt& t, int k, int d);

// One-step coefficient c^lambda_{k->i} = <T^lambda_{k->i} | T^lambda, k> by
// its closed form; agrees with cg_coefficient on the actual tableaux.
SqrtRat one_step_closed(const Partition& p, int d, int k, int i);

// Two-step amplitudes through the intermediate T^lambda_{k->i}:
//   a: ... then l lands in row j   (ordered tableau T^lambda_{kl->ij})
//   b: ... then l lands in row j giving the swapped tableau T^lambda_{kl->ji}
// Either is zero when the corresponding tableau does not exist.
SqrtRat two_step_a(const Partition& p, int d, int k, int l, int i, int j);
SqrtRat two_step_b(const Partition& p, int d, int k, int l, int i, int j);

// |c^lambda_{kl->ij}|^2 = |a|^2 + |b|^2 (exact rational).
Rat two_step_sq(const Partition& p, int d, int k, int l, int i, int j);

// D^lambda_{k->i} = dim(V^k at lambda^{<=k}+e_i) / dim(V^k at lambda^{<=k})
// for i <= k <= d, else 0; zero when the numerator shape is invalid.
Rat dim_ratio(const Partition& p, int d, int k, int i);

// D^lambda_{s->ij} = D^lambda_{s->i} * D^{lambda+e_i}_{s->j}; symmetric in
// (i, j). Zero when lambda + e_i is not a diagram.
Rat dim_ratio2(const Partition& p, int d, int s, int i, int j);

// Delta_{ji} = C_j(lambda + e_i) - C_i(lambda); never zero, equals 1 for
// i = j, positive for j < i, negative for j > i.
long delta_ji(const Partition& p, int i, int j);

// Closed form for sum_{k<=s, l<=t} |c^lambda_{kl->ij}|^2.
Rat partial_sum_closed(const Partition& p, int d, int i, int j, int s, int t);

// Brute-force partial sum over one- and two-step coefficients.
Rat partial_sum_brute(const Partition& p, int d, int i, int j, int s, int t);

// Scalar factors on restriction shapes; rows of `below` = level p-1 shape,
// rows of `at` = level p shape of the ORIGINAL tableau (before added boxes).
SqrtRat scalar_factor_e10(const std::vector<long>& below, const std::vector<long>& at, int i);
SqrtRat scalar_factor_e11(const std::vector<long>& below, const std::vector<long>& at, int i, int j);

// Dual coefficient: T has one box more than T'. Value is
// sqrt(dim(shape T') / dim(shape T)) * <T | T', k>.
SqrtRat dual_cg_coefficient(const Ssyt& t, int k, const Ssyt& tprime, int d);

} // namespace keyl
