#include "dense.hpp"

#include "clebsch_gordan.hpp"
#include "schur_stats.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace keyl {

namespace {

long power_long(int base, int exp) {
    long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

void check_caps(int n, int d) {
    if (n < 1 || n > kDenseMaxN || d < 1 || d > kDenseMaxD)
        throw std::invalid_argument("dense: supported sizes are 1 <= n <= 4, 1 <= d <= 3");
}

double cdouble(const Real& r) { return r.convert_to<double>(); }

CMat yor_to_dense(const YorMatrix& m) {
    CMat out(m.dim, m.dim);
    for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c) out(r, c) = cdouble(m.at(r, c));
    return out;
}

// Uniform double in (0, 1].
double unit_draw(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
}

std::complex<double> gaussian_draw(std::mt19937_64& rng) {
    double u1 = unit_draw(rng), u2 = unit_draw(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::uint64_t bound = static_cast<std::uint64_t>(i) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t u;
        do {
            u = rng();
        } while (u >= limit);
        std::swap(perm[i], perm[u % bound]);
    }
    return perm;
}

std::vector<int> transposition(int n, int a, int b) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::swap(perm[a - 1], perm[b - 1]);
    return perm;
}

// Block-diagonal sum_lambda kappa_lambda(pi) (x) nu_lambda with the given
// per-lambda unitary-register blocks.
CMat assemble_blocks(const SchurIndex& idx, const std::vector<CMat>& kappa,
                     const std::vector<CMat>& nu) {
    CMat out = CMat::Zero(idx.total, idx.total);
    for (size_t b = 0; b < idx.irreps.size(); ++b) {
        const SchurIrrepBlock& blk = idx.irreps[b];
        int nt = static_cast<int>(blk.ssyts.size());
        int ns = static_cast<int>(blk.syts.size());
        out.block(blk.offset, blk.offset, ns * nt, ns * nt) = kron(kappa[b], nu[b]);
    }
    return out;
}

std::vector<CMat> extract_nu(const SchurIndex& idx, const CMat& conj_id) {
    std::vector<CMat> nu;
    for (const SchurIrrepBlock& blk : idx.irreps) {
        int nt = static_cast<int>(blk.ssyts.size());
        nu.push_back(conj_id.block(blk.offset, blk.offset, nt, nt));
    }
    return nu;
}

} // namespace

SchurIndex schur_index(int n, int d) {
    SchurIndex idx;
    idx.n = n;
    idx.d = d;
    for (const Partition& p : enumerate_partitions(n, d)) {
        if (p.length() > d) continue;
        SchurIrrepBlock blk;
        blk.shape = p;
        blk.syts = enumerate_syt(p);
        blk.ssyts = enumerate_ssyt(p, d);
        blk.offset = idx.total;
        idx.total += static_cast<int>(blk.syts.size() * blk.ssyts.size());
        idx.irreps.push_back(std::move(blk));
    }
    return idx;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat build_schur_transform(int n, int d) {
    check_caps(n, d);
    SchurIndex cur = schur_index(1, d);
    CMat u = CMat::Zero(d, d);
    for (const SchurIrrepBlock& blk : cur.irreps)
        for (size_t t = 0; t < blk.ssyts.size(); ++t) {
            if (blk.ssyts[t].rows.empty()) continue;
            int letter = blk.ssyts[t].rows[0][0];
            u(blk.index(0, static_cast<int>(t)), letter - 1) = 1.0;
        }

    for (int m = 2; m <= n; ++m) {
        SchurIndex prev = cur;
        cur = schur_index(m, d);
        // Lookups for the target basis.
        std::map<std::vector<long>, int> shape_of;
        std::vector<std::map<std::vector<std::vector<long>>, int>> syt_of(cur.irreps.size());
        std::vector<std::map<std::vector<std::vector<int>>, int>> ssyt_of(cur.irreps.size());
        for (size_t b = 0; b < cur.irreps.size(); ++b) {
            shape_of[cur.irreps[b].shape.rows] = static_cast<int>(b);
            for (size_t s = 0; s < cur.irreps[b].syts.size(); ++s)
                syt_of[b][cur.irreps[b].syts[s].chain] = static_cast<int>(s);
            for (size_t t = 0; t < cur.irreps[b].ssyts.size(); ++t)
                ssyt_of[b][cur.irreps[b].ssyts[t].rows] = static_cast<int>(t);
        }

        // Combined Clebsch-Gordan + rearrangement step: Schur_{m-1} (x) C^d
        // to Schur_m.
        CMat w = CMat::Zero(cur.total, prev.total * d);
        for (const SchurIrrepBlock& blk : prev.irreps) {
            int nt = static_cast<int>(blk.ssyts.size());
            for (size_t s = 0; s < blk.syts.size(); ++s)
                for (int t = 0; t < nt; ++t)
                    for (int k = 1; k <= d; ++k) {
                        int col = blk.index(static_cast<int>(s), t) * d + (k - 1);
                        for (const CgBranch& br : cg_insert(blk.ssyts[t], k, d)) {
                            Partition mu = br.tableau.shape_partition(d);
                            int b = shape_of.at(mu.rows);
                            int grown_row = 0;
                            for (int r = 1; r <= d; ++r)
                                if (mu.row(r) == blk.shape.row(r) + 1) grown_row = r;
                            StandardTableau sp = blk.syts[s].with_box(grown_row);
                            int s_idx = syt_of[b].at(sp.chain);
                            int t_idx = ssyt_of[b].at(br.tableau.rows);
                            w(cur.irreps[b].index(s_idx, t_idx), col) +=
                                cdouble(br.amp.value());
                        }
                    }
        }
        u = w * kron(u, CMat::Identity(d, d));
    }
    return u;
}

CMat perm_op(int n, int d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n || !is_permutation(perm))
        throw std::invalid_argument("perm_op: bad permutation");
    long dim = power_long(d, n);
    CMat out = CMat::Zero(dim, dim);
    std::vector<long> place(n); // place[j] = d^{n-1-j} for register j (0-based)
    for (int j = 0; j < n; ++j) place[j] = power_long(d, n - 1 - j);
    for (long idx = 0; idx < dim; ++idx) {
        long target = 0;
        for (int j = 0; j < n; ++j) {
            long digit = (idx / place[j]) % d;
            target += digit * place[perm[j] - 1];
        }
        out(target, idx) = 1.0;
    }
    return out;
}

CMat power_op(int n, const CMat& u) {
    CMat out = CMat::Identity(1, 1);
    for (int i = 0; i < n; ++i) out = kron(out, u);
    return out;
}

CMat haar_unitary(int d, std::mt19937_64& rng) {
    CMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = gaussian_draw(rng);
    // Gram-Schmidt on columns.
    for (int c = 0; c < d; ++c) {
        for (int p = 0; p < c; ++p) g.col(c) -= g.col(p).dot(g.col(c)) * g.col(p);
        g.col(c) /= g.col(c).norm();
    }
    return g;
}

CMat random_density(int d, std::mt19937_64& rng) {
    CMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = gaussian_draw(rng);
    CMat rho = g * g.adjoint();
    return rho / rho.trace().real();
}

double unitarity_residual(int n, int d) {
    CMat u = build_schur_transform(n, d);
    return (u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).norm();
}

double schur_weyl_residual(int n, int d, int n_perms, int n_unitaries, std::uint64_t seed) {
    CMat usw = build_schur_transform(n, d);
    SchurIndex idx = schur_index(n, d);
    std::mt19937_64 rng(seed);

    std::vector<std::vector<int>> perms;
    perms.push_back(transposition(n, 1, 1)); // identity
    if (n >= 2) perms.push_back(transposition(n, 1, 2));
    while (static_cast<int>(perms.size()) < n_perms) perms.push_back(random_perm(n, rng));

    double worst = 0.0;
    for (int s = 0; s < n_unitaries; ++s) {
        CMat u = haar_unitary(d, rng);
        CMat conj_id = usw * power_op(n, u) * usw.adjoint();
        std::vector<CMat> nu = extract_nu(idx, conj_id);
        for (const std::vector<int>& perm : perms) {
            CMat lhs = usw * perm_op(n, d, perm) * power_op(n, u) * usw.adjoint();
            std::vector<CMat> kappa;
            for (const SchurIrrepBlock& blk : idx.irreps)
                kappa.push_back(yor_to_dense(perm_matrix(blk.shape, perm)));
            double resid = (lhs - assemble_blocks(idx, kappa, nu)).norm();
            if (resid > worst) worst = resid;
        }
    }
    return worst;
}

double rep_consistency_residual(int n, int d, std::uint64_t seed) {
    if (n < 2) return 0.0;
    CMat usw = build_schur_transform(n, d);
    SchurIndex idx = schur_index(n, d);
    std::mt19937_64 rng(seed);
    CMat u = haar_unitary(d, rng);
    std::vector<CMat> nu = extract_nu(idx, usw * power_op(n, u) * usw.adjoint());

    std::vector<int> perm = transposition(n, 1, 2);
    CMat conj = usw * perm_op(n, d, perm) * power_op(n, u) * usw.adjoint();
    double worst = 0.0;
    for (size_t b = 0; b < idx.irreps.size(); ++b) {
        const SchurIrrepBlock& blk = idx.irreps[b];
        CMat kappa = yor_to_dense(perm_matrix(blk.shape, perm));
        int nt = static_cast<int>(blk.ssyts.size());
        // Largest kappa entry gives the cleanest division.
        int r0 = 0, c0 = 0;
        for (int r = 0; r < kappa.rows(); ++r)
            for (int c = 0; c < kappa.cols(); ++c)
                if (std::abs(kappa(r, c)) > std::abs(kappa(r0, c0))) {
                    r0 = r;
                    c0 = c;
                }
        CMat recovered =
            conj.block(blk.offset + r0 * nt, blk.offset + c0 * nt, nt, nt) / kappa(r0, c0);
        double resid = (recovered - nu[b]).norm();
        if (resid > worst) worst = resid;
    }
    return worst;
}

double state_block_residual(int n, int d, int n_states, std::uint64_t seed) {
    CMat usw = build_schur_transform(n, d);
    SchurIndex idx = schur_index(n, d);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < n_states; ++s) {
        CMat rho = random_density(d, rng);
        CMat conj = usw * power_op(n, rho) * usw.adjoint();
        // Rebuild from identity (x) per-lambda blocks and compare.
        std::vector<CMat> kappa, nu;
        for (const SchurIrrepBlock& blk : idx.irreps) {
            int nt = static_cast<int>(blk.ssyts.size());
            kappa.push_back(CMat::Identity(static_cast<int>(blk.syts.size()),
                                           static_cast<int>(blk.syts.size())));
            nu.push_back(conj.block(blk.offset, blk.offset, nt, nt));
        }
        double resid = (conj - assemble_blocks(idx, kappa, nu)).norm();
        if (resid > worst) worst = resid;
    }
    return worst;
}

double jm_residual(int n, int d) {
    CMat usw = build_schur_transform(n, d);
    SchurIndex idx = schur_index(n, d);
    long dim = power_long(d, n);
    double worst = 0.0;
    for (int k = 2; k <= n; ++k) {
        CMat x = CMat::Zero(dim, dim);
        for (int j = 1; j < k; ++j) x += perm_op(n, d, transposition(n, j, k));
        CMat conj = usw * x * usw.adjoint();
        CMat expected = CMat::Zero(idx.total, idx.total);
        for (const SchurIrrepBlock& blk : idx.irreps) {
            int nt = static_cast<int>(blk.ssyts.size());
            for (size_t s = 0; s < blk.syts.size(); ++s) {
                double cont = static_cast<double>(blk.syts[s].cont(k));
                for (int t = 0; t < nt; ++t) {
                    int r = blk.index(static_cast<int>(s), t);
                    expected(r, r) = cont;
                }
            }
        }
        double resid = (conj - expected).cwiseAbs().maxCoeff();
        if (resid > worst) worst = resid;
    }
    return worst;
}

double unbiased_trace_residual(int n, int d, int n_states, std::uint64_t seed) {
    check_caps(n, d);
    long dim = power_long(d, n + 1);
    CMat x = CMat::Zero(dim, dim);
    for (int j = 1; j <= n; ++j) x += perm_op(n + 1, d, transposition(n + 1, j, n + 1));
    x /= static_cast<double>(n);

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s <= n_states; ++s) {
        CMat rho = s == 0 ? CMat(CMat::Identity(d, d) / d) : random_density(d, rng);
        CMat a = x * kron(power_op(n, rho), CMat::Identity(d, d));
        CMat out = CMat::Zero(d, d);
        long inner = power_long(d, n);
        for (long i = 0; i < inner; ++i)
            out += a.block(i * d, i * d, d, d);
        double resid = (out - rho).norm();
        if (resid > worst) worst = resid;
    }
    return worst;
}

} // namespace keyl
