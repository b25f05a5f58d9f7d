#include "moments.hpp"

#include "parallel.hpp"
#include "tableaux.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace keyl {

namespace {

constexpr size_t kMaxStoredFailures = 64;

std::string spectrum_to_string(const std::vector<Rat>& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(f[i]);
    }
    return s + ")";
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

std::uint64_t shape_hash(const Partition& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (long r : p.rows) {
        h ^= static_cast<std::uint64_t>(r);
        h *= 1099511628211ULL;
    }
    return h;
}

// All partitions of every size 0..n with ambient length d, in a fixed order.
std::vector<Partition> sweep_shapes(long n, int d, long min_size = 0) {
    std::vector<Partition> out;
    for (long m = min_size; m <= n; ++m)
        for (const Partition& p : enumerate_partitions(m, d)) out.push_back(p);
    return out;
}

// Runs body(shape, report) over every shape in parallel; deterministic merge.
template <typename Body>
Report sweep(const std::string& suite, const std::vector<Partition>& shapes, int threads,
             const Body& body) {
    std::vector<Report> slots(shapes.size());
    parallel_for(shapes.size(), threads, [&](size_t t) { body(shapes[t], t, slots[t]); });
    Report total;
    total.suite = suite;
    for (const Report& r : slots) total.merge(r);
    return total;
}

// (C_i + 1) and (C_j^{lambda+e_i} + 1): contents of the two added boxes.
long content_i(const Partition& p, int i) { return p.row(i) + 1 - i; }
long content_j_after(const Partition& p, int i, int j) {
    return p.row(j) + (i == j ? 1 : 0) + 1 - j;
}

} // namespace

void Report::expect(bool ok, const std::string& where, const std::string& lhs,
                    const std::string& rhs) {
    ++checked;
    if (!ok && failures.size() < kMaxStoredFailures) failures.push_back({where, lhs, rhs});
}

void Report::expect_eq(const Rat& lhs, const Rat& rhs, const std::string& where) {
    expect(lhs == rhs, where, rat_to_string(lhs), rat_to_string(rhs));
}

void Report::merge(const Report& o) {
    checked += o.checked;
    for (const CheckFailure& f : o.failures)
        if (failures.size() < kMaxStoredFailures) failures.push_back(f);
}

std::string Report::summary() const {
    std::ostringstream os;
    os << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << checked << " checks";
    if (!pass()) os << ", first violation at " << failures.front().where;
    os << ")";
    return os.str();
}

std::vector<Rat> to_rat_spectrum(const SignedShape& s) {
    std::vector<Rat> f;
    f.reserve(s.size());
    for (long v : s) f.push_back(Rat(v));
    return f;
}

std::vector<Rat> donate_spectrum(const Partition& p) { return to_rat_spectrum(donate(p)); }
std::vector<Rat> staircase_spectrum(const Partition& p) { return to_rat_spectrum(staircase(p)); }
std::vector<Rat> staircase_r_spectrum(const Partition& p, int r) {
    return to_rat_spectrum(staircase_r(p, r));
}

std::vector<std::vector<Rat>> random_legal_spectra(const Partition& p, int count,
                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Block> bl = blocks(p);
    SignedShape base = donate(p);
    std::vector<std::vector<Rat>> out;
    for (int c = 0; c < count; ++c) {
        std::vector<Rat> f(p.d());
        for (const Block& b : bl) {
            long block_sum = 0;
            for (int i = b.first; i <= b.last; ++i) block_sum += base[i - 1];
            // Jitter around the block mean; the offsets sum to zero, so the
            // block sum (and hence legality) is preserved.
            std::vector<long> r(b.size());
            long rsum = 0;
            for (long& v : r) {
                v = static_cast<long>(rng() % 7) - 3;
                rsum += v;
            }
            for (int i = b.first; i <= b.last; ++i)
                f[i - 1] = Rat(block_sum, b.size()) + Rat(r[i - b.first]) - Rat(rsum, b.size());
        }
        if (!is_legal(p, f)) throw std::logic_error("random_legal_spectra: produced illegal spectrum");
        out.push_back(std::move(f));
    }
    return out;
}

Rat first_moment_sum(const Partition& p, int d, const std::vector<Rat>& f, int i) {
    Rat s = 0;
    for (int k = 1; k <= d; ++k) s += f[k - 1] * one_step_closed(p, d, k, i).square();
    return s;
}

Report verify_first_moment(long n, int d, std::uint64_t seed, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("first-moment", shapes, threads, [&](const Partition& p, size_t t, Report& rep) {
        std::vector<std::pair<std::string, std::vector<Rat>>> spectra;
        spectra.emplace_back("donate", donate_spectrum(p));
        spectra.emplace_back("staircase", staircase_spectrum(p));
        for (int r = std::max(1, p.length()); r <= d; ++r)
            spectra.emplace_back("staircase_r=" + std::to_string(r), staircase_r_spectrum(p, r));
        auto rnd = random_legal_spectra(p, 5, mix_seed(seed, t, 0));
        for (size_t q = 0; q < rnd.size(); ++q)
            spectra.emplace_back("random#" + std::to_string(q), std::move(rnd[q]));

        for (const auto& [name, f] : spectra) {
            rep.expect(is_legal(p, f), "legal lambda=" + p.to_string() + " f=" + name,
                       spectrum_to_string(f), "legal spectrum");
            for (int i = 1; i <= d; ++i) {
                Rat lhs = first_moment_sum(p, d, f, i);
                Rat rhs = Rat(content_i(p, i)) * dim_ratio(p, d, d, i);
                rep.expect_eq(lhs, rhs, "lambda=" + p.to_string() + " f=" + name +
                                            " i=" + std::to_string(i));
            }
        }
    });
}

Report verify_partial_sums(long n, int d, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("partial-sums", shapes, threads, [&](const Partition& p, size_t, Report& rep) {
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                // Cumulative sums of |c_{kl->ij}|^2 over k <= s, l <= t.
                std::vector<std::vector<Rat>> cum(d + 1, std::vector<Rat>(d + 1, Rat(0)));
                for (int k = 1; k <= d; ++k)
                    for (int l = 1; l <= d; ++l)
                        cum[k][l] = two_step_sq(p, d, k, l, i, j) + cum[k - 1][l] +
                                    cum[k][l - 1] - cum[k - 1][l - 1];
                for (int s = 0; s <= d; ++s)
                    for (int t = 0; t <= d; ++t)
                        rep.expect_eq(cum[s][t], partial_sum_closed(p, d, i, j, s, t),
                                      "lambda=" + p.to_string() + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j) + " s=" + std::to_string(s) +
                                          " t=" + std::to_string(t));
            }
    });
}

Report verify_diagonal_expression(long n, int d, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("diagonal-expression", shapes, threads,
                 [&](const Partition& p, size_t, Report& rep) {
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                std::vector<std::vector<Rat>> c2(d + 1, std::vector<Rat>(d + 1));
                for (int k = 1; k <= d; ++k)
                    for (int l = 1; l <= d; ++l) c2[k][l] = two_step_sq(p, d, k, l, i, j);
                Rat inv_delta = frac(1, delta_ji(p, i, j));
                Rat ci = Rat(content_i(p, i)), cj = Rat(content_j_after(p, i, j));
                std::string tag = "lambda=" + p.to_string() + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);

                for (const char* name : {"donate", "staircase"}) {
                    std::vector<Rat> f = name[0] == 'd' ? donate_spectrum(p)
                                                        : staircase_spectrum(p);
                    Rat lhs = 0;
                    for (int k = 1; k <= d; ++k)
                        for (int l = 1; l <= d; ++l)
                            lhs += (f[k - 1] * f[l - 1] + f[std::max(k, l) - 1] * inv_delta) *
                                   c2[k][l];
                    // Ratio symbol, not the raw shape ratio: it vanishes when
                    // the row-i box cannot be added first, even if the final
                    // two-box shape happens to be a valid diagram.
                    rep.expect_eq(lhs, ci * cj * dim_ratio2(p, d, d, i, j),
                                  tag + " f=" + name);
                }

                // Staircase-weight slice and single-index sums.
                std::vector<Rat> f = staircase_spectrum(p);
                Rat boundary = 0, sum_k = 0, sum_l = 0;
                for (int k = 1; k <= d; ++k)
                    for (int l = 1; l <= d; ++l) {
                        if (std::max(k, l) == d)
                            boundary += (f[k - 1] * f[l - 1] + f[d - 1] * inv_delta) * c2[k][l];
                        sum_k += f[k - 1] * c2[k][l];
                        sum_l += (f[l - 1] + inv_delta) * c2[k][l];
                    }
                Rat dd = dim_ratio2(p, d, d, i, j), dd1 = dim_ratio2(p, d, d - 1, i, j);
                rep.expect_eq(boundary, ci * cj * dd - (ci + 1) * (cj + 1) * dd1,
                              tag + " boundary");
                rep.expect_eq(sum_k, ci * dd, tag + " row-weight sum");
                rep.expect_eq(sum_l, cj * dd, tag + " column-weight sum");
            }
    });
}

MomentBlock moment_block(const Partition& p, int d, int i, int j, bool corr) {
    long nn = p.n();
    if (nn == 0) throw std::invalid_argument("moment_block: needs a nonempty diagram");
    MomentBlock blk;
    auto pi = add_box(p, i);
    blk.valid_ij = pi && add_box(*pi, j).has_value();
    auto pj = add_box(p, j);
    // i == j is the horizontal case: the two insertion orders coincide, so
    // the block is 1x1 on S_ij alone.
    blk.valid_ji = i != j && pj && add_box(*pj, i).has_value();
    if (!blk.valid_ij && !blk.valid_ji) return blk;

    std::vector<Rat> f = donate_spectrum(p);
    std::vector<long> rows = p.rows;
    rows[i - 1] += 1;
    rows[j - 1] += 1;
    Rat ratio = Rat(dim_weyl(p, d)) / Rat(dim_weyl_rows(rows));
    Rat norm = ratio / Rat(nn * nn);

    Rat diag_ij = 0, diag_ji = 0;
    Real off = 0;
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
            Rat w = corr ? f[std::max(k, l) - 1] : f[k - 1] * f[l - 1];
            if (w == 0) continue;
            SqrtRat a_ij = two_step_a(p, d, k, l, i, j);
            SqrtRat b_ij = two_step_b(p, d, k, l, i, j);
            SqrtRat a_ji = two_step_a(p, d, k, l, j, i);
            SqrtRat b_ji = two_step_b(p, d, k, l, j, i);
            diag_ij += w * (a_ij.square() + b_ij.square());
            diag_ji += w * (a_ji.square() + b_ji.square());
            if (blk.valid_ij && blk.valid_ji) {
                Real term = (a_ij * b_ji).value() + (a_ji * b_ij).value();
                if (k == l) term += (a_ij * a_ji).value();
                off += to_real(w) * term;
            }
        }
    blk.diag_ij = norm * diag_ij;
    blk.diag_ji = norm * diag_ji;
    blk.off = to_real(norm) * off;
    return blk;
}

Report verify_main_lemma(long n, int d, int threads) {
    const Real tol = Real("1e-9");
    std::vector<Partition> shapes = sweep_shapes(n, d, 1);
    return sweep("main-lemma", shapes, threads, [&](const Partition& p, size_t, Report& rep) {
        long nn = p.n();
        for (int i = 1; i <= d; ++i)
            for (int j = i; j <= d; ++j) {
                MomentBlock avg = moment_block(p, d, i, j, false);
                if (!avg.valid_ij && !avg.valid_ji) continue;
                MomentBlock cor = moment_block(p, d, i, j, true);
                Rat target = Rat(content_i(p, i)) * Rat(content_j_after(p, i, j)) / Rat(nn * nn);
                long delta = delta_ji(p, i, j);
                std::string tag = "lambda=" + p.to_string() + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);

                // The equal-letter amplitudes are nonnegative for both
                // insertion orders, so the k = l cross term of the
                // off-diagonal entry is a product of nonnegative amplitudes.
                for (int k = 1; k <= d; ++k) {
                    SqrtRat x = two_step_a(p, d, k, k, i, j), y = two_step_a(p, d, k, k, j, i);
                    rep.expect(x.sign >= 0 && y.sign >= 0,
                               tag + " k=" + std::to_string(k) + " equal-letter amplitude sign",
                               rat_to_string(x.signed_square()), rat_to_string(y.signed_square()));
                }

                if (avg.size() == 1) {
                    Rat e_avg = avg.valid_ij ? avg.diag_ij : avg.diag_ji;
                    Rat e_cor = avg.valid_ij ? cor.diag_ij : cor.diag_ji;
                    rep.expect_eq(e_avg + frac(1, delta) * e_cor, target, tag + " 1x1 block");
                } else {
                    // Correlation block is a multiple of the identity.
                    rep.expect_eq(cor.diag_ij, cor.diag_ji, tag + " corr diagonal");
                    rep.expect(abs(cor.off) <= tol, tag + " corr off-diagonal",
                               cor.off.str(12), "0");

                    Real inv = Real(1) / Real(delta);
                    Real s = sqrt(Real(1) - inv * inv);
                    Real a00 = to_real(avg.diag_ij), a11 = to_real(avg.diag_ji);
                    Real c00 = to_real(cor.diag_ij), c11 = to_real(cor.diag_ji);
                    Real tg = to_real(target);
                    Real r00 = a00 + c00 * inv + cor.off * s - tg;
                    Real r01 = avg.off + c00 * s - cor.off * inv;
                    Real r10 = avg.off + cor.off * inv + c11 * s;
                    Real r11 = a11 + cor.off * s - c11 * inv - tg;
                    Real resid = abs(r00);
                    Real r1 = abs(r01), r2 = abs(r10), r3 = abs(r11);
                    if (r1 > resid) resid = r1;
                    if (r2 > resid) resid = r2;
                    if (r3 > resid) resid = r3;
                    rep.expect(resid <= tol, tag + " 2x2 block", resid.str(12), "<= 1e-9");
                }
            }
    });
}

std::vector<long> mcorr_multipliers(const Partition& p) {
    std::vector<Block> bl = blocks(p);
    std::vector<long> m(p.d(), 0);
    int a_count = static_cast<int>(bl.size());
    for (int a = 0; a + 1 < a_count; ++a)
        m[bl[a].last - 1] =
            p.row(bl[a].first) - p.row(bl[a + 1].first) + bl[a].size() + bl[a + 1].size();
    const Block& last = bl.back();
    if (p.row(last.first) > 0) m[last.last - 1] = p.row(last.first) + last.size();
    return m;
}

Report verify_mcorr_decomposition(long n, int d, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("mcorr-decomp", shapes, threads, [&](const Partition& p, size_t, Report& rep) {
        std::vector<long> m = mcorr_multipliers(p);
        SignedShape up = donate(p);
        long len = p.length();
        std::string tag = "lambda=" + p.to_string();
        for (int j = 1; j <= d; ++j)
            rep.expect(m[j - 1] >= 0, tag + " m_j>=0 j=" + std::to_string(j),
                       std::to_string(m[j - 1]), ">= 0");
        // Suffix sums give the projector side entrywise.
        std::vector<long> suffix(d + 2, 0);
        for (int j = d; j >= 1; --j) suffix[j] = suffix[j + 1] + m[j - 1];
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                long lhs = up[std::max(k, l) - 1];
                long rhs = suffix[std::max(k, l)] - len;
                rep.expect(lhs == rhs, tag + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                           std::to_string(lhs), std::to_string(rhs));
            }
    });
}

Report verify_block_equalities(long n, int d, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("block-equalities", shapes, threads, [&](const Partition& p, size_t, Report& rep) {
        std::vector<Block> bl = blocks(p);
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                std::vector<std::vector<Rat>> c2(d + 1, std::vector<Rat>(d + 1));
                for (int k = 1; k <= d; ++k)
                    for (int l = 1; l <= d; ++l) c2[k][l] = two_step_sq(p, d, k, l, i, j);
                Rat diag_factor = Rat(1) + frac(1, delta_ji(p, i, j));
                std::string tag = "lambda=" + p.to_string() + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);
                for (const Block& b1 : bl)
                    for (const Block& b2 : bl) {
                        bool same = b1.first == b2.first;
                        // Off-diagonal constancy across the region.
                        Rat ref;
                        bool have_ref = false;
                        for (int k = b1.first; k <= b1.last; ++k)
                            for (int l = b2.first; l <= b2.last; ++l) {
                                if (same && k == l) continue;
                                if (!have_ref) {
                                    ref = c2[k][l];
                                    have_ref = true;
                                } else {
                                    rep.expect_eq(c2[k][l], ref,
                                                  tag + " region (" + std::to_string(b1.first) +
                                                      ".." + std::to_string(b1.last) + ")x(" +
                                                      std::to_string(b2.first) + ".." +
                                                      std::to_string(b2.last) + ") k=" +
                                                      std::to_string(k) + " l=" + std::to_string(l));
                                }
                            }
                        if (same && have_ref)
                            for (int k = b1.first; k <= b1.last; ++k)
                                rep.expect_eq(c2[k][k], diag_factor * ref,
                                              tag + " diagonal k=" + std::to_string(k));
                    }
            }
    });
}

Report verify_complement_cg(long n, int d, int threads) {
    std::vector<Partition> shapes = sweep_shapes(n, d);
    return sweep("complement-cg", shapes, threads, [&](const Partition& p, size_t, Report& rep) {
        Int dim_small = dim_weyl(p, d);
        std::vector<Ssyt> small = enumerate_ssyt(p, d);
        for (int i = 1; i <= d; ++i) {
            auto pi = add_box(p, i);
            if (!pi) continue;
            Int dim_big = dim_weyl(*pi, d);
            long m = pi->row(1) + 1;
            std::vector<Ssyt> big = enumerate_ssyt(*pi, d);
            for (const Ssyt& s : small)
                for (const Ssyt& sp : big) {
                    Ssyt t = complement_ssyt(sp, m);
                    Ssyt tp = complement_ssyt(s, m);
                    for (int k = 1; k <= d; ++k) {
                        SqrtRat lhs = cg_coefficient(s, k, sp, d);
                        SqrtRat rhs = cg_coefficient(t, k, tp, d);
                        std::string tag = "lambda=" + p.to_string() + " i=" + std::to_string(i) +
                                          " k=" + std::to_string(k) + " S=" + s.to_string() +
                                          " S'=" + sp.to_string();
                        rep.expect(lhs.square() * Rat(dim_small) == rhs.square() * Rat(dim_big),
                                   tag + " squared value",
                                   rat_to_string(lhs.square() * Rat(dim_small)),
                                   rat_to_string(rhs.square() * Rat(dim_big)));
                        int expected_sign = ((d - k) % 2 == 0) ? rhs.sign : -rhs.sign;
                        rep.expect(lhs.sign == expected_sign, tag + " sign",
                                   std::to_string(lhs.sign), std::to_string(expected_sign));
                    }
                }
        }
    });
}

Rat variance_for_rule(long n, const std::vector<Rat>& alpha,
                      const std::function<std::vector<Rat>(const Partition&)>& rule) {
    Rat second = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) {
        std::vector<Rat> f = rule(e.shape);
        if (!is_legal(e.shape, f))
            throw std::invalid_argument("variance_for_rule: illegal spectrum for " +
                                        e.shape.to_string());
        Rat q = 0;
        for (const Rat& v : f) q += (v / n) * (v / n);
        second += e.prob * q;
    }
    return second - p2_of(alpha);
}

Report verify_variance(long n, int d, const std::vector<Rat>& alpha, std::uint64_t seed) {
    Report rep;
    rep.suite = "variance";
    if (n < 1) return rep;

    Rat var_donate = variance_for_rule(n, alpha, [](const Partition& p) {
        return donate_spectrum(p);
    });

    std::vector<std::pair<std::string, std::function<std::vector<Rat>(const Partition&)>>> rules;
    rules.emplace_back("staircase",
                       [](const Partition& p) { return staircase_spectrum(p); });
    for (int r = static_cast<int>(std::min<long>(n, d)); r <= d; ++r)
        rules.emplace_back("staircase_r=" + std::to_string(r),
                           [r](const Partition& p) { return staircase_r_spectrum(p, r); });
    for (int q = 0; q < 10; ++q)
        rules.emplace_back("random#" + std::to_string(q), [seed, q](const Partition& p) {
            return random_legal_spectra(p, 1, mix_seed(seed, q, shape_hash(p)))[0];
        });

    for (const auto& [name, rule] : rules) {
        Rat var_f = variance_for_rule(n, alpha, rule);
        rep.expect(var_donate <= var_f, "Var(donate) <= Var(" + name + ")",
                   rat_to_string(var_donate), rat_to_string(var_f));
    }

    Rat bound = Rat(2 * d, n) + Rat(static_cast<long>(d) * d) * expect_length(n, alpha) / Rat(n * n);
    rep.expect(var_donate <= bound, "Var(donate) <= 2d/n + d^2 E[length]/n^2",
               rat_to_string(var_donate), rat_to_string(bound));
    return rep;
}

} // namespace keyl
