#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yor.hpp"

#include <random>

using namespace keyl;

namespace {

const Real kTol("1e-40");

int find_syt(const std::vector<StandardTableau>& syts,
             const std::vector<std::vector<int>>& filling) {
    for (size_t i = 0; i < syts.size(); ++i)
        if (syts[i].filling() == filling) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

YorMatrix random_perm_product(const Partition& p, std::mt19937_64& rng, int factors) {
    int n = static_cast<int>(p.n());
    YorMatrix m = YorMatrix::identity(static_cast<int>(enumerate_syt(p).size()));
    for (int f = 0; f < factors; ++f)
        m = m * transposition_matrix(p, 1 + static_cast<int>(rng() % (n - 1)));
    return m;
}

} // namespace

TEST_CASE("adjacent transpositions on (2,1)") {
    Partition p({2, 1});
    auto syts = enumerate_syt(p);
    int s1 = find_syt(syts, {{1, 2}, {3}});
    int s2 = find_syt(syts, {{1, 3}, {2}});

    YorMatrix k12 = transposition_matrix(p, 1);
    CHECK(abs(k12.at(s1, s1) - 1) <= kTol);    // 1,2 share a row
    CHECK(abs(k12.at(s2, s2) + 1) <= kTol);    // 1,2 share a column
    CHECK(abs(k12.at(s1, s2)) <= kTol);

    YorMatrix k23 = transposition_matrix(p, 2);
    Real half(1), root3(3);
    half /= 2;
    root3 = sqrt(root3) / 2;
    CHECK(abs(k23.at(s1, s1) + half) <= kTol);   // Delta_S1(2) = -2
    CHECK(abs(k23.at(s1, s2) - root3) <= kTol);
    CHECK(abs(k23.at(s2, s2) - half) <= kTol);
}

TEST_CASE("adjacent transpositions are involutions") {
    for (long n = 2; n <= 6; ++n)
        for (const Partition& p : enumerate_partitions(n, 4)) {
            int dim = static_cast<int>(enumerate_syt(p).size());
            for (int i = 1; i < n; ++i) {
                YorMatrix k = transposition_matrix(p, i);
                CHECK((k * k).max_abs_diff(YorMatrix::identity(dim)) <= Real("1e-30"));
            }
        }
}

TEST_CASE("braid relation") {
    for (long n = 3; n <= 5; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int i = 1; i + 1 < n; ++i) {
                YorMatrix a = transposition_matrix(p, i);
                YorMatrix b = transposition_matrix(p, i + 1);
                CHECK((a * b * a).max_abs_diff(b * a * b) <= Real("1e-30"));
            }
}

TEST_CASE("permutation matrices") {
    Partition p({2, 1});
    int dim = 2;
    CHECK(perm_matrix(p, {1, 2, 3}).max_abs_diff(YorMatrix::identity(dim)) <= kTol);

    // Two decompositions of (1 3): s1 s2 s1 and s2 s1 s2.
    YorMatrix a = transposition_matrix(p, 1) * transposition_matrix(p, 2) *
                  transposition_matrix(p, 1);
    CHECK(perm_matrix(p, {3, 2, 1}).max_abs_diff(a) <= Real("1e-30"));

    // Homomorphism and orthogonality on random products.
    std::mt19937_64 rng(11);
    for (long n = 2; n <= 5; ++n)
        for (const Partition& q : enumerate_partitions(n, 3)) {
            int dq = static_cast<int>(enumerate_syt(q).size());
            YorMatrix m = random_perm_product(q, rng, 6);
            CHECK((m * m.transpose()).max_abs_diff(YorMatrix::identity(dq)) <= Real("1e-28"));
        }
}

TEST_CASE("Jucys-Murphy eigenvalues") {
    Partition p({2, 1});
    auto syts = enumerate_syt(p);
    auto jm3 = jucys_murphy(p, 3);
    int s1 = find_syt(syts, {{1, 2}, {3}});
    int s2 = find_syt(syts, {{1, 3}, {2}});
    CHECK(jm3[s1] == -1);
    CHECK(jm3[s2] == 1);
    for (long v : jucys_murphy(p, 1)) CHECK(v == 0);
}

TEST_CASE("Jucys-Murphy equals the transposition sum") {
    for (long n = 2; n <= 6; ++n)
        for (const Partition& p : enumerate_partitions(n, 3)) {
            int dim = static_cast<int>(enumerate_syt(p).size());
            for (int k = 2; k <= n; ++k) {
                YorMatrix total = YorMatrix::identity(dim);
                for (int r = 0; r < dim; ++r) total.at(r, r) = 0;
                for (int j = 1; j < k; ++j) {
                    std::vector<int> perm(n);
                    for (int q = 0; q < n; ++q) perm[q] = q + 1;
                    std::swap(perm[j - 1], perm[k - 1]);
                    YorMatrix m = perm_matrix(p, perm);
                    for (int r = 0; r < dim; ++r)
                        for (int c = 0; c < dim; ++c) total.at(r, c) += m.at(r, c);
                }
                auto eig = jucys_murphy(p, k);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) {
                        Real want = r == c ? Real(eig[r]) : Real(0);
                        CHECK(abs(total.at(r, c) - want) <= Real("1e-28"));
                    }
            }
        }
}

TEST_CASE("swap blocks") {
    SwapBlock horizontal = swap_block(Partition({1, 0}), 1, 1);
    CHECK(horizontal.kind == SwapBlock::horizontal);
    CHECK(horizontal.delta == 1);
    CHECK(horizontal.entry(0, 0) == 1);

    SwapBlock vertical = swap_block(Partition({1, 1}), 1, 2);
    CHECK(vertical.kind == SwapBlock::vertical);
    CHECK(vertical.entry(0, 0) == -1);

    SwapBlock mixed = swap_block(Partition({1, 0}), 1, 2);
    CHECK(mixed.kind == SwapBlock::swappable);
    CHECK(mixed.delta == -2);
    CHECK(mixed.entry(0, 0) == Rat(-1, 2));
    CHECK(mixed.entry(1, 1) == Rat(1, 2));
    CHECK(mixed.entry_sqrt(0, 1).square() == Rat(3, 4));
    CHECK(mixed.entry_sqrt(0, 1).sign == 1);

    // The 2x2 block squares to the identity.
    Rat diag = mixed.entry(0, 0) * mixed.entry(0, 0) + mixed.entry_sqrt(0, 1).square();
    CHECK(diag == 1);
}

TEST_CASE("swap block matches Young's orthogonal form on the grown shape") {
    // Adding boxes (1,2) and (2,1) to (1,0) gives (2,1); the SWAP block is
    // the action of the transposition (2 3) on the two SYTs of (2,1).
    Partition grown({2, 1});
    auto syts = enumerate_syt(grown);
    int sij = find_syt(syts, {{1, 2}, {3}}); // box 2 in row 1 first
    YorMatrix k23 = transposition_matrix(grown, 2);
    SwapBlock blk = swap_block(Partition({1, 0}), 1, 2);
    CHECK(abs(k23.at(sij, sij) - to_real(blk.entry(0, 0))) <= kTol);
    CHECK(abs(k23.at(1 - sij, 1 - sij) - to_real(blk.entry(1, 1))) <= kTol);
    CHECK(abs(k23.at(sij, 1 - sij) - blk.entry_sqrt(0, 1).value()) <= kTol);
}
