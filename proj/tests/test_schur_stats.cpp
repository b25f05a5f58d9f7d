#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur_stats.hpp"
#include "tableaux.hpp"

#include <random>

using namespace keyl;

namespace {

std::vector<Rat> random_spectrum(int d, std::mt19937_64& rng) {
    std::vector<long> w(d);
    long total = 0;
    for (int i = 0; i < d; ++i) {
        w[i] = 1 + static_cast<long>(rng() % 9);
        total += w[i];
    }
    std::sort(w.rbegin(), w.rend());
    std::vector<Rat> alpha;
    for (long v : w) alpha.push_back(Rat(v, total));
    return alpha;
}

} // namespace

TEST_CASE("symmetric group dimensions") {
    CHECK(dim_sp(Partition({2, 1})) == 2);
    CHECK(dim_sp(Partition({7})) == 1);
    CHECK(dim_sp(Partition({2, 2})) == 2);
    CHECK(dim_sp(Partition({3, 2})) == 5);
}

TEST_CASE("Weyl dimension closed forms") {
    for (int d = 1; d <= 5; ++d) {
        CHECK(dim_weyl(Partition({2}), d) == Int(d) * (d + 1) / 2);
        CHECK(dim_weyl(Partition({1, 1}), d) == Int(d) * (d - 1) / 2);
    }
    CHECK(dim_weyl(Partition({2, 1}), 2) == 2);
    CHECK(dim_weyl(Partition({2, 1, 1}), 2) == 0);
}

TEST_CASE("Weyl = hook-content = SSYT count") {
    for (long n = 0; n <= 6; ++n)
        for (int d = 1; d <= 4; ++d)
            for (const Partition& p : enumerate_partitions(n, d)) {
                Int w = dim_weyl(p, d);
                CHECK(w == dim_weyl_hook_content(p, d));
                CHECK(w == Int(enumerate_ssyt(p, d).size()));
            }
}

TEST_CASE("Schur polynomial examples") {
    CHECK(schur_poly(Partition({2, 0}), {Rat(1, 2), Rat(1, 2)}) == Rat(3, 4));
    CHECK(schur_poly(Partition({1, 1}), {Rat(1), Rat(0)}) == 0);
    for (int d = 1; d <= 4; ++d) {
        std::vector<Rat> alpha(d, Rat(1, d));
        Partition one(std::vector<long>(d, 0));
        one.rows[0] = 1;
        CHECK(schur_poly(one, alpha) == 1);
    }
}

TEST_CASE("weak Schur sampling distribution") {
    auto dist = wss_distribution(2, {Rat(1, 2), Rat(1, 2)});
    REQUIRE(dist.size() == 2);
    for (const WssEntry& e : dist) {
        if (e.shape.rows == std::vector<long>{2, 0}) CHECK(e.prob == Rat(3, 4));
        if (e.shape.rows == std::vector<long>{1, 1}) CHECK(e.prob == Rat(1, 4));
    }

    auto spike = wss_distribution(5, {Rat(1), Rat(0), Rat(0)});
    Rat spike_mass = 0;
    for (const WssEntry& e : spike)
        if (e.shape.rows == std::vector<long>{5, 0, 0}) spike_mass = e.prob;
    CHECK(spike_mass == 1);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        long n = 1 + static_cast<long>(rng() % 6);
        Rat total = 0;
        for (const WssEntry& e : wss_distribution(n, random_spectrum(d, rng))) {
            CHECK(e.prob >= 0);
            total += e.prob;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("support respects the rank of alpha") {
    // rank-2 spectrum in ambient dimension 3: no shapes of length 3.
    for (const WssEntry& e : wss_distribution(4, {Rat(2, 3), Rat(1, 3), Rat(0)}))
        if (e.prob != 0) CHECK(e.shape.length() <= 2);
}

TEST_CASE("p2* observable") {
    CHECK(p2_star(Partition({6, 6, 2, 1})) == 36);
    std::mt19937_64 rng(7);
    for (long n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rat> alpha = random_spectrum(3, rng);
            CHECK(expect_p2_star(n, alpha) == Rat(n * (n - 1)) * p2_of(alpha));
        }
}

TEST_CASE("expected height under the uniform spectrum") {
    for (long n = 1; n <= 8; ++n) {
        std::vector<Rat> alpha(static_cast<size_t>(n), Rat(1, n)); // d = n covers all shapes
        Rat el = expect_length(n, alpha);
        CHECK(el * el <= Rat(4 * n)); // E[l] <= 2 sqrt(n), squared to stay rational
    }
}

TEST_CASE("estimator variance example") {
    // Single sample, qubit, maximally mixed: Var = E[sum (f_i/n)^2] - p2.
    auto donate_rule = [](const Partition& p) {
        SignedShape f = donate(p);
        return std::vector<Rat>(f.begin(), f.end());
    };
    Rat var = estimator_variance(1, {Rat(1, 2), Rat(1, 2)}, donate_rule);
    CHECK(var == Rat(9, 2));
}
