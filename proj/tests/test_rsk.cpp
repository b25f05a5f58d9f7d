#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsk.hpp"
#include "schur_stats.hpp"

#include <cmath>
#include <map>

using namespace keyl;

TEST_CASE("row insertion shapes") {
    CHECK(rsk_shape({1, 1, 2}, 2).rows == std::vector<long>{3, 0});
    CHECK(rsk_shape({3, 2, 1}, 3).rows == std::vector<long>{1, 1, 1});
    CHECK(rsk_shape({2, 1, 2}, 2).rows == std::vector<long>{2, 1});
}

TEST_CASE("insertion matches hand-traced bumping") {
    std::vector<std::vector<int>> rows;
    rsk_insert(rows, 2);
    rsk_insert(rows, 1); // bumps the 2
    CHECK(rows == std::vector<std::vector<int>>{{1}, {2}});
    rsk_insert(rows, 2);
    CHECK(rows == std::vector<std::vector<int>>{{1, 2}, {2}});
}

TEST_CASE("point-mass spectrum gives one row") {
    for (long n = 1; n <= 6; ++n)
        CHECK(sample_shape(n, {Rat(1), Rat(0)}, 17 + n).rows ==
              std::vector<long>({n, 0}));
}

TEST_CASE("fixed seed reproduces the sample") {
    for (int q = 0; q < 20; ++q)
        CHECK(sample_shape(6, {Rat(1, 2), Rat(1, 3), Rat(1, 6)}, 1000 + q) ==
              sample_shape(6, {Rat(1, 2), Rat(1, 3), Rat(1, 6)}, 1000 + q));
}

TEST_CASE("sampled shapes track the exact distribution") {
    const long n = 4;
    const std::vector<Rat> alpha = {Rat(1, 2), Rat(1, 3), Rat(1, 6)};
    const int trials = 20000;
    std::map<std::vector<long>, long> counts;
    for (int q = 0; q < trials; ++q) ++counts[sample_shape(n, alpha, 555 + q).rows];

    double tv = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) {
        double expected = to_real(e.prob).convert_to<double>();
        double observed = static_cast<double>(counts[e.shape.rows]) / trials;
        tv += std::abs(expected - observed);
    }
    CHECK(tv / 2 <= 0.05);
}

TEST_CASE("Plancherel sampler") {
    const int trials = 20000;
    long hits = 0;
    long total_len = 0, total_first = 0;
    for (int q = 0; q < trials; ++q) {
        Partition p = sample_plancherel(4, 4, 777 + q);
        CHECK(p.n() == 4);
        if (p.rows == std::vector<long>{2, 2, 0, 0}) ++hits;
        total_len += p.length();
        total_first += p.row(1);
    }
    // Pr[(2,2)] = dim((2,2))^2 / 4! = 4/24; 3 sigma of a Bernoulli(1/6) mean.
    double mean = static_cast<double>(hits) / trials;
    double sigma = std::sqrt((1.0 / 6) * (5.0 / 6) / trials);
    CHECK(std::abs(mean - 1.0 / 6) <= 3 * sigma);
    // Transpose symmetry: E[length] = E[lambda_1].
    CHECK(std::abs(static_cast<double>(total_len - total_first)) / trials <= 0.05);
}
