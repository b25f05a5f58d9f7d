#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moments.hpp"

using namespace keyl;

TEST_CASE("first-moment sums for a single box") {
    Partition p({1, 0});
    std::vector<Rat> f = donate_spectrum(p);
    CHECK(first_moment_sum(p, 2, f, 1) == Rat(3, 2));
    CHECK(first_moment_sum(p, 2, f, 2) == Rat(-1, 2));
    // Normalized by the dimension ratio these are the contents 1 and -1.
    CHECK(first_moment_sum(p, 2, f, 1) / dim_ratio(p, 2, 2, 1) == 1);
    CHECK(first_moment_sum(p, 2, f, 2) / dim_ratio(p, 2, 2, 2) == -1);
}

TEST_CASE("staircase and donate give the same first moment") {
    for (long n = 0; n <= 5; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int i = 1; i <= 3; ++i)
                CHECK(first_moment_sum(p, 3, donate_spectrum(p), i) ==
                      first_moment_sum(p, 3, staircase_spectrum(p), i));
}

TEST_CASE("random legal spectra are legal") {
    for (long n = 0; n <= 5; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (const auto& f : random_legal_spectra(p, 5, 42)) CHECK(is_legal(p, f));
}

TEST_CASE("verification suites pass at small sizes") {
    CHECK(verify_first_moment(5, 3, 1, 1).pass());
    CHECK(verify_partial_sums(4, 3, 1).pass());
    CHECK(verify_diagonal_expression(4, 3, 1).pass());
    CHECK(verify_main_lemma(4, 3, 1).pass());
    CHECK(verify_mcorr_decomposition(6, 4, 1).pass());
    CHECK(verify_block_equalities(5, 3, 1).pass());
    CHECK(verify_complement_cg(3, 3, 1).pass());
}

TEST_CASE("moment blocks") {
    // lambda = (1,0), i = 1, j = 2: a genuine 2x2 block.
    MomentBlock avg = moment_block(Partition({1, 0}), 2, 1, 2, false);
    MomentBlock cor = moment_block(Partition({1, 0}), 2, 1, 2, true);
    CHECK(avg.valid_ij);
    CHECK(avg.valid_ji);
    CHECK(avg.size() == 2);
    // The correlation block is a multiple of the identity.
    CHECK(cor.diag_ij == cor.diag_ji);

    // i = j is always 1x1.
    MomentBlock diag = moment_block(Partition({1, 0}), 2, 1, 1, false);
    CHECK(diag.size() == 1);
}

TEST_CASE("correlation-weight decomposition examples") {
    CHECK(mcorr_multipliers(Partition({3, 3, 1, 0})) ==
          std::vector<long>({0, 5, 3, 0}));
    CHECK(mcorr_multipliers(Partition({2, 2})) == std::vector<long>({0, 4}));
    CHECK(mcorr_multipliers(Partition({0, 0, 0})) == std::vector<long>({0, 0, 0}));
}

TEST_CASE("variance functionals") {
    std::vector<Rat> uniform2 = {Rat(1, 2), Rat(1, 2)};
    auto donate_rule = [](const Partition& p) {
        SignedShape f = donate(p);
        return std::vector<Rat>(f.begin(), f.end());
    };
    auto staircase_rule = [](const Partition& p) {
        SignedShape f = staircase(p);
        return std::vector<Rat>(f.begin(), f.end());
    };
    CHECK(variance_for_rule(1, uniform2, donate_rule) == Rat(9, 2));
    // At n = 2 the shape (1,1) has positive probability and the staircase
    // estimate is strictly worse there.
    CHECK(variance_for_rule(2, uniform2, donate_rule) <
          variance_for_rule(2, uniform2, staircase_rule));

    CHECK(verify_variance(4, 3, {Rat(1, 2), Rat(1, 3), Rat(1, 6)}, 3).pass());
    CHECK(verify_variance(3, 2, uniform2, 4).pass());
}

TEST_CASE("reports aggregate failures") {
    Report rep;
    rep.suite = "demo";
    rep.expect(true, "ok", "1", "1");
    CHECK(rep.pass());
    rep.expect(false, "bad", "1", "2");
    CHECK_FALSE(rep.pass());
    CHECK(rep.checked == 2);
    CHECK(rep.failures.size() == 1);
    CHECK(rep.failures[0].where == "bad");
}
