#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clebsch_gordan.hpp"
#include "schur_stats.hpp"
#include "tableaux.hpp"

#include <map>

using namespace keyl;

namespace {

Ssyt make_ssyt(int d, std::vector<std::vector<int>> rows) {
    Ssyt t;
    t.d = d;
    t.rows = std::move(rows);
    REQUIRE(is_valid_ssyt(t));
    return t;
}

} // namespace

TEST_CASE("insertion figure example") {
    Ssyt t = make_ssyt(3, {{1, 2}, {3}});
    auto branches = cg_insert(t, 2, 3);
    REQUIRE(branches.size() == 4);

    std::map<std::vector<long>, int> shape_count;
    Rat total = 0;
    for (const CgBranch& br : branches) {
        ++shape_count[br.tableau.shape()];
        total += br.amp.square();
    }
    CHECK(total == 1);
    // One direct insertion into row 1 plus the three bumped branches of the
    // figure with shapes (3,1), (2,2), (2,1,1).
    CHECK(shape_count[{3, 1}] == 2);
    CHECK(shape_count[{2, 2}] == 1);
    CHECK(shape_count[{2, 1, 1}] == 1);
}

TEST_CASE("insertion agrees with the scalar-factor product") {
    for (long n = 0; n <= 4; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (const Ssyt& t : enumerate_ssyt(p, 3))
                for (int k = 1; k <= 3; ++k) {
                    auto branches = cg_insert(t, k, 3);
                    Rat total = 0;
                    for (const CgBranch& br : branches) {
                        SqrtRat direct = cg_coefficient(t, k, br.tableau, 3);
                        CHECK(direct.sign == br.amp.sign);
                        CHECK(direct.radicand == br.amp.radicand);
                        total += br.amp.square();
                    }
                    CHECK(total == 1);
                }
}

TEST_CASE("row normalization (unitarity, other direction)") {
    // For each source shape mu the map V_mu (x) C^d -> (+)_lambda V_lambda is
    // unitary, so for any fixed target tableau T' the squared amplitudes from
    // tableaux of that one source shape sum to 1.
    const int d = 3;
    for (long n = 0; n <= 3; ++n) {
        std::map<std::pair<std::vector<long>, std::vector<std::vector<int>>>, Rat> mass;
        for (const Partition& p : enumerate_partitions(n, d))
            for (const Ssyt& t : enumerate_ssyt(p, d))
                for (int k = 1; k <= d; ++k)
                    for (const CgBranch& br : cg_insert(t, k, d))
                        mass[{p.rows, br.tableau.rows}] += br.amp.square();
        for (const Partition& p : enumerate_partitions(n, d))
            for (const Partition& mu : enumerate_partitions(n + 1, d))
                for (const Ssyt& tp : enumerate_ssyt(mu, d)) {
                    auto it = mass.find({p.rows, tp.rows});
                    if (it != mass.end()) CHECK(it->second == 1);
                }
    }
}

TEST_CASE("first insertion into a one-row tableau") {
    // <(1,1,i)-row | T^(2), i> = sqrt(1/3), <two-row | T^(2), i> = sqrt(2/3).
    Partition two({2, 0, 0});
    Ssyt hw = highest_weight(two);
    hw.d = 3;
    for (int i = 2; i <= 3; ++i) {
        Ssyt row = make_ssyt(3, {{1, 1, i}});
        Ssyt col = make_ssyt(3, {{1, 1}, {i}});
        SqrtRat a = cg_coefficient(hw, i, row, 3);
        SqrtRat b = cg_coefficient(hw, i, col, 3);
        CHECK(a.sign == 1);
        CHECK(a.radicand == Rat(1, 3));
        CHECK(b.square() == Rat(2, 3));
    }
    // Not producible by insertion: coefficient vanishes.
    Ssyt wrong = make_ssyt(3, {{1, 2}, {3}});
    CHECK(cg_coefficient(hw, 2, wrong, 3).is_zero());
}

TEST_CASE("one-step closed form") {
    CHECK(one_step_closed(Partition({1, 0}), 2, 2, 1).sign == 1);
    CHECK(one_step_closed(Partition({1, 0}), 2, 2, 1).radicand == Rat(1, 2));
    for (int k = 2; k <= 3; ++k) {
        SqrtRat c = one_step_closed(Partition({2, 0, 0}), 3, k, 1);
        CHECK(c.sign == 1);
        CHECK(c.radicand == Rat(1, 3));
    }
    CHECK(one_step_closed(Partition({2, 2}), 2, 2, 2).is_zero());
}

TEST_CASE("one-step equals the general coefficient on highest weight") {
    for (long n = 0; n <= 4; ++n)
        for (const Partition& p : enumerate_partitions(n, 3)) {
            Ssyt hw = highest_weight(p);
            hw.d = 3;
            for (int k = 1; k <= 3; ++k)
                for (int i = 1; i <= 3; ++i) {
                    SqrtRat closed = one_step_closed(p, 3, k, i);
                    auto target = one_step_tableau(p, 3, k, i);
                    CHECK(closed.is_zero() == !target.has_value());
                    if (target) {
                        SqrtRat direct = cg_coefficient(hw, k, *target, 3);
                        CHECK(direct.sign == closed.sign);
                        CHECK(direct.radicand == closed.radicand);
                    }
                }
        }
}

TEST_CASE("one-step is constant on blocks in k") {
    for (long n = 0; n <= 5; ++n)
        for (const Partition& p : enumerate_partitions(n, 4))
            for (const Block& b : blocks(p))
                for (int i = 1; i <= 4; ++i) {
                    SqrtRat ref = one_step_closed(p, 4, b.first, i);
                    for (int k = b.first + 1; k <= b.last; ++k) {
                        SqrtRat c = one_step_closed(p, 4, k, i);
                        CHECK(c.sign == ref.sign);
                        CHECK(c.radicand == ref.radicand);
                    }
                }
}

TEST_CASE("two-step structure") {
    // b vanishes unless k > l.
    for (long n = 0; n <= 3; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int k = 1; k <= 3; ++k)
                for (int l = k; l <= 3; ++l)
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j)
                            CHECK(two_step_b(p, 3, k, l, i, j).is_zero());
    // a is always nonnegative.
    for (long n = 0; n <= 3; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l)
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j)
                            CHECK(two_step_a(p, 3, k, l, i, j).sign >= 0);
    SqrtRat a = two_step_a(Partition({1, 0}), 2, 1, 2, 1, 1);
    CHECK(a.sign == 1);
    CHECK(a.radicand == Rat(1, 3));
}

TEST_CASE("full two-step sum is the dimension ratio") {
    for (long n = 0; n <= 4; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    Rat total = 0;
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l) total += two_step_sq(p, 3, k, l, i, j);
                    CHECK(total == dim_ratio2(p, 3, 3, i, j));
                }
}

TEST_CASE("dimension ratio identities") {
    CHECK(dim_ratio(Partition({1, 0}), 2, 2, 1) == Rat(3, 2));
    for (long n = 0; n <= 4; ++n)
        for (const Partition& p : enumerate_partitions(n, 3))
            for (int i = 1; i <= 3; ++i) {
                for (int k = 1; k < i; ++k) CHECK(dim_ratio(p, 3, k, i) == 0);
                Rat running = 0;
                for (int s = 1; s <= 3; ++s) {
                    Rat c2 = one_step_closed(p, 3, s, i).square();
                    running += c2;
                    CHECK(running == dim_ratio(p, 3, s, i));
                    CHECK(c2 == dim_ratio(p, 3, s, i) - dim_ratio(p, 3, s - 1, i));
                    long ci = content_last(p, i) + 1, ck = content_last(p, s);
                    CHECK(Rat(ci - 1 - ck) * c2 == dim_ratio(p, 3, s - 1, i));
                }
            }
}

TEST_CASE("partial sums match the closed form") {
    Partition p({1, 0});
    CHECK(partial_sum_closed(p, 2, 1, 2, 2, 2) == 1);
    CHECK(partial_sum_brute(p, 2, 1, 2, 2, 2) == 1);
    for (long n = 0; n <= 4; ++n)
        for (const Partition& q : enumerate_partitions(n, 3))
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int s = 0; s <= 3; ++s)
                        for (int t = 0; t <= 3; ++t)
                            CHECK(partial_sum_brute(q, 3, i, j, s, t) ==
                                  partial_sum_closed(q, 3, i, j, s, t));
}

TEST_CASE("dual coefficients are row-normalized") {
    // For a fixed larger shape lambda and fixed smaller tableau T', the dual
    // transform row over (T in SSYT(lambda), k) has unit mass.
    const int d = 3;
    for (long n = 1; n <= 4; ++n)
        for (const Partition& lam : enumerate_partitions(n, d)) {
            auto tableaux = enumerate_ssyt(lam, d);
            for (int i = 1; i <= d; ++i) {
                if (lam.row(i) == 0) continue;
                std::vector<long> rows = lam.rows;
                --rows[i - 1];
                if (!weakly_decreasing_nonneg(rows)) continue;
                Partition mu(rows);
                for (const Ssyt& tp : enumerate_ssyt(mu, d)) {
                    Rat total = 0;
                    for (const Ssyt& t : tableaux)
                        for (int k = 1; k <= d; ++k)
                            total += dual_cg_coefficient(t, k, tp, d).square();
                    CHECK(total == 1);
                }
            }
        }
}
