#include "clebsch_gordan.hpp"
#include "schur_stats.hpp"

#include <stdexcept>

namespace keyl {

namespace {

// content of the last box of row s in a shape vector (1-based s)
long cont(const std::vector<long>& shape, int s) { return shape[s - 1] - s; }

bool addable(const std::vector<long>& shape, int i) {
    if (i < 1 || i > static_cast<int>(shape.size())) return false;
    return i == 1 || shape[i - 2] > shape[i - 1];
}

} // namespace

SqrtRat scalar_factor_e10(const std::vector<long>& below, const std::vector<long>& at, int i) {
    int p = static_cast<int>(at.size());
    if (static_cast<int>(below.size()) != p - 1)
        throw std::invalid_argument("scalar_factor_e10: level shapes must have lengths p-1, p");
    if (i < 1 || i > p) return SqrtRat::zero();
    Rat num = 1, den = 1;
    for (int j = 1; j <= p - 1; ++j) num *= Rat(cont(below, j) - cont(at, i) - 1);
    for (int j = 1; j <= p; ++j)
        if (j != i) den *= Rat(cont(at, j) - cont(at, i));
    if (num == 0) return SqrtRat::zero();
    return SqrtRat(1, abs(num / den));
}

SqrtRat scalar_factor_e11(const std::vector<long>& below, const std::vector<long>& at, int i, int j) {
    int p = static_cast<int>(at.size());
    if (static_cast<int>(below.size()) != p - 1)
        throw std::invalid_argument("scalar_factor_e11: level shapes must have lengths p-1, p");
    if (i < 1 || i > p || j < 1 || j > p - 1) return SqrtRat::zero();
    Rat num = 1, den = 1;
    for (int k = 1; k <= p - 1; ++k)
        if (k != j) num *= Rat(cont(below, k) - cont(at, i) - 1);
    for (int k = 1; k <= p; ++k)
        if (k != i) num *= Rat(cont(at, k) - cont(below, j));
    for (int k = 1; k <= p; ++k)
        if (k != i) den *= Rat(cont(at, k) - cont(at, i));
    for (int k = 1; k <= p - 1; ++k) {
        if (k == j) continue;
        Rat t = Rat(cont(below, k) - cont(below, j) - 1);
        if (t == 0) return SqrtRat::zero(); // box not addable at row j of the lower level
        den *= t;
    }
    if (num == 0) return SqrtRat::zero();
    int sign = (i <= j) ? 1 : -1;
    return SqrtRat(sign, abs(num / den));
}

SqrtRat cg_coefficient(const Ssyt& t, int k, const Ssyt& tprime, int d) {
    if (k < 1 || k > d) return SqrtRat::zero();
    // Level shapes of T and T'; T' must differ by nothing below level k and
    // by exactly one box at every level >= k.
    std::vector<std::vector<long>> st(d + 1), sp(d + 1);
    for (int p = 1; p <= d; ++p) {
        st[p] = t.restrict_shape(p);
        sp[p] = tprime.restrict_shape(p);
    }
    for (int p = 1; p < k; ++p)
        if (st[p] != sp[p]) return SqrtRat::zero();
    std::vector<int> box_row(d + 1, 0);
    for (int p = k; p <= d; ++p) {
        int where = 0;
        for (int r = 1; r <= p; ++r) {
            long diff = sp[p][r - 1] - st[p][r - 1];
            if (diff == 0) continue;
            if (diff != 1 || where != 0) return SqrtRat::zero();
            where = r;
        }
        if (where == 0) return SqrtRat::zero();
        box_row[p] = where;
    }
    static const std::vector<long> empty_shape;
    SqrtRat acc = scalar_factor_e10(k >= 2 ? st[k - 1] : empty_shape, st[k], box_row[k]);
    for (int p = k + 1; p <= d && !acc.is_zero(); ++p)
        acc *= scalar_factor_e11(st[p - 1], st[p], box_row[p], box_row[p - 1]);
    return acc;
}

namespace {

void insert_rec(const Ssyt& orig, Ssyt cur, int c, int prev_row, SqrtRat acc, int d,
                std::vector<CgBranch>& out) {
    std::vector<long> at = orig.restrict_shape(c);
    std::vector<long> below = orig.restrict_shape(c - 1);
    for (int i = 1; i <= c; ++i) {
        if (!addable(at, i)) continue;
        SqrtRat sf = (prev_row == 0) ? scalar_factor_e10(below, at, i)
                                     : scalar_factor_e11(below, at, i, prev_row);
        if (sf.is_zero()) continue;
        long col = at[i - 1]; // 0-based column of the leftmost letter > c in row i
        const std::vector<int>* row = (i <= static_cast<int>(orig.rows.size())) ? &orig.rows[i - 1] : nullptr;
        if (row && col < static_cast<long>(row->size())) {
            int bumped = (*row)[col];
            Ssyt next = cur;
            next.rows[i - 1][col] = c;
            insert_rec(orig, std::move(next), bumped, i, acc * sf, d, out);
        } else {
            Ssyt done = cur;
            if (static_cast<int>(done.rows.size()) < i) done.rows.resize(i);
            done.rows[i - 1].push_back(c);
            if (!is_valid_ssyt(done)) throw std::logic_error("cg_insert: produced an invalid SSYT");
            out.push_back({std::move(done), acc * sf});
        }
    }
}

} // namespace

std::vector<CgBranch> cg_insert(const Ssyt& t, int k, int d) {
    if (k < 1 || k > d) throw std::invalid_argument("cg_insert: letter out of range");
    if (!is_valid_ssyt(t) || static_cast<int>(t.d) != d)
        throw std::invalid_argument("cg_insert: input is not a valid SSYT over [d]");
    std::vector<CgBranch> out;
    insert_rec(t, t, k, 0, SqrtRat::one(), d, out);
    return out;
}

SqrtRat one_step_closed(const Partition& p, int d, int k, int i) {
    if (p.d() != d) throw std::invalid_argument("one_step_closed: ambient length mismatch");
    if (k < 1 || k > d || i < 1 || i > k) return SqrtRat::zero();
    if (!add_box(p, i)) return SqrtRat::zero();
    Rat acc = 1;
    for (int j = 1; j <= k - 1; ++j) {
        if (j == i) continue;
        Rat num = Rat((p.row(j) - p.row(i)) + (i - j) - 1);
        Rat den = Rat((p.row(j) - p.row(i)) + (i - j));
        if (num == 0) return SqrtRat::zero();
        acc *= num / den;
    }
    long last = (p.row(i) - p.row(k)) + (k - i) + (i == k ? 1 : 0);
    acc /= last;
    return SqrtRat(1, abs(acc));
}

SqrtRat two_step_a(const Partition& p, int d, int k, int l, int i, int j) {
    auto t1 = one_step_tableau(p, d, k, i);
    auto t2 = two_step_tableau(p, d, k, l, i, j);
    if (!t1 || !t2) return SqrtRat::zero();
    Ssyt t0 = highest_weight(p);
    t0.d = d;
    return cg_coefficient(t0, k, *t1, d) * cg_coefficient(*t1, l, *t2, d);
}

SqrtRat two_step_b(const Partition& p, int d, int k, int l, int i, int j) {
    // The second target T^lambda_{kl->ji} coincides with the first when
    // i = j or k = l; the amplitude to that tableau is already counted by a.
    if (k <= l || i == j) return SqrtRat::zero();
    auto t1 = one_step_tableau(p, d, k, i);
    auto t2 = two_step_tableau(p, d, k, l, j, i);
    if (!t1 || !t2) return SqrtRat::zero();
    Ssyt t0 = highest_weight(p);
    t0.d = d;
    return cg_coefficient(t0, k, *t1, d) * cg_coefficient(*t1, l, *t2, d);
}

Rat two_step_sq(const Partition& p, int d, int k, int l, int i, int j) {
    return two_step_a(p, d, k, l, i, j).square() + two_step_b(p, d, k, l, i, j).square();
}

Rat dim_ratio(const Partition& p, int d, int k, int i) {
    if (i < 1 || i > k || k > d) return 0;
    std::vector<long> rows(p.rows.begin(), p.rows.begin() + std::min(k, p.d()));
    rows.resize(k, 0);
    Int den = dim_weyl_rows(rows);
    rows[i - 1] += 1;
    Int num = dim_weyl_rows(rows);
    return Rat(num) / Rat(den);
}

Rat dim_ratio2(const Partition& p, int d, int s, int i, int j) {
    auto pi = add_box(p, i);
    if (!pi) return 0;
    return dim_ratio(p, d, s, i) * dim_ratio(*pi, d, s, j);
}

long delta_ji(const Partition& p, int i, int j) {
    long cj = p.row(j) + (i == j ? 1 : 0) + 1 - j; // C_j of lambda + e_i
    long ci = p.row(i) + 1 - i;                    // C_i of lambda
    return cj - ci;
}

Rat partial_sum_closed(const Partition& p, int d, int i, int j, int s, int t) {
    if (s < 0 || t < 0) return 0;
    auto pi = add_box(p, i);
    if (!pi) return 0;
    if (s <= t) return dim_ratio(p, d, s, i) * dim_ratio(*pi, d, t, j);
    auto pj = add_box(p, j);
    Rat base = pj ? dim_ratio(p, d, t, j) * dim_ratio(*pj, d, s, i) : Rat(0);
    Rat cross = dim_ratio(p, d, t, i) * dim_ratio(*pi, d, s, j);
    Rat dd = Rat(delta_ji(p, i, j));
    return base + (cross - base) / (dd * dd);
}

Rat partial_sum_brute(const Partition& p, int d, int i, int j, int s, int t) {
    Rat acc = 0;
    for (int k = 1; k <= s; ++k)
        for (int l = 1; l <= t; ++l) acc += two_step_sq(p, d, k, l, i, j);
    return acc;
}

SqrtRat dual_cg_coefficient(const Ssyt& t, int k, const Ssyt& tprime, int d) {
    // T has one box more than T'; the amplitude is the reverse CG coefficient
    // weighted by the dimension ratio of the two shapes.
    Int dim_small = dim_weyl(tprime.shape_partition(d), d);
    Int dim_big = dim_weyl(t.shape_partition(d), d);
    SqrtRat ratio = SqrtRat::sqrt_of(Rat(dim_small) / Rat(dim_big));
    return ratio * cg_coefficient(tprime, k, t, d);
}

} // namespace keyl
