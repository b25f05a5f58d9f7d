#include "yor.hpp"
#include "clebsch_gordan.hpp"

#include <map>
#include <stdexcept>

namespace keyl {

YorMatrix YorMatrix::identity(int dim) {
    YorMatrix m;
    m.dim = dim;
    m.a.assign(static_cast<size_t>(dim) * dim, Real(0));
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

YorMatrix YorMatrix::operator*(const YorMatrix& o) const {
    if (dim != o.dim) throw std::invalid_argument("YorMatrix: dimension mismatch");
    YorMatrix r;
    r.dim = dim;
    r.a.assign(a.size(), Real(0));
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            const Real& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < dim; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

YorMatrix YorMatrix::transpose() const {
    YorMatrix r;
    r.dim = dim;
    r.a.assign(a.size(), Real(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(j, i) = at(i, j);
    return r;
}

Real YorMatrix::max_abs_diff(const YorMatrix& o) const {
    if (dim != o.dim) throw std::invalid_argument("YorMatrix: dimension mismatch");
    Real m = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Real d = abs(a[i] - o.a[i]);
        if (d > m) m = d;
    }
    return m;
}

std::vector<AdjacentAction> adjacent_action(const Partition& p, int i) {
    if (i < 1 || i >= p.n()) throw std::invalid_argument("adjacent_action: need 1 <= i <= n-1");
    std::vector<StandardTableau> basis = enumerate_syt(p);
    std::map<std::vector<std::vector<long>>, int> index;
    for (size_t t = 0; t < basis.size(); ++t) index[basis[t].chain] = static_cast<int>(t);

    std::vector<AdjacentAction> out(basis.size());
    for (size_t t = 0; t < basis.size(); ++t) {
        const StandardTableau& s = basis[t];
        int r1 = s.row_of(i), r2 = s.row_of(i + 1);
        long c1 = s.chain[i][r1 - 1];     // column of box i
        long c2 = s.chain[i + 1][r2 - 1]; // column of box i+1
        AdjacentAction act;
        if (r1 == r2) {
            act.diag = SqrtRat::one();
        } else if (c1 == c2) {
            act.diag = -SqrtRat::one();
        } else {
            long delta = s.cont(i + 1) - s.cont(i);
            Rat inv = frac(1, delta);
            act.diag = SqrtRat::sqrt_of(inv * abs(inv)); // sign(delta) * sqrt(1/delta^2)
            act.off = SqrtRat(1, 1 - inv * inv);
            // Partner tableau: boxes i and i+1 added in the opposite order.
            std::vector<std::vector<long>> chain = s.chain;
            chain[i] = chain[i - 1];
            chain[i][r2 - 1] += 1;
            auto it = index.find(chain);
            if (it == index.end()) throw std::logic_error("adjacent_action: partner SYT missing");
            act.partner = it->second;
        }
        out[t] = act;
    }
    return out;
}

YorMatrix transposition_matrix(const Partition& p, int i) {
    std::vector<AdjacentAction> act = adjacent_action(p, i);
    YorMatrix m;
    m.dim = static_cast<int>(act.size());
    m.a.assign(static_cast<size_t>(m.dim) * m.dim, Real(0));
    for (int t = 0; t < m.dim; ++t) {
        m.at(t, t) = act[t].diag.value();
        if (act[t].partner >= 0) m.at(act[t].partner, t) = act[t].off.value();
    }
    return m;
}

bool is_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

YorMatrix perm_matrix(const Partition& p, const std::vector<int>& perm) {
    if (static_cast<long>(perm.size()) != p.n())
        throw std::invalid_argument("perm_matrix: permutation size must equal |lambda|");
    if (!is_permutation(perm)) throw std::invalid_argument("perm_matrix: not a permutation");
    // Sort the one-line word with adjacent swaps; w = s_{t_m} ... s_{t_1}
    // when the recorded swaps (in order) are t_1, ..., t_m.
    std::vector<int> w = perm;
    int n = static_cast<int>(w.size());
    YorMatrix m = YorMatrix::identity(static_cast<int>(enumerate_syt(p).size()));
    bool moved = true;
    while (moved) {
        moved = false;
        for (int t = 1; t < n; ++t) {
            if (w[t - 1] > w[t]) {
                std::swap(w[t - 1], w[t]);
                m = transposition_matrix(p, t) * m;
                moved = true;
            }
        }
    }
    return m;
}

std::vector<long> jucys_murphy(const Partition& p, int k) {
    if (k < 1 || k > p.n()) throw std::invalid_argument("jucys_murphy: need 1 <= k <= n");
    std::vector<long> out;
    for (const StandardTableau& s : enumerate_syt(p)) out.push_back(s.cont(k));
    return out;
}

SwapBlock swap_block(const Partition& p, int i, int j) {
    auto pi = add_box(p, i);
    bool order1 = pi && add_box(*pi, j).has_value();
    auto pj = add_box(p, j);
    bool order2 = pj && add_box(*pj, i).has_value();
    if (!order1 && !order2)
        throw std::invalid_argument("swap_block: neither insertion order is valid");
    SwapBlock b;
    b.delta = delta_ji(p, i, j);
    if (i == j)
        b.kind = SwapBlock::horizontal;
    else if ((j == i + 1 && p.row(i) == p.row(j)) || (i == j + 1 && p.row(j) == p.row(i)))
        b.kind = SwapBlock::vertical;
    else
        b.kind = SwapBlock::swappable;
    return b;
}

Rat SwapBlock::entry(int r, int c) const {
    if (r != c) throw std::logic_error("SwapBlock::entry: off-diagonal entries are irrational");
    if (kind == horizontal) return 1;
    if (kind == vertical) return -1;
    return r == 0 ? frac(1, delta) : frac(-1, delta);
}

SqrtRat SwapBlock::entry_sqrt(int r, int c) const {
    if (kind != swappable) {
        if (r != 0 || c != 0) throw std::out_of_range("SwapBlock: 1x1 block");
        return kind == horizontal ? SqrtRat::one() : -SqrtRat::one();
    }
    if (r < 0 || r > 1 || c < 0 || c > 1) throw std::out_of_range("SwapBlock: 2x2 block");
    Rat inv = frac(1, delta);
    if (r == c) return SqrtRat::sqrt_of((r == 0 ? inv : -inv) * abs(inv));
    return SqrtRat(1, 1 - inv * inv);
}

} // namespace keyl
