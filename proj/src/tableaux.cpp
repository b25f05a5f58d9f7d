#include "tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace keyl {

int StandardTableau::row_of(int m) const {
    if (m < 1 || m > n()) throw std::out_of_range("row_of: box index out of range");
    const auto& a = chain[m - 1];
    const auto& b = chain[m];
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] != a[i]) return static_cast<int>(i) + 1;
    throw std::logic_error("row_of: chain is not a growth chain");
}

long StandardTableau::cont(int m) const {
    int r = row_of(m);
    return chain[m][r - 1] - r;
}

StandardTableau StandardTableau::with_box(int row) const {
    std::vector<long> next = chain.back();
    if (row < 1 || row > static_cast<int>(next.size()))
        throw std::out_of_range("with_box: row out of range");
    next[row - 1] += 1;
    if (!weakly_decreasing_nonneg(next))
        throw std::invalid_argument("with_box: box not addable in that row");
    StandardTableau out = *this;
    out.chain.push_back(std::move(next));
    return out;
}

std::vector<std::vector<int>> StandardTableau::filling() const {
    std::vector<std::vector<int>> rows(d());
    for (int m = 1; m <= n(); ++m) rows[row_of(m) - 1].push_back(m);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& r : filling()) {
        if (!first) os << "/";
        first = false;
        for (size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
    }
    return os.str();
}

StandardTableau empty_syt(int d) {
    if (d < 1) throw std::invalid_argument("empty_syt: need d >= 1");
    StandardTableau t;
    t.chain.push_back(std::vector<long>(d, 0));
    return t;
}

// Peel the last box (largest entry) from every removable corner, recurse,
// then re-grow; results come out ordered by the row of the last box.
static void enum_syt_rec(const std::vector<long>& shape, std::vector<int>& rows_rev,
                         std::vector<StandardTableau>& out, int d) {
    long total = 0;
    for (long v : shape) total += v;
    if (total == 0) {
        StandardTableau t = empty_syt(d);
        for (auto it = rows_rev.rbegin(); it != rows_rev.rend(); ++it) t = t.with_box(*it);
        out.push_back(std::move(t));
        return;
    }
    for (int i = 0; i < d; ++i) {
        if (shape[i] == 0) continue;
        if (i + 1 < d && shape[i + 1] == shape[i]) continue; // not a corner
        std::vector<long> smaller = shape;
        smaller[i] -= 1;
        rows_rev.push_back(i + 1);
        enum_syt_rec(smaller, rows_rev, out, d);
        rows_rev.pop_back();
    }
}

std::vector<StandardTableau> enumerate_syt(const Partition& p) {
    std::vector<StandardTableau> out;
    std::vector<int> rows_rev;
    enum_syt_rec(p.rows, rows_rev, out, p.d());
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return a.chain < b.chain; });
    return out;
}

long Ssyt::n() const {
    long t = 0;
    for (const auto& r : rows) t += static_cast<long>(r.size());
    return t;
}

std::vector<long> Ssyt::shape() const {
    std::vector<long> s(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) s[i] = static_cast<long>(rows[i].size());
    return s;
}

Partition Ssyt::shape_partition(int ambient) const {
    std::vector<long> s = shape();
    if (static_cast<int>(s.size()) > ambient)
        throw std::invalid_argument("shape_partition: tableau taller than ambient length");
    s.resize(ambient, 0);
    return Partition(s);
}

std::vector<long> Ssyt::restrict_shape(int p) const {
    std::vector<long> s(p, 0);
    for (int i = 0; i < p && i < static_cast<int>(rows.size()); ++i) {
        long c = 0;
        for (int v : rows[i])
            if (v <= p) ++c;
        s[i] = c;
    }
    return s;
}

std::vector<long> Ssyt::weight() const {
    std::vector<long> w(d, 0);
    for (const auto& r : rows)
        for (int v : r) w.at(v - 1) += 1;
    return w;
}

bool Ssyt::operator<(const Ssyt& o) const {
    return rows < o.rows;
}

std::string Ssyt::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "/";
        for (size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
    }
    return os.str();
}

bool is_valid_ssyt(const Ssyt& t) {
    if (t.d < 1) return false;
    if (static_cast<int>(t.rows.size()) > t.d) return false;
    if (!weakly_decreasing_nonneg(t.shape())) return false;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        for (size_t j = 0; j < r.size(); ++j) {
            if (r[j] < static_cast<int>(i) + 1 || r[j] > t.d) return false; // row i needs letters >= i+1
            if (j + 1 < r.size() && r[j] > r[j + 1]) return false;
            if (i + 1 < t.rows.size() && j < t.rows[i + 1].size() && r[j] >= t.rows[i + 1][j])
                return false;
        }
    }
    return true;
}

Ssyt ssyt_from_chain(const std::vector<std::vector<long>>& chain) {
    Ssyt t;
    t.d = static_cast<int>(chain.size());
    std::vector<long> prev;
    for (int p = 1; p <= t.d; ++p) {
        const auto& cur = chain[p - 1];
        if (static_cast<int>(cur.size()) != p)
            throw std::invalid_argument("ssyt_from_chain: level p shape must have length p");
        for (int i = 0; i < p; ++i) {
            long lo = (i < static_cast<int>(prev.size())) ? prev[i] : 0;
            if (cur[i] < lo) throw std::invalid_argument("ssyt_from_chain: chain not increasing");
            if (i > 0 && cur[i] > prev[i - 1])
                throw std::invalid_argument("ssyt_from_chain: not a horizontal strip");
            if (cur[i] > lo) {
                if (static_cast<int>(t.rows.size()) <= i) t.rows.resize(i + 1);
                for (long c = lo; c < cur[i]; ++c) t.rows[i].push_back(p);
            }
        }
        prev = cur;
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

// mu runs over shapes such that chain[p-1] -> chain[p] is a horizontal strip.
static void enum_ssyt_rec(const std::vector<long>& target, int p, int d,
                          std::vector<std::vector<long>>& chain, std::vector<Ssyt>& out) {
    if (p > d) {
        out.push_back(ssyt_from_chain(chain));
        return;
    }
    // Choose the level-p shape row by row: prev[i] <= cur[i] <= min(prev[i-1], target cap).
    std::vector<long> cur(p, 0);
    // row caps from the final shape: after level p, row i can still grow, but
    // it can never exceed target[i]; it must also reach at least target[i]
    // eventually -- enforced implicitly since strips only add boxes.
    struct Rec {
        static void go(int i, int p, int d, const std::vector<long>& prev,
                       const std::vector<long>& target, std::vector<long>& cur,
                       std::vector<std::vector<long>>& chain, std::vector<Ssyt>& out) {
            if (i == p) {
                chain.push_back(cur);
                enum_ssyt_rec(target, p + 1, d, chain, out);
                chain.pop_back();
                return;
            }
            long lo = (i < static_cast<int>(prev.size())) ? prev[i] : 0;
            long hi = target[i];
            if (i > 0) hi = std::min(hi, prev[i - 1]); // horizontal strip
            if (i > 0) hi = std::min(hi, cur[i - 1]);  // weakly decreasing shape
            // Only the final level is pinned to the target shape; earlier
            // levels may still grow (letters > p land in any row <= letter).
            if (p == d) {
                if (lo > target[i] || target[i] > hi) return;
                cur[i] = target[i];
                go(i + 1, p, d, prev, target, cur, chain, out);
                return;
            }
            for (long v = lo; v <= hi; ++v) {
                cur[i] = v;
                go(i + 1, p, d, prev, target, cur, chain, out);
            }
            cur[i] = lo;
        }
    };
    // Copy: the recursion grows `chain`, which would invalidate a reference.
    const std::vector<long> pr = (p >= 2) ? chain[p - 2] : std::vector<long>();
    Rec::go(0, p, d, pr, target, cur, chain, out);
}

std::vector<Ssyt> enumerate_ssyt(const Partition& p, int d) {
    if (d < 1) throw std::invalid_argument("enumerate_ssyt: need d >= 1");
    if (p.length() > d) return {};
    std::vector<long> target(p.rows.begin(), p.rows.end());
    target.resize(d, 0);
    std::vector<std::vector<long>> chain;
    std::vector<Ssyt> out;
    enum_ssyt_rec(target, 1, d, chain, out);
    std::sort(out.begin(), out.end());
    return out;
}

Ssyt restrict_ssyt(const Ssyt& t, int p) {
    Ssyt out;
    out.d = p;
    for (const auto& r : t.rows) {
        std::vector<int> nr;
        for (int v : r)
            if (v <= p) nr.push_back(v);
        if (!nr.empty()) out.rows.push_back(std::move(nr));
    }
    return out;
}

Ssyt highest_weight(const Partition& p) {
    Ssyt t;
    t.d = p.d();
    for (int i = 1; i <= p.length(); ++i)
        t.rows.push_back(std::vector<int>(p.row(i), i));
    return t;
}

Ssyt lowest_weight(const Partition& p, int d) {
    if (p.d() != d) throw std::invalid_argument("lowest_weight: partition must have ambient length d");
    // Level-p restriction has row lengths lambda_{d-p+i}, i = 1..p.
    std::vector<std::vector<long>> chain(d);
    for (int lev = 1; lev <= d; ++lev) {
        chain[lev - 1].resize(lev);
        for (int i = 1; i <= lev; ++i) chain[lev - 1][i - 1] = p.row(d - lev + i);
    }
    return ssyt_from_chain(chain);
}

std::optional<Ssyt> one_step_tableau(const Partition& p, int d, int k, int i) {
    if (p.d() != d) throw std::invalid_argument("one_step_tableau: ambient length mismatch");
    if (k < 1 || k > d || i < 1 || i > d) return std::nullopt;
    if (i > k) return std::nullopt;
    if (!add_box(p, i)) return std::nullopt;
    Ssyt t = highest_weight(p);
    t.d = d;
    if (static_cast<int>(t.rows.size()) < i) t.rows.resize(i);
    t.rows[i - 1].push_back(k);
    std::sort(t.rows[i - 1].begin(), t.rows[i - 1].end());
    return is_valid_ssyt(t) ? std::optional<Ssyt>(t) : std::nullopt;
}

std::optional<Ssyt> two_step_tableau(const Partition& p, int d, int k, int l, int i, int j) {
    if (p.d() != d) throw std::invalid_argument("two_step_tableau: ambient length mismatch");
    if (k < 1 || k > d || l < 1 || l > d || i < 1 || i > d || j < 1 || j > d) return std::nullopt;
    Ssyt t = highest_weight(p);
    t.d = d;
    int maxrow = std::max(i, j);
    if (static_cast<int>(t.rows.size()) < maxrow) t.rows.resize(maxrow);
    t.rows[i - 1].push_back(k);
    t.rows[j - 1].push_back(l);
    std::sort(t.rows[i - 1].begin(), t.rows[i - 1].end());
    if (j != i) std::sort(t.rows[j - 1].begin(), t.rows[j - 1].end());
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return is_valid_ssyt(t) ? std::optional<Ssyt>(t) : std::nullopt;
}

Ssyt complement_ssyt(const Ssyt& t, long m) {
    int d = t.d;
    // Complement each restriction shape within its own level: the level-p
    // shape of the result has rows m - (level-p shape of t reversed).
    std::vector<std::vector<long>> chain(d);
    for (int p = 1; p <= d; ++p) {
        std::vector<long> s = t.restrict_shape(p);
        chain[p - 1].resize(p);
        for (int i = 1; i <= p; ++i) {
            long v = m - s[p - i];
            if (v < 0) throw std::invalid_argument("complement_ssyt: m smaller than a row");
            chain[p - 1][i - 1] = v;
        }
    }
    return ssyt_from_chain(chain);
}

} // namespace keyl
