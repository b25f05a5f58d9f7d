#include "schur_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyl {

Int dim_sp(const Partition& p) {
    Int num = 1;
    for (long k = 2; k <= p.n(); ++k) num *= k;
    Int den = 1;
    for (int i = 1; i <= p.d(); ++i)
        for (long j = 1; j <= p.row(i); ++j) den *= hook(p, i, static_cast<int>(j));
    return num / den;
}

Int dim_weyl_rows(const std::vector<long>& rows) {
    int d = static_cast<int>(rows.size());
    Int num = 1, den = 1;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            long t = rows[i - 1] - rows[j - 1] + j - i;
            if (t <= 0) return 0;
            num *= t;
            den *= (j - i);
        }
    return num / den;
}

Int dim_weyl(const Partition& p, int d) {
    if (p.length() > d) return 0;
    std::vector<long> rows(p.rows.begin(), p.rows.begin() + std::min(d, p.d()));
    rows.resize(d, 0);
    return dim_weyl_rows(rows);
}

Int dim_weyl_hook_content(const Partition& p, int d) {
    if (p.length() > d) return 0;
    Int num = 1, den = 1;
    for (int i = 1; i <= p.d(); ++i)
        for (long j = 1; j <= p.row(i); ++j) {
            num *= (d + j - i);
            den *= hook(p, i, static_cast<int>(j));
        }
    return num / den;
}

// Branching over horizontal strips: s_lambda(a_1..a_p) =
//   sum_{mu: lambda/mu horizontal strip} a_p^{|lambda|-|mu|} s_mu(a_1..a_{p-1}).
static Rat schur_rec(const std::vector<long>& shape, int p, const std::vector<Rat>& alpha,
                     std::map<std::pair<std::vector<long>, int>, Rat>& memo) {
    long total = 0;
    for (long v : shape) total += v;
    if (p == 0) return total == 0 ? Rat(1) : Rat(0);
    if (total == 0) return Rat(1);
    auto key = std::make_pair(shape, p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Rat acc = 0;
    // Enumerate mu with mu_i in [max(shape_{i+1}, 0), shape_i] and mu a
    // partition of length <= p-1 such that shape/mu is a horizontal strip:
    // shape_{i+1} <= mu_i <= shape_i.
    int rows = static_cast<int>(shape.size());
    std::vector<long> mu(rows, 0);
    struct Rec {
        static void go(int i, int rows, int p, const std::vector<long>& shape,
                       std::vector<long>& mu, long removed, const std::vector<Rat>& alpha,
                       Rat& acc, std::map<std::pair<std::vector<long>, int>, Rat>& memo) {
            if (i == rows) {
                std::vector<long> inner(mu);
                while (!inner.empty() && inner.back() == 0) inner.pop_back();
                if (static_cast<int>(inner.size()) > p - 1) return;
                Rat w = 1;
                for (long t = 0; t < removed; ++t) w *= alpha[p - 1];
                if (removed > 0 && alpha[p - 1] == 0) return;
                acc += w * schur_rec(mu, p - 1, alpha, memo);
                return;
            }
            long lo = (i + 1 < rows) ? shape[i + 1] : 0;
            long hi = shape[i];
            for (long v = lo; v <= hi; ++v) {
                mu[i] = v;
                go(i + 1, rows, p, shape, mu, removed + (shape[i] - v), alpha, acc, memo);
            }
            mu[i] = 0;
        }
    };
    Rec::go(0, rows, p, shape, mu, 0, alpha, acc, memo);
    memo[key] = acc;
    return acc;
}

Rat schur_poly(const Partition& p, const std::vector<Rat>& alpha) {
    int d = static_cast<int>(alpha.size());
    if (p.length() > d) return 0;

    // Uniform alpha: s_lambda(c,..,c) = c^n * dim_weyl(lambda, d).
    bool uniform = true;
    for (const Rat& a : alpha)
        if (a != alpha[0]) uniform = false;
    if (uniform) {
        Rat c = 1;
        for (long t = 0; t < p.n(); ++t) c *= alpha[0];
        return c * Rat(dim_weyl(p, d));
    }

    std::vector<long> shape = p.rows;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    std::map<std::pair<std::vector<long>, int>, Rat> memo;
    return schur_rec(shape, d, alpha, memo);
}

std::vector<WssEntry> wss_distribution(long n, const std::vector<Rat>& alpha) {
    int d = static_cast<int>(alpha.size());
    Rat sum = 0;
    for (const Rat& a : alpha) {
        if (a < 0) throw std::invalid_argument("wss_distribution: negative probability");
        sum += a;
    }
    if (sum != 1) throw std::invalid_argument("wss_distribution: alpha must sum to 1");
    std::vector<WssEntry> out;
    Rat total = 0;
    for (const Partition& p : enumerate_partitions(n, d)) {
        Rat pr = Rat(dim_sp(p)) * schur_poly(p, alpha);
        total += pr;
        out.push_back({p, pr});
    }
    if (total != 1) throw std::logic_error("wss_distribution: probabilities do not sum to 1");
    return out;
}

long p2_star(const Partition& p) {
    long acc = 0;
    for (int i = 1; i <= p.d(); ++i) {
        long li = p.row(i);
        acc += li * li - li * (2 * i - 1);
    }
    return acc;
}

Rat expect_p2_star(long n, const std::vector<Rat>& alpha) {
    Rat acc = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) acc += e.prob * Rat(p2_star(e.shape));
    return acc;
}

Rat expect_length(long n, const std::vector<Rat>& alpha) {
    Rat acc = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) acc += e.prob * Rat(e.shape.length());
    return acc;
}

Rat expect_length_sq(long n, const std::vector<Rat>& alpha) {
    Rat acc = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) {
        long l = e.shape.length();
        acc += e.prob * Rat(l * l);
    }
    return acc;
}

Rat p2_of(const std::vector<Rat>& alpha) {
    Rat acc = 0;
    for (const Rat& a : alpha) acc += a * a;
    return acc;
}

Rat estimator_variance(long n, const std::vector<Rat>& alpha, SpectrumRule rule) {
    Rat acc = 0;
    for (const WssEntry& e : wss_distribution(n, alpha)) {
        std::vector<Rat> f = rule(e.shape);
        if (!is_legal(e.shape, f))
            throw std::invalid_argument("estimator_variance: rule produced an illegal spectrum");
        Rat s = 0;
        for (const Rat& v : f) s += (v / n) * (v / n);
        acc += e.prob * s;
    }
    return acc - p2_of(alpha);
}

} // namespace keyl
