#include "rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace keyl {

void rsk_insert(std::vector<std::vector<int>>& rows, int v) {
    int cur = v;
    for (size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({cur});
            return;
        }
        auto& row = rows[r];
        // First entry strictly greater than cur gets bumped.
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            return;
        }
        std::swap(cur, *it);
    }
}

Partition rsk_shape(const std::vector<int>& word, int d) {
    std::vector<std::vector<int>> rows;
    for (int v : word) rsk_insert(rows, v);
    if (static_cast<int>(rows.size()) > d)
        throw std::logic_error("rsk_shape: tableau taller than d");
    std::vector<long> shape(d, 0);
    for (size_t r = 0; r < rows.size(); ++r) shape[r] = static_cast<long>(rows[r].size());
    return Partition(shape);
}

AlphaSampler::AlphaSampler(const std::vector<Rat>& alpha, std::uint64_t seed) : rng(seed) {
    Rat cum = 0;
    Int two64 = Int(1) << 64;
    for (const Rat& a : alpha) {
        if (a < 0) throw std::invalid_argument("AlphaSampler: negative probability");
        cum += a;
        thresholds.push_back(Int(numerator(cum) * two64 / denominator(cum)));
    }
    if (cum != 1) throw std::invalid_argument("AlphaSampler: alpha must sum to 1");
    thresholds.back() = two64; // guard against truncation at the top
}

int AlphaSampler::draw() {
    Int u = rng();
    for (size_t s = 0; s < thresholds.size(); ++s)
        if (u < thresholds[s]) return static_cast<int>(s) + 1;
    return static_cast<int>(thresholds.size());
}

Partition sample_shape(long n, const std::vector<Rat>& alpha, std::uint64_t seed) {
    AlphaSampler sampler(alpha, seed);
    std::vector<std::vector<int>> rows;
    for (long t = 0; t < n; ++t) rsk_insert(rows, sampler.draw());
    int d = static_cast<int>(alpha.size());
    std::vector<long> shape(d, 0);
    if (static_cast<int>(rows.size()) > d)
        throw std::logic_error("sample_shape: tableau taller than d");
    for (size_t r = 0; r < rows.size(); ++r) shape[r] = static_cast<long>(rows[r].size());
    return Partition(shape);
}

Partition sample_plancherel(long n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (long t = 0; t < n; ++t) perm[t] = static_cast<int>(t) + 1;
    // Fisher-Yates with rejection sampling for unbiased bounded draws.
    for (long t = n - 1; t > 0; --t) {
        std::uint64_t bound = static_cast<std::uint64_t>(t) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t u;
        do {
            u = rng();
        } while (u >= limit);
        std::swap(perm[t], perm[u % bound]);
    }
    std::vector<std::vector<int>> rows;
    for (int v : perm) rsk_insert(rows, v);
    std::vector<long> shape(std::max<long>(d, static_cast<long>(rows.size())), 0);
    for (size_t r = 0; r < rows.size(); ++r) shape[r] = static_cast<long>(rows[r].size());
    return Partition(shape);
}

} // namespace keyl
