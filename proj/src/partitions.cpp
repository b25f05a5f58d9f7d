#include "partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace keyl {

bool weakly_decreasing_nonneg(const std::vector<long>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

Partition::Partition(std::vector<long> r) : rows(std::move(r)) {
    if (rows.empty()) throw std::invalid_argument("partition needs ambient length d >= 1");
    if (!weakly_decreasing_nonneg(rows))
        throw std::invalid_argument("partition rows must be weakly decreasing and nonnegative");
}

long Partition::n() const {
    return std::accumulate(rows.begin(), rows.end(), 0L);
}

int Partition::length() const {
    int l = 0;
    while (l < d() && rows[l] > 0) ++l;
    return l;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < d(); ++i) os << (i ? "," : "") << rows[i];
    os << "]";
    return os.str();
}

static void enum_rec(long remaining, int row, long cap, std::vector<long>& cur,
                     std::vector<Partition>& out) {
    int d = static_cast<int>(cur.size());
    if (row == d) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    long hi = std::min<long>(cap, remaining);
    for (long v = hi; v >= 0; --v) {
        if (v == 0 && remaining > 0) break; // later rows can't hold anything
        cur[row] = v;
        enum_rec(remaining - v, row + 1, v, cur, out);
    }
    cur[row] = 0;
}

std::vector<Partition> enumerate_partitions(long n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("enumerate_partitions: need n >= 0, d >= 1");
    std::vector<Partition> out;
    std::vector<long> cur(d, 0);
    enum_rec(n, 0, n, cur, out);
    return out;
}

std::vector<Block> blocks(const Partition& p) {
    std::vector<Block> out;
    int d = p.d();
    int start = 1;
    for (int i = 2; i <= d + 1; ++i) {
        if (i == d + 1 || p.row(i) != p.row(start)) {
            out.push_back({start, i - 1});
            start = i;
        }
    }
    return out;
}

SignedShape donate(const Partition& p) {
    int d = p.d();
    SignedShape out(d);
    for (int i = 1; i <= d; ++i) {
        long v = p.row(i);
        for (int j = 1; j < i; ++j)
            if (p.row(j) > p.row(i)) --v;
        for (int j = i + 1; j <= d; ++j)
            if (p.row(i) > p.row(j)) ++v;
        out[i - 1] = v;
    }
    return out;
}

SignedShape staircase(const Partition& p) {
    int d = p.d();
    SignedShape out(d);
    for (int i = 1; i <= d; ++i) out[i - 1] = p.row(i) + d - 2 * i + 1;
    return out;
}

SignedShape staircase_r(const Partition& p, int r) {
    int d = p.d();
    if (r < p.length() || r > d)
        throw std::invalid_argument("staircase_r: need length(p) <= r <= d");
    SignedShape out(d);
    for (int i = 1; i <= r; ++i) out[i - 1] = p.row(i) + d - 2 * i + 1;
    for (int i = r + 1; i <= d; ++i) out[i - 1] = -r;
    return out;
}

bool is_legal(const Partition& p, const std::vector<Rat>& f) {
    if (static_cast<int>(f.size()) != p.d()) return false;
    SignedShape don = donate(p);
    for (const Block& b : blocks(p)) {
        Rat fs = 0;
        long ds = 0;
        for (int i = b.first; i <= b.last; ++i) {
            fs += f[i - 1];
            ds += don[i - 1];
        }
        if (fs != Rat(ds)) return false;
    }
    return true;
}

long content_last(const Partition& p, int i) {
    return p.row(i) - i;
}

long hook(const Partition& p, int i, int j) {
    if (i < 1 || i > p.d() || j < 1 || j > p.row(i))
        throw std::out_of_range("hook: cell outside the diagram");
    long arm = p.row(i) - j;
    long leg = 0;
    for (int r = i + 1; r <= p.d(); ++r)
        if (p.row(r) >= j) ++leg;
    return arm + leg + 1;
}

Partition complement_partition(const Partition& p, long m) {
    if (m < p.row(1)) throw std::invalid_argument("complement_partition: need m >= lambda_1");
    int d = p.d();
    std::vector<long> rows(d);
    for (int i = 1; i <= d; ++i) rows[i - 1] = m - p.row(d + 1 - i);
    return Partition(rows);
}

std::optional<Partition> add_box(const Partition& p, int i) {
    if (i < 1 || i > p.d()) return std::nullopt;
    if (i > 1 && p.row(i - 1) == p.row(i)) return std::nullopt;
    std::vector<long> rows = p.rows;
    rows[i - 1] += 1;
    return Partition(rows);
}

std::vector<long> parse_row_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty row list");
    return out;
}

} // namespace keyl
