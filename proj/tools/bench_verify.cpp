// Compares the serial and OpenMP paths of the verification sweeps. Both
// paths must produce identical reports; only the wall time may differ.

#include "moments.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace keyl;

namespace {

double time_ms(const std::function<Report()>& body, Report& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = body();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int bench(const char* name, const std::function<Report(int)>& suite) {
    Report serial, parallel;
    double ts = time_ms([&] { return suite(1); }, serial);
    double tp = time_ms([&] { return suite(max_threads()); }, parallel);
    bool same = serial.checked == parallel.checked &&
                serial.failures.size() == parallel.failures.size() && serial.pass() &&
                parallel.pass();
    std::printf("%-22s serial %8.1f ms   %d threads %8.1f ms   speedup %.2fx   %s\n", name,
                ts, max_threads(), tp, tp > 0 ? ts / tp : 0.0,
                same ? "reports agree" : "REPORTS DIFFER");
    return same ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    long n = argc > 1 ? std::stol(argv[1]) : 6;
    int d = argc > 2 ? std::stoi(argv[2]) : 4;
    std::printf("verification sweeps at n = %ld, d = %d (%d hardware threads)\n", n, d,
                max_threads());
    int bad = 0;
    bad += bench("first-moment", [&](int t) { return verify_first_moment(n, d, 12345, t); });
    bad += bench("partial-sums", [&](int t) { return verify_partial_sums(n, d, t); });
    bad += bench("diagonal-expression",
                 [&](int t) { return verify_diagonal_expression(n, d, t); });
    bad += bench("main-lemma",
                 [&](int t) { return verify_main_lemma(std::min(n, 5L), std::min(d, 4), t); });
    bad += bench("block-equalities", [&](int t) { return verify_block_equalities(n, d, t); });
    return bad == 0 ? 0 : 1;
}
