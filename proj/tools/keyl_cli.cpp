// keyl: command-line front end for the debiased-Keyl verification library.
//
// Exit codes: 0 all identities hold, 1 at least one violated, 2 usage error
// (including parameters above the documented caps). With --json, identical
// argv + seed produce byte-identical output; wall times appear only in the
// human-readable text.

#include "clebsch_gordan.hpp"
#include "dense.hpp"
#include "moments.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "rsk.hpp"
#include "schur_stats.hpp"
#include "tableaux.hpp"
#include "yor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace keyl;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rat_json(const Rat& q) {
    return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Json sqrt_json(const SqrtRat& v) {
    return Json{{"sign", v.sign}, {"radicand", rat_json(v.radicand)}};
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

Partition parse_partition(const std::string& csv) {
    std::vector<long> rows = parse_row_list(csv);
    if (!weakly_decreasing_nonneg(rows))
        throw UsageError("--lambda must be weakly decreasing and nonnegative");
    return Partition(rows);
}

std::vector<Rat> parse_alpha(const std::string& csv, int d) {
    std::vector<Rat> alpha;
    if (!csv.empty()) {
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) alpha.push_back(parse_rat(tok));
    } else if (d > 0) {
        alpha.assign(d, Rat(1, d)); // uniform default
    }
    Rat total = 0;
    for (const Rat& a : alpha) {
        if (a < 0) throw UsageError("--alpha entries must be nonnegative");
        total += a;
    }
    if (alpha.empty() || total != 1) throw UsageError("--alpha must sum to 1");
    return alpha;
}

// Cycle notation like "(1 2)(3 4)" or one-line "2,1,3" into one-line form.
std::vector<int> parse_perm(const std::string& s, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    if (s.find('(') == std::string::npos) {
        std::vector<long> oneline = parse_row_list(s);
        perm.assign(oneline.begin(), oneline.end());
    } else {
        size_t pos = 0;
        while ((pos = s.find('(', pos)) != std::string::npos) {
            size_t close = s.find(')', pos);
            if (close == std::string::npos) throw UsageError("unbalanced '(' in --perm");
            std::stringstream ss(s.substr(pos + 1, close - pos - 1));
            std::vector<int> cyc;
            int v;
            while (ss >> v) cyc.push_back(v);
            for (size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (from < 1 || from > n) throw UsageError("--perm entry out of range");
                perm[from - 1] = to;
            }
            pos = close + 1;
        }
    }
    if (static_cast<int>(perm.size()) != n || !is_permutation(perm))
        throw UsageError("--perm is not a permutation of 1..n");
    return perm;
}

struct Output {
    bool json = false;
    std::string out_path;
    std::ostringstream text;
    Json doc = Json{{"schema", "1"}};

    void flush() {
        std::string payload = json ? doc.dump(2) + "\n" : text.str();
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path);
            if (!f) throw UsageError("cannot open --out file");
            f << payload;
        }
    }
};

Json report_json(const Report& rep, double seconds) {
    (void)seconds; // timing stays out of JSON so output is argv-deterministic
    Json failures = Json::array();
    for (size_t i = 0; i < rep.failures.size(); ++i)
        failures.push_back(Json{{"index", i},
                                {"where", rep.failures[i].where},
                                {"lhs", rep.failures[i].lhs},
                                {"rhs", rep.failures[i].rhs}});
    return Json{{"suite", rep.suite},
                {"pass", rep.pass()},
                {"checked", rep.checked},
                {"failures", failures}};
}

void report_text(std::ostringstream& os, const Report& rep, double seconds) {
    os << rep.summary() << "  (" << seconds << " s)\n";
    for (const CheckFailure& f : rep.failures)
        os << "  FAIL " << f.where << ": " << f.lhs << " != " << f.rhs << "\n";
}

struct SuiteCaps {
    long n;
    int d;
};

const std::map<std::string, SuiteCaps> kVerifyCaps = {
    {"first-moment", {12, 6}},       {"partial-sums", {8, 4}},
    {"diagonal-expression", {8, 4}}, {"main-lemma", {6, 4}},
    {"mcorr-decomp", {14, 8}},       {"block-equalities", {6, 4}},
    {"complement-cg", {5, 4}},       {"variance", {8, 4}}};

Report run_suite(const std::string& suite, long n, int d, const std::vector<Rat>& alpha,
                 std::uint64_t seed, int threads) {
    if (suite == "first-moment") return verify_first_moment(n, d, seed, threads);
    if (suite == "partial-sums") return verify_partial_sums(n, d, threads);
    if (suite == "diagonal-expression") return verify_diagonal_expression(n, d, threads);
    if (suite == "main-lemma") return verify_main_lemma(n, d, threads);
    if (suite == "mcorr-decomp") return verify_mcorr_decomposition(n, d, threads);
    if (suite == "block-equalities") return verify_block_equalities(n, d, threads);
    if (suite == "complement-cg") return verify_complement_cg(n, d, threads);
    if (suite == "variance") return verify_variance(n, d, alpha, seed);
    throw UsageError("unknown verify suite: " + suite);
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct DenseResult {
    std::string name;
    double residual;
    double tolerance;
};

std::vector<DenseResult> dense_residuals(int n, int d, int samples, std::uint64_t seed,
                                         double tol) {
    return {
        {"unitarity", unitarity_residual(n, d), 1e-10},
        {"schur-weyl", schur_weyl_residual(n, d, 5, samples, seed), tol},
        {"rep-consistency", rep_consistency_residual(n, d, seed + 1), tol},
        {"state-blocks", state_block_residual(n, d, samples, seed + 2), tol},
        {"jucys-murphy", jm_residual(n, d), tol},
        {"unbiased-trace", unbiased_trace_residual(n, d, samples, seed + 3), 1e-10},
    };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the debiased Keyl spectrum estimator"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand registers the flags it uses.
    long n = 0;
    int d = 0, k = 0, i = 0, r = -1, count = 1, samples = 20, threads = 0;
    std::uint64_t seed = 1;
    double tolerance = 1e-8;
    std::string lambda_csv, alpha_csv, perm_str, tableau_json, suite;
    bool histogram = false;
    Output out;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", out.json, "emit JSON instead of text");
        cmd->add_option("--out", out.out_path, "write output to a file");
    };

    CLI::App* c_enum = app.add_subcommand("enumerate", "partitions of n with at most d rows");
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--d", d)->required();
    add_common(c_enum);

    CLI::App* c_blocks = app.add_subcommand("blocks", "maximal equal-row-length runs");
    c_blocks->add_option("--lambda", lambda_csv)->required();
    add_common(c_blocks);

    CLI::App* c_donate = app.add_subcommand("donate", "box-donation spectrum");
    c_donate->add_option("--lambda", lambda_csv)->required();
    add_common(c_donate);

    CLI::App* c_stair = app.add_subcommand("staircase", "staircase spectrum (optionally rank-r)");
    c_stair->add_option("--lambda", lambda_csv)->required();
    c_stair->add_option("--r", r, "pin rows r+1..d to -r");
    add_common(c_stair);

    CLI::App* c_dims = app.add_subcommand("dims", "irrep dimensions of a shape");
    c_dims->add_option("--lambda", lambda_csv)->required();
    c_dims->add_option("--d", d, "ambient length (default: length of --lambda)");
    add_common(c_dims);

    CLI::App* c_schur = app.add_subcommand("schur-poly", "Schur polynomial at rational alpha");
    c_schur->add_option("--lambda", lambda_csv)->required();
    c_schur->add_option("--alpha", alpha_csv)->required();
    add_common(c_schur);

    CLI::App* c_wss = app.add_subcommand("wss", "weak Schur sampling distribution");
    c_wss->add_option("--n", n)->required();
    c_wss->add_option("--d", d)->required();
    c_wss->add_option("--alpha", alpha_csv, "rational weights (default uniform)");
    add_common(c_wss);

    CLI::App* c_sample = app.add_subcommand("sample", "RSK shape sampler");
    c_sample->add_option("--n", n)->required();
    c_sample->add_option("--d", d)->required();
    c_sample->add_option("--alpha", alpha_csv, "rational weights (default uniform)");
    c_sample->add_option("--count", count);
    c_sample->add_option("--seed", seed);
    c_sample->add_flag("--histogram", histogram, "emit shape -> count JSON");
    add_common(c_sample);

    CLI::App* c_cg = app.add_subcommand("cg", "Clebsch-Gordan coefficients");
    CLI::App* c_cg_ins = c_cg->add_subcommand("insert", "all branches of absorbing a letter");
    c_cg_ins->add_option("--tableau", tableau_json, "SSYT as JSON row-arrays")->required();
    c_cg_ins->add_option("--k", k, "letter to absorb")->required();
    c_cg_ins->add_option("--d", d, "alphabet size")->required();
    add_common(c_cg_ins);
    CLI::App* c_cg_one = c_cg->add_subcommand("one-step", "c^lambda_{k->i} closed form");
    c_cg_one->add_option("--lambda", lambda_csv)->required();
    c_cg_one->add_option("--d", d, "ambient length (default: length of --lambda)");
    c_cg_one->add_option("--k", k)->required();
    c_cg_one->add_option("--i", i)->required();
    add_common(c_cg_one);
    c_cg->require_subcommand(1);

    CLI::App* c_yor = app.add_subcommand("yor", "Young's orthogonal form of a permutation");
    c_yor->add_option("--lambda", lambda_csv)->required();
    c_yor->add_option("--perm", perm_str, "cycles \"(2 3)\" or one-line \"2,3,1\"")->required();
    add_common(c_yor);

    CLI::App* c_verify = app.add_subcommand("verify", "identity verification suites");
    c_verify->add_option("suite", suite, "first-moment|partial-sums|diagonal-expression|"
                                         "main-lemma|mcorr-decomp|block-equalities|"
                                         "complement-cg|variance")
        ->required();
    c_verify->add_option("--n", n)->required();
    c_verify->add_option("--d", d)->required();
    c_verify->add_option("--alpha", alpha_csv, "rational weights (variance suite)");
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--threads", threads, "0 = all cores");
    add_common(c_verify);

    CLI::App* c_dense = app.add_subcommand("dense", "dense Schur-transform checks");
    CLI::App* c_dense_sc = c_dense->add_subcommand("schur-check", "build and test U_SW");
    c_dense_sc->add_option("--n", n)->required();
    c_dense_sc->add_option("--d", d)->required();
    c_dense_sc->add_option("--samples", samples);
    c_dense_sc->add_option("--seed", seed);
    c_dense_sc->add_option("--tolerance", tolerance, "float-residual tolerance");
    add_common(c_dense_sc);
    c_dense->require_subcommand(1);

    CLI::App* c_all = app.add_subcommand("all", "every verification suite at capped sizes");
    c_all->add_option("--n", n)->required();
    c_all->add_option("--d", d)->required();
    c_all->add_option("--alpha", alpha_csv, "rational weights (default uniform)");
    c_all->add_option("--seed", seed);
    c_all->add_option("--threads", threads, "0 = all cores");
    add_common(c_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (threads <= 0) threads = max_threads();

        if (c_enum->parsed()) {
            if (n < 0 || n > 64 || d < 1 || d > 16) throw UsageError("enumerate caps: 0 <= n <= 64, 1 <= d <= 16");
            Json list = Json::array();
            for (const Partition& p : enumerate_partitions(n, d)) {
                out.text << "lambda=" << p.to_string() << "\n";
                list.push_back(p.rows);
            }
            out.doc["partitions"] = list;
        } else if (c_blocks->parsed()) {
            Partition p = parse_partition(lambda_csv);
            Json list = Json::array();
            for (const Block& b : blocks(p)) {
                out.text << "rows " << b.first << ".." << b.last
                         << "  length " << p.row(b.first) << "\n";
                list.push_back(Json{{"first", b.first}, {"last", b.last},
                                    {"row_length", p.row(b.first)}});
            }
            out.doc["lambda"] = p.rows;
            out.doc["blocks"] = list;
        } else if (c_donate->parsed()) {
            Partition p = parse_partition(lambda_csv);
            SignedShape f = donate(p);
            out.text << join_longs(f) << "\n";
            out.doc["lambda"] = p.rows;
            out.doc["donate"] = f;
        } else if (c_stair->parsed()) {
            Partition p = parse_partition(lambda_csv);
            if (r >= 0 && (r < p.length() || r > p.d()))
                throw UsageError("--r must satisfy length(lambda) <= r <= d");
            SignedShape f = r >= 0 ? staircase_r(p, r) : staircase(p);
            out.text << join_longs(f) << "\n";
            out.doc["lambda"] = p.rows;
            out.doc["spectrum"] = f;
        } else if (c_dims->parsed()) {
            Partition p = parse_partition(lambda_csv);
            if (d == 0) d = p.d();
            if (d < p.length()) throw UsageError("--d must be at least length(lambda)");
            Int ds = dim_sp(p), dw = dim_weyl(p, d), dh = dim_weyl_hook_content(p, d);
            out.text << "n = " << p.n() << "\n"
                     << "dim symmetric-group irrep = " << ds.str() << "\n"
                     << "dim GL(" << d << ") irrep (Weyl) = " << dw.str() << "\n"
                     << "dim GL(" << d << ") irrep (hook-content) = " << dh.str() << "\n";
            out.doc["lambda"] = p.rows;
            out.doc["n"] = p.n();
            out.doc["dim_sp"] = ds.str();
            out.doc["dim_weyl"] = dw.str();
            out.doc["dim_weyl_hook_content"] = dh.str();
            if (dw != dh) return 1;
        } else if (c_schur->parsed()) {
            Partition p = parse_partition(lambda_csv);
            std::vector<Rat> alpha = parse_alpha(alpha_csv, 0);
            Rat s = schur_poly(p, alpha);
            out.text << rat_to_string(s) << "\n";
            out.doc["lambda"] = p.rows;
            out.doc["value"] = rat_json(s);
        } else if (c_wss->parsed()) {
            if (n < 0 || n > 64) throw UsageError("wss caps: 0 <= n <= 64");
            std::vector<Rat> alpha = parse_alpha(alpha_csv, d);
            if (static_cast<int>(alpha.size()) != d) throw UsageError("--alpha needs d entries");
            Json list = Json::array();
            for (const WssEntry& e : wss_distribution(n, alpha)) {
                out.text << "lambda=" << e.shape.to_string() << "  prob "
                         << rat_to_string(e.prob) << "\n";
                list.push_back(Json{{"lambda", e.shape.rows}, {"prob", rat_json(e.prob)}});
            }
            out.doc["entries"] = list;
        } else if (c_sample->parsed()) {
            std::vector<Rat> alpha = parse_alpha(alpha_csv, d);
            if (static_cast<int>(alpha.size()) != d) throw UsageError("--alpha needs d entries");
            std::map<std::string, long> hist;
            Json shapes = Json::array();
            for (int q = 0; q < count; ++q) {
                Partition p = sample_shape(n, alpha, seed + static_cast<std::uint64_t>(q));
                if (histogram) {
                    ++hist[join_longs(p.rows)];
                } else {
                    out.text << join_longs(p.rows) << "\n";
                    shapes.push_back(p.rows);
                }
            }
            if (histogram) {
                Json h = Json::object();
                for (const auto& [key, c] : hist) {
                    out.text << key << "  " << c << "\n";
                    h[key] = c;
                }
                out.doc["histogram"] = h;
            } else {
                out.doc["shapes"] = shapes;
            }
        } else if (c_cg_ins->parsed()) {
            Json rows = Json::parse(tableau_json);
            Ssyt t;
            t.d = d;
            for (const auto& row : rows) t.rows.push_back(row.get<std::vector<int>>());
            if (!is_valid_ssyt(t)) throw UsageError("--tableau is not a valid SSYT");
            if (k < 1 || k > d) throw UsageError("--k must lie in 1..d");
            Json list = Json::array();
            for (const CgBranch& br : cg_insert(t, k, d)) {
                out.text << br.tableau.to_string() << "  amp ";
                if (br.amp.sign < 0) out.text << "-";
                out.text << "sqrt(" << rat_to_string(br.amp.radicand) << ")\n";
                list.push_back(Json{{"tableau", br.tableau.rows}, {"amp", sqrt_json(br.amp)}});
            }
            out.doc["branches"] = list;
        } else if (c_cg_one->parsed()) {
            Partition p = parse_partition(lambda_csv);
            if (d == 0) d = p.d();
            if (d < p.d()) throw UsageError("--d must be at least length(lambda)");
            p.rows.resize(d, 0);
            if (k < 1 || k > d || i < 1 || i > d) throw UsageError("--k and --i must lie in 1..d");
            SqrtRat c = one_step_closed(p, d, k, i);
            out.text << "sign " << c.sign << "  radicand " << rat_to_string(c.radicand) << "\n";
            out.doc["lambda"] = p.rows;
            out.doc["coefficient"] = sqrt_json(c);
        } else if (c_yor->parsed()) {
            Partition p = parse_partition(lambda_csv);
            long np = p.n();
            if (np < 1 || np > 10) throw UsageError("yor caps: 1 <= |lambda| <= 10");
            std::vector<int> perm = parse_perm(perm_str, static_cast<int>(np));
            // A single adjacent transposition admits exact entries.
            int adj = 0;
            for (int t = 1; t < np; ++t) {
                std::vector<int> cand(np);
                for (int q = 0; q < np; ++q) cand[q] = q + 1;
                std::swap(cand[t - 1], cand[t]);
                if (cand == perm) adj = t;
            }
            std::vector<StandardTableau> syts = enumerate_syt(p);
            out.doc["lambda"] = p.rows;
            out.doc["dim"] = syts.size();
            if (adj > 0) {
                std::vector<AdjacentAction> act = adjacent_action(p, adj);
                Json mat = Json::array();
                for (size_t s = 0; s < act.size(); ++s) {
                    Json row_doc = Json::array();
                    for (size_t c = 0; c < act.size(); ++c) {
                        SqrtRat e = c == s ? act[s].diag
                                  : (static_cast<int>(c) == act[s].partner ? act[s].off
                                                                           : SqrtRat::zero());
                        row_doc.push_back(sqrt_json(e));
                        std::string cell;
                        if (auto ex = e.exact_value())
                            cell = rat_to_string(*ex);
                        else
                            cell = std::string(e.sign < 0 ? "-" : "") + "sqrt(" +
                                   rat_to_string(e.radicand) + ")";
                        out.text << (c ? "  " : "") << cell;
                    }
                    out.text << "\n";
                    mat.push_back(row_doc);
                }
                out.doc["matrix"] = mat;
            } else {
                YorMatrix m = perm_matrix(p, perm);
                Json mat = Json::array();
                for (int s = 0; s < m.dim; ++s) {
                    Json row_doc = Json::array();
                    for (int c = 0; c < m.dim; ++c) {
                        std::string cell = m.at(s, c).str(17);
                        row_doc.push_back(cell);
                        out.text << (c ? "  " : "") << cell;
                    }
                    out.text << "\n";
                    mat.push_back(row_doc);
                }
                out.doc["matrix"] = mat;
            }
        } else if (c_verify->parsed()) {
            auto caps = kVerifyCaps.find(suite);
            if (caps == kVerifyCaps.end()) throw UsageError("unknown verify suite: " + suite);
            if (n < 0 || n > caps->second.n || d < 1 || d > caps->second.d)
                throw UsageError("verify " + suite + " caps: n <= " +
                                 std::to_string(caps->second.n) + ", d <= " +
                                 std::to_string(caps->second.d));
            std::vector<Rat> alpha =
                suite == "variance" ? parse_alpha(alpha_csv, d) : std::vector<Rat>{};
            auto t0 = std::chrono::steady_clock::now();
            Report rep = run_suite(suite, n, d, alpha, seed, threads);
            double secs = elapsed(t0);
            report_text(out.text, rep, secs);
            out.doc["report"] = report_json(rep, secs);
            out.flush();
            return rep.pass() ? 0 : 1;
        } else if (c_dense_sc->parsed()) {
            if (n < 1 || n > kDenseMaxN || d < 1 || d > kDenseMaxD)
                throw UsageError("dense caps: n <= " + std::to_string(kDenseMaxN) +
                                 ", d <= " + std::to_string(kDenseMaxD));
            if (samples < 1 || samples > 1000) throw UsageError("--samples must lie in 1..1000");
            bool pass = true;
            Json list = Json::array();
            for (const DenseResult& res : dense_residuals(static_cast<int>(n), d, samples,
                                                          seed, tolerance)) {
                bool ok = res.residual <= res.tolerance;
                pass = pass && ok;
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6e", res.residual);
                out.text << res.name << "  max residual " << buf << (ok ? "" : "  FAIL") << "\n";
                list.push_back(Json{{"name", res.name},
                                    {"max_residual", buf},
                                    {"tolerance", res.tolerance},
                                    {"pass", ok}});
            }
            out.doc["residuals"] = list;
            out.doc["pass"] = pass;
            out.flush();
            return pass ? 0 : 1;
        } else if (c_all->parsed()) {
            if (n < 1 || n > 8 || d < 1 || d > 5) throw UsageError("all caps: n <= 8, d <= 5");
            std::vector<Rat> alpha = parse_alpha(alpha_csv, d);
            bool pass = true;
            Json suites = Json::array();
            for (const auto& [name, caps] : kVerifyCaps) {
                long ns = std::min(n, caps.n);
                int ds = std::min(d, caps.d);
                auto t0 = std::chrono::steady_clock::now();
                std::vector<Rat> a =
                    ds == d ? alpha : std::vector<Rat>(ds, Rat(1, ds));
                Report rep = run_suite(name, ns, ds, a, seed, threads);
                double secs = elapsed(t0);
                report_text(out.text, rep, secs);
                suites.push_back(report_json(rep, secs));
                pass = pass && rep.pass();
            }
            {
                int nd = static_cast<int>(std::min<long>(n, kDenseMaxN));
                int dd = std::min(d, kDenseMaxD);
                Json list = Json::array();
                for (const DenseResult& res : dense_residuals(nd, dd, samples, seed, 1e-8)) {
                    bool ok = res.residual <= res.tolerance;
                    pass = pass && ok;
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.6e", res.residual);
                    out.text << "dense " << res.name << "  max residual " << buf
                             << (ok ? "" : "  FAIL") << "\n";
                    list.push_back(Json{{"name", res.name},
                                        {"max_residual", buf},
                                        {"tolerance", res.tolerance},
                                        {"pass", ok}});
                }
                out.doc["dense"] = list;
            }
            out.doc["suites"] = suites;
            out.doc["pass"] = pass;
            out.flush();
            return pass ? 0 : 1;
        }

        out.flush();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
