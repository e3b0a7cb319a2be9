// zetamoments command line: exact moment polynomials, CUE secular-coefficient
// moments, F_q[x] divisor variance, number-field divisor statistics, and the
// verification suites.
//
// Every run writes its primary output to stdout (or --out FILE) and a
// reproducibility manifest to stderr: command line, seed, worker count,
// version, wall time, and an FNV-1a checksum of the primary bytes.  Exact
// commands are byte-reproducible; Monte Carlo commands are deterministic
// given (seed, workers).

#include "zetamoments/cue.hpp"
#include "zetamoments/ffpoly.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/nfvariance.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/schur.hpp"
#include "zetamoments/verify.hpp"
#include "zetamoments/zetares.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace zm;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Output {
    std::string format = "json";  // json | csv | latex
    std::ostringstream buf;

    void rows(const std::vector<json>& items, const std::vector<std::string>& columns) {
        if (format == "csv") {
            for (std::size_t i = 0; i < columns.size(); ++i)
                buf << (i ? "," : "") << csv_field(columns[i]);
            buf << "\n";
            for (const auto& item : items) {
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    const auto& v = item.at(columns[i]);
                    std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
                    buf << (i ? "," : "") << csv_field(cell);
                }
                buf << "\n";
            }
        } else {
            for (const auto& item : items) buf << item.dump() << "\n";
        }
    }
};

std::string piece_latex(const Poly& p) {
    std::string s = p.to_string("\\alpha");
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            out += "^{";
            std::size_t j = i + 1;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) out += s[j++];
            out += "}";
            i = j - 1;
        } else if (s[i] == '*') {
            out += "\\,";
        } else {
            out += s[i];
        }
    }
    return out;
}

void emit_piecewise(Output& out, const PiecewisePoly& f, const std::string& name, int k) {
    if (out.format == "latex") {
        // print k^2! * f with the normalization factored out, matching the
        // published displays
        BigInt norm = BigInt::factorial(static_cast<unsigned long>(k * k));
        PiecewisePoly scaled = f.scaled(Rational(norm));
        out.buf << name << "(\\alpha) = \\frac{1}{" << norm.to_string() << "}\\cdot\\begin{cases}\n";
        const auto& bp = scaled.breakpoints();
        for (std::size_t i = 0; i < scaled.pieces().size(); ++i) {
            out.buf << "  " << piece_latex(scaled.pieces()[i]) << " & " << bp[i].to_string()
                    << " \\le \\alpha < " << bp[i + 1].to_string() << " \\\\\n";
        }
        out.buf << "  " << piece_latex(scaled.tail()) << " & " << bp.back().to_string()
                << " \\le \\alpha\n\\end{cases}\n";
    } else {
        out.buf << f.to_json() << "\n";
    }
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int workers, Output& out) {
    if (!verify::known_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "' (expected exact|rmt|ffield|nf|all)\n";
        return 2;
    }
    verify::Context ctx(seed, workers);
    std::ostringstream report;
    auto outcome = verify::run_suite(suite, ctx, report);
    out.buf << report.str();
    out.buf << outcome.passed << " passed, " << outcome.failed << " failed\n";
    return outcome.failed == 0 ? 0 : 1;
}

std::vector<int> parse_range(const std::string& text) {
    // "a..b" or a single integer
    auto dots = text.find("..");
    std::vector<int> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoi(text));
    } else {
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        for (int v = a; v <= b; ++v) out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetamoments: exact moment piecewise polynomials and divisor variance toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int workers = default_workers();
    std::string format = "json";
    std::string out_path;
    app.add_option("--seed", seed, "random seed for sampling commands");
    app.add_option("--workers", workers, "worker threads (exact paths are worker-invariant)");
    app.add_option("--format", format, "output format: json, csv, latex (poly only)")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--out", out_path, "write primary output to FILE instead of stdout");

    // ---- poly ----
    auto* poly = app.add_subcommand("poly", "exact piecewise moment polynomials");
    poly->require_subcommand(1);
    int pk = 2, pr = 0;
    auto* poly_mk = poly->add_subcommand("mk", "mean-square profile M_k");
    poly_mk->add_option("--k", pk, "moment order")->required();
    auto* poly_gamma = poly->add_subcommand("gamma", "variance profile gamma_k");
    poly_gamma->add_option("--k", pk, "moment order")->required();
    auto* poly_p = poly->add_subcommand("p", "residue polynomial P_{r,k}");
    poly_p->add_option("--k", pk, "moment order")->required();
    poly_p->add_option("--r", pr, "center count r")->required();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    ver->add_option("--suite", suite, "exact | rmt | ffield | nf | all");

    // ---- rmt ----
    auto* rmt = app.add_subcommand("rmt", "CUE secular-coefficient moments");
    rmt->require_subcommand(1);
    int rN = 8, rk = 2, rn = 1;
    std::string rn_range = "1";
    std::int64_t rsamples = 100000;
    auto* rmt_sample = rmt->add_subcommand("sample", "draw one Haar-unitary sample");
    rmt_sample->add_option("--N", rN, "matrix dimension")->required();
    auto* rmt_exact = rmt->add_subcommand("exact", "exact I_k(n, N) via the Schur oracle");
    rmt_exact->add_option("--k", rk)->required();
    rmt_exact->add_option("--N", rN)->required();
    rmt_exact->add_option("--n", rn_range, "n or range a..b")->required();
    auto* rmt_mc = rmt->add_subcommand("mc", "Monte Carlo estimate of I_k(n, N)");
    rmt_mc->add_option("--k", rk)->required();
    rmt_mc->add_option("--N", rN)->required();
    rmt_mc->add_option("--n", rn)->required();
    rmt_mc->add_option("--samples", rsamples);
    auto* rmt_ffik = rmt->add_subcommand("ffik", "exact vs gamma_k asymptotic");
    rmt_ffik->add_option("--k", rk)->required();
    rmt_ffik->add_option("--N", rN)->required();
    rmt_ffik->add_option("--n", rn_range, "n or range a..b")->required();
    auto* rmt_fn = rmt->add_subcommand("fn", "coefficient list of F_N");
    rmt_fn->add_option("--k", rk)->required();
    rmt_fn->add_option("--N", rN)->required();

    // ---- ffield ----
    auto* ff = app.add_subcommand("ffield", "divisor variance over F_q[x]");
    ff->require_subcommand(1);
    int fq = 3, fk = 2, fn = 6, fh = 1;
    std::vector<int> fqs;
    auto* ff_var = ff->add_subcommand("variance", "exact interval variance at one q");
    ff_var->set_help_flag("--help", "print help");  // frees -h for the interval parameter
    ff_var->add_option("--q", fq)->required();
    ff_var->add_option("--k", fk)->required();
    ff_var->add_option("--n", fn)->required();
    ff_var->add_option("-h,--h", fh)->required();
    auto* ff_sweep = ff->add_subcommand("sweep", "q-sweep with sqrt(q)-scaled comparison");
    ff_sweep->set_help_flag("--help", "print help");
    ff_sweep->add_option("--k", fk)->required();
    ff_sweep->add_option("--n", fn)->required();
    ff_sweep->add_option("-h,--h", fh)->required();
    ff_sweep->add_option("--q", fqs, "prime moduli (repeatable)")->required();

    // ---- nf ----
    auto* nfc = app.add_subcommand("nf", "number-field divisor statistics");
    nfc->require_subcommand(1);
    int nk = 2;
    std::uint64_t nX = 1000000;
    std::vector<std::uint64_t> nXs;
    double nalpha = 1.5, nT = 10000.0;
    std::vector<long> nqs;
    long npmax = 1000000, nq_single = 0;
    auto* nf_sieve = nfc->add_subcommand("sieve", "build a d_k table and report its checksum");
    nf_sieve->add_option("--k", nk)->required();
    nf_sieve->add_option("--X", nX)->required();
    auto* nf_var = nfc->add_subcommand("variance", "short-interval variance V_k(X, X^(1-1/alpha))");
    nf_var->add_option("--k", nk)->required();
    nf_var->add_option("--X", nXs, "sample sizes (repeatable)")->required();
    nf_var->add_option("--alpha", nalpha)->required();
    auto* nf_ap = nfc->add_subcommand("ap", "progression variance W_k(X; q)");
    nf_ap->add_option("--k", nk)->required();
    nf_ap->add_option("--X", nXs, "sample sizes (repeatable; alpha sweep at fixed q)")->required();
    nf_ap->add_option("--q", nqs, "prime moduli (repeatable; q sweep at fixed X)")->required();
    auto* nf_dir = nfc->add_subcommand("dirichlet", "Dirichlet-polynomial mean square I_k(T, T^alpha)");
    nf_dir->add_option("--k", nk)->required();
    nf_dir->add_option("--T", nT)->required();
    nf_dir->add_option("--alpha", nalpha)->required();
    auto* nf_ak = nfc->add_subcommand("ak", "arithmetic factor a_k (optionally with a deleted prime)");
    nf_ak->add_option("--k", nk)->required();
    nf_ak->add_option("--pmax", npmax);
    nf_ak->add_option("--q", nq_single, "deleted prime (a_k(q))");

    // global flags remain valid after subcommand names
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    for (auto* sub : app.get_subcommands({})) enable_fallthrough(sub);

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.format = format;
    auto t_start = std::chrono::steady_clock::now();
    int exit_code = 0;
    json manifest_extra;

    try {
        if (poly->parsed()) {
            if (poly_mk->parsed()) emit_piecewise(out, moments::compute_Mk(pk), "\\mathcal{M}_" + std::to_string(pk), pk);
            if (poly_gamma->parsed()) {
                if (format == "latex") {
                    // gamma uses the same normalization convention as M_k
                    emit_piecewise(out, moments::compute_gamma(pk), "\\gamma_" + std::to_string(pk), pk);
                } else {
                    out.buf << moments::compute_gamma(pk).to_json() << "\n";
                }
            }
            if (poly_p->parsed()) {
                Poly p = moments::compute_P(pr, pk);
                if (format == "latex") {
                    out.buf << "P_{" << pr << "," << pk << "}(\\alpha) = " << piece_latex(p) << "\n";
                } else {
                    json row;
                    row["k"] = pk;
                    row["r"] = pr;
                    row["degree"] = p.degree();
                    json coeffs = json::array();
                    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
                    row["coeffs"] = coeffs;
                    out.rows({row}, {"k", "r", "degree", "coeffs"});
                }
            }
        } else if (ver->parsed()) {
            exit_code = cmd_verify(suite, seed, workers, out);
        } else if (rmt->parsed()) {
            if (rmt_sample->parsed()) {
                RngStream rng(seed, 0);
                auto ang = cue::haar_sample(rN, rng);
                auto sc = cue::secular_coeffs(ang);
                json row;
                row["N"] = rN;
                row["seed"] = seed;
                row["theta"] = ang.theta;
                json mods = json::array();
                for (const auto& c : sc.sc) mods.push_back(std::abs(c));
                row["sc_abs"] = mods;
                out.rows({row}, {"N", "seed", "theta", "sc_abs"});
            }
            if (rmt_exact->parsed()) {
                std::vector<json> rows;
                for (int n : parse_range(rn_range)) {
                    json row;
                    row["k"] = rk;
                    row["n"] = n;
                    row["N"] = rN;
                    row["exact"] = schur::exact_Ik(rk, n, rN).to_string();
                    rows.push_back(row);
                }
                out.rows(rows, {"k", "n", "N", "exact"});
            }
            if (rmt_mc->parsed()) {
                auto est = cue::mc_Ik(rk, rn, rN, rsamples, seed, workers);
                json row;
                row["k"] = rk;
                row["n"] = rn;
                row["N"] = rN;
                row["mc_mean"] = est.mean;
                row["mc_stderr"] = est.stderr_;
                row["samples"] = est.samples;
                row["seed"] = est.seed;
                row["workers"] = est.workers;
                out.rows({row}, {"k", "n", "N", "mc_mean", "mc_stderr", "samples", "seed", "workers"});
            }
            if (rmt_ffik->parsed()) {
                std::vector<json> rows;
                for (const auto& r : schur::check_ffik(rk, rN, parse_range(rn_range))) {
                    json row;
                    row["k"] = rk;
                    row["n"] = r.n;
                    row["N"] = rN;
                    row["exact"] = r.exact.to_string();
                    row["asymptotic"] = r.asymptotic.to_double();
                    row["scaled_diff"] = r.scaled_diff.to_double();
                    rows.push_back(row);
                }
                out.rows(rows, {"k", "n", "N", "exact", "asymptotic", "scaled_diff"});
            }
            if (rmt_fn->parsed()) {
                json row;
                row["k"] = rk;
                row["N"] = rN;
                json coeffs = json::array();
                for (const auto& c : schur::fN_coeffs(rk, rN)) coeffs.push_back(c.to_string());
                row["coeffs"] = coeffs;
                out.rows({row}, {"k", "N", "coeffs"});
            }
        } else if (ff->parsed()) {
            if (ff_var->parsed()) {
                auto r = ffield::ff_variance(fq, fk, fn, fh, workers);
                json row;
                row["q"] = r.q;
                row["k"] = r.k;
                row["n"] = r.n;
                row["h"] = r.h;
                row["lhs"] = r.lhs.to_string();
                row["rmt"] = r.rmt_value.to_string();
                row["main"] = r.main_term.to_string();
                out.rows({row}, {"q", "k", "n", "h", "lhs", "rmt", "main"});
            }
            if (ff_sweep->parsed()) {
                std::vector<json> rows;
                for (const auto& r : ffield::ff_variance_sweep(fk, fn, fh, fqs, workers)) {
                    json row;
                    row["q"] = r.q;
                    row["k"] = fk;
                    row["n"] = fn;
                    row["h"] = fh;
                    row["lhs_over_qh1"] = r.lhs_over_qh1.to_string();
                    row["rmt"] = r.rmt_value.to_string();
                    row["scaled_abs_diff"] = r.scaled_abs_diff;
                    rows.push_back(row);
                }
                out.rows(rows, {"q", "k", "n", "h", "lhs_over_qh1", "rmt", "scaled_abs_diff"});
            }
        } else if (nfc->parsed()) {
            const auto& laurent = nf::ZetaLaurent::standard();
            manifest_extra["stieltjes_digits"] =
                static_cast<int>(laurent.literals[0].size()) - 2;  // minus "0."
            if (nf_sieve->parsed()) {
                nf::SieveTable t = nf::sieve_dk(nk, nX);
                std::uint64_t sum = 0;
                for (std::uint64_t n = 1; n <= nX; ++n) sum += t.dk(n);
                json row;
                row["k"] = nk;
                row["X"] = nX;
                row["checksum"] = t.checksum();
                row["sum"] = sum;
                out.rows({row}, {"k", "X", "checksum", "sum"});
            }
            if (nf_var->parsed()) {
                std::vector<json> rows;
                for (std::uint64_t X : nXs) {
                    double H = std::exp((1.0 - 1.0 / nalpha) * std::log(static_cast<double>(X)));
                    nf::SieveTable t = nf::sieve_dk(nk, 2 * X + static_cast<std::uint64_t>(H) + 4);
                    manifest_extra["sieve_checksums"].push_back(t.checksum());
                    auto r = nf::short_interval_variance(nk, X, nalpha, t, laurent, workers);
                    json row;
                    row["k"] = r.k;
                    row["X"] = r.X;
                    row["alpha"] = r.alpha;
                    row["H"] = r.H;
                    row["variance"] = r.variance;
                    row["prediction"] = r.prediction;
                    row["ratio"] = r.ratio;
                    row["delta_mean"] = r.delta_mean;
                    row["ak"] = r.ak;
                    rows.push_back(row);
                }
                out.rows(rows, {"k", "X", "alpha", "H", "variance", "prediction", "ratio",
                                "delta_mean", "ak"});
            }
            if (nf_ap->parsed()) {
                std::vector<json> rows;
                for (std::uint64_t X : nXs) {
                    nf::SieveTable t = nf::sieve_dk(nk, X);
                    manifest_extra["sieve_checksums"].push_back(t.checksum());
                    for (long q : nqs) {
                        auto r = nf::ap_variance(nk, X, q, t, laurent, workers);
                        json row;
                        row["k"] = r.k;
                        row["X"] = r.X;
                        row["q"] = r.q;
                        row["alpha"] = r.alpha;
                        row["wk"] = r.wk;
                        row["prediction"] = r.prediction;
                        row["ratio"] = r.ratio;
                        row["ak_q"] = r.ak_q;
                        rows.push_back(row);
                    }
                }
                out.rows(rows, {"k", "X", "q", "alpha", "wk", "prediction", "ratio", "ak_q"});
            }
            if (nf_dir->parsed()) {
                nf::SieveTable table;
                const nf::SieveTable* tp = nullptr;
                if (nk >= 2) {
                    std::uint64_t need = static_cast<std::uint64_t>(std::pow(nT, nalpha)) + 2;
                    table = nf::sieve_dk(nk, need);
                    manifest_extra["sieve_checksums"].push_back(table.checksum());
                    tp = &table;
                }
                auto r = nf::dirichlet_mean_square(nk, nT, nalpha, tp, laurent, workers);
                json row;
                row["k"] = r.k;
                row["T"] = r.T;
                row["alpha"] = r.alpha;
                row["N"] = r.N;
                row["value"] = r.value;
                row["normalized"] = r.normalized;
                row["target"] = r.target;
                row["ak"] = r.ak;
                row["nodes"] = r.nodes;
                out.rows({row}, {"k", "T", "alpha", "N", "value", "normalized", "target", "ak",
                                 "nodes"});
            }
            if (nf_ak->parsed()) {
                json row;
                row["k"] = nk;
                row["pmax"] = npmax;
                if (nq_single > 0) {
                    row["q"] = nq_single;
                    row["ak_q"] = nf::compute_ak_q(nk, nq_single, npmax);
                } else {
                    auto a = nf::compute_ak(nk, npmax);
                    row["ak"] = a.value;
                    row["tail_bound"] = a.tail_bound;
                }
                out.rows({row}, nq_single > 0 ? std::vector<std::string>{"k", "pmax", "q", "ak_q"}
                                              : std::vector<std::string>{"k", "pmax", "ak",
                                                                         "tail_bound"});
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    // primary output
    std::string bytes = out.buf.str();
    if (out_path.empty()) {
        std::cout << bytes;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        f << bytes;
    }

    // manifest on stderr
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    json manifest;
    std::string cmdline;
    for (int i = 0; i < argc; ++i) {
        if (i) cmdline += " ";
        cmdline += argv[i];
    }
    manifest["command"] = cmdline;
    manifest["seed"] = seed;
    manifest["workers"] = workers;
    manifest["versions"] = {{"zetamoments", kVersion}};
    manifest["wall_time_s"] = wall;
    for (auto& [key, value] : manifest_extra.items()) manifest[key] = value;
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    manifest["output"] = {{"destination", out_path.empty() ? "stdout" : out_path},
                          {"bytes", bytes.size()},
                          {"fnv64", std::string(hex)}};
    std::cerr << manifest.dump() << "\n";
    return exit_code;
}
