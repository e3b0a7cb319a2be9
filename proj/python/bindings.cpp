// Python bindings for the main operations.  Exact rationals cross the
// boundary as "num/den" strings and exact integers as decimal strings (they
// exceed 64 bits quickly); piecewise polynomials as their JSON interchange
// form.  Callers that want numerics can float() the evaluation helpers.

#include "zetamoments/cue.hpp"
#include "zetamoments/ffpoly.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/nfvariance.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/schur.hpp"
#include "zetamoments/zetares.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace zm;

namespace {

std::vector<std::string> poly_coeffs(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(zetamoments, m) {
    m.doc() = "exact moment piecewise polynomials and divisor variance toolkit";
    m.attr("__version__") = "0.1.0";

    // ---- exact moment polynomials ----
    m.def("compute_p", [](int r, int k) { return poly_coeffs(moments::compute_P(r, k)); },
          py::arg("r"), py::arg("k"),
          "coefficients of P_{r,k} as num/den strings, ascending powers");
    m.def("compute_mk_json", [](int k) { return moments::compute_Mk(k).to_json(); }, py::arg("k"),
          "M_k as interchange JSON");
    m.def("compute_gamma_json", [](int k) { return moments::compute_gamma(k).to_json(); },
          py::arg("k"), "gamma_k as interchange JSON");
    m.def("gamma_oracle_json", [](int k) { return moments::gamma_oracle(k).to_json(); },
          py::arg("k"), "independent delta-integral route to gamma_k");
    m.def("compute_gk", [](int k) { return moments::compute_gk(k).to_string(); }, py::arg("k"));
    m.def("mk_eval", [](int k, double x) { return moments::compute_Mk(k).eval_double(x); },
          py::arg("k"), py::arg("x"));
    m.def("gamma_eval", [](int k, double x) { return moments::compute_gamma(k).eval_double(x); },
          py::arg("k"), py::arg("x"));
    m.def("vanishing_order", &moments::vanishing_order, py::arg("k"), py::arg("r"));
    m.def("uniqueness_check_k3", [] {
        auto rep = moments::uniqueness_check_k3();
        py::dict d;
        d["solution_space_dim"] = rep.solution_space_dim;
        d["consistent"] = rep.consistent;
        d["witness_json"] = rep.witness.to_json();
        return d;
    });

    // ---- unitary-group moments ----
    m.def("exact_ik", [](int k, int n, int N) { return schur::exact_Ik(k, n, N).to_string(); },
          py::arg("k"), py::arg("n"), py::arg("N"),
          "exact matrix integral I_k(n, N) as a decimal string");
    m.def("exact_itilde",
          [](int k, int m_, int N) { return schur::exact_Itilde(k, m_, N).to_string(); },
          py::arg("k"), py::arg("m"), py::arg("N"));
    m.def("fn_coeffs", [](int k, int N) {
        std::vector<std::string> out;
        for (const auto& c : schur::fN_coeffs(k, N)) out.push_back(c.to_string());
        return out;
    }, py::arg("k"), py::arg("N"));
    m.def("haar_sample", [](int N, std::uint64_t seed) {
        RngStream rng(seed, 0);
        return cue::haar_sample(N, rng).theta;
    }, py::arg("N"), py::arg("seed"));
    m.def("mc_ik", [](int k, int n, int N, std::int64_t samples, std::uint64_t seed, int workers) {
        auto est = cue::mc_Ik(k, n, N, samples, seed, workers);
        py::dict d;
        d["mean"] = est.mean;
        d["stderr"] = est.stderr_;
        d["samples"] = est.samples;
        d["seed"] = est.seed;
        d["workers"] = est.workers;
        return d;
    }, py::arg("k"), py::arg("n"), py::arg("N"), py::arg("samples"), py::arg("seed"),
          py::arg("workers") = 0);

    // ---- F_q[x] divisor variance ----
    m.def("ff_variance", [](int q, int k, int n, int h, int workers) {
        auto r = ffield::ff_variance(q, k, n, h, workers);
        py::dict d;
        d["q"] = r.q;
        d["k"] = r.k;
        d["n"] = r.n;
        d["h"] = r.h;
        d["lhs"] = r.lhs.to_string();
        d["rmt"] = r.rmt_value.to_string();
        d["main"] = r.main_term.to_string();
        return d;
    }, py::arg("q"), py::arg("k"), py::arg("n"), py::arg("h"), py::arg("workers") = 0);

    // ---- number-field statistics ----
    m.def("ak", [](int k, long pmax) { return nf::compute_ak(k, pmax).value; }, py::arg("k"),
          py::arg("pmax") = 1000000);
    m.def("ak_q", &nf::compute_ak_q, py::arg("k"), py::arg("q"), py::arg("pmax") = 1000000);
    m.def("short_interval_variance", [](int k, std::uint64_t X, double alpha, int workers) {
        double H = std::exp((1.0 - 1.0 / alpha) * std::log(static_cast<double>(X)));
        nf::SieveTable t = nf::sieve_dk(k, 2 * X + static_cast<std::uint64_t>(H) + 4);
        auto r = nf::short_interval_variance(k, X, alpha, t, nf::ZetaLaurent::standard(), workers);
        py::dict d;
        d["variance"] = r.variance;
        d["prediction"] = r.prediction;
        d["ratio"] = r.ratio;
        d["H"] = r.H;
        return d;
    }, py::arg("k"), py::arg("X"), py::arg("alpha"), py::arg("workers") = 0);
    m.def("dirichlet_mean_square", [](int k, double T, double alpha, int workers) {
        nf::SieveTable table;
        const nf::SieveTable* tp = nullptr;
        if (k >= 2) {
            auto need = static_cast<std::uint64_t>(std::pow(T, alpha)) + 2;
            table = nf::sieve_dk(k, need);
            tp = &table;
        }
        auto r = nf::dirichlet_mean_square(k, T, alpha, tp, nf::ZetaLaurent::standard(), workers);
        py::dict d;
        d["value"] = r.value;
        d["normalized"] = r.normalized;
        d["target"] = r.target;
        d["nodes"] = r.nodes;
        return d;
    }, py::arg("k"), py::arg("T"), py::arg("alpha"), py::arg("workers") = 0);
}
