#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidcheck/matrix_json.hpp"
#include "braidcheck/suite.hpp"

namespace py = pybind11;
using namespace braidcheck;

namespace {

std::optional<Rational> opt_rat(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return parse_rational(*s);
}

SuiteOptions make_options(std::uint64_t seed, int points, const std::optional<std::string>& q) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.points = points;
    opt.q = opt_rat(q);
    return opt;
}

std::string report_json(const CheckReport& rep) { return rep.to_json().dump(2); }

std::vector<std::vector<std::string>> matrix_entries(const TensorOp& t) {
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < t.dim(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < t.dim(); ++c) row.push_back(write_scalar(t.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of braided R-matrix structures, generalized Yangians, "
              "and braided KZ systems";

    py::register_exception<Error>(m, "BraidcheckError");

    m.def("catalog_names", &catalog_names);

    m.def(
        "scalar_roundtrip",
        [](const std::string& s) { return write_scalar(parse_scalar(s)); },
        py::arg("literal"), "Parse a scalar literal and write it back in canonical form");

    m.def(
        "scalar_eval",
        [](const std::string& s, const std::string& q0) {
            return rational_str(parse_scalar(s).evaluate(parse_rational(q0)));
        },
        py::arg("literal"), py::arg("q"), "Exact evaluation of a scalar literal at rational q");

    m.def(
        "braiding_matrix",
        [](const std::string& spec) { return matrix_entries(resolve_braiding(spec).op); },
        py::arg("spec"), "Catalog braiding as a matrix of scalar literals");

    m.def(
        "matrix_json_roundtrip",
        [](const std::string& text) {
            return tensorop_to_json(tensorop_from_json(nlohmann::ordered_json::parse(text))).dump();
        },
        py::arg("json_text"), "Parse a matrix file body and re-serialize it canonically");

    m.def(
        "baxterized_at",
        [](const std::string& spec, const std::string& kind, const std::string& u, const std::string& v,
           const std::optional<std::string>& q) {
            CurrentR rc = baxterize(resolve_braiding(spec, opt_rat(q)), parse_kind(kind), opt_rat(q));
            return matrix_entries(rc.eval(parse_rational(u), parse_rational(v)));
        },
        py::arg("spec"), py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("q") = std::nullopt,
        "Current R-matrix R(u,v) as a matrix of scalar literals");

    m.def(
        "constant_r",
        [](const std::string& R, const std::string& F) {
            return matrix_entries(constant_r_from_expansion(resolve_braiding(R), resolve_braiding(F)));
        },
        py::arg("R"), py::arg("F"), "Constant braided r-matrix from the q=1 expansion of R(q) F");

    m.def(
        "check_braiding",
        [](const std::string& spec, const std::optional<std::string>& q) {
            return report_json(run_braiding_suite(resolve_braiding(spec, opt_rat(q))));
        },
        py::arg("spec"), py::arg("q") = std::nullopt);

    m.def(
        "check_compat",
        [](const std::string& R, const std::string& F) {
            Braiding rb = resolve_braiding(R);
            Braiding fb = (F == "same") ? rb : resolve_braiding(F);
            return report_json(run_compat_suite(rb, fb));
        },
        py::arg("R"), py::arg("F"));

    m.def(
        "check_baxter",
        [](const std::string& R, const std::string& kind, int points, std::uint64_t seed,
           const std::optional<std::string>& q) {
            SuiteOptions opt = make_options(seed, points, q);
            return report_json(run_baxter_suite(resolve_braiding(R, opt.q), parse_kind(kind), opt));
        },
        py::arg("R"), py::arg("kind"), py::arg("points") = 10, py::arg("seed") = 42,
        py::arg("q") = std::nullopt);

    m.def(
        "check_rstructs",
        [](const std::string& R, const std::string& F, int points, std::uint64_t seed) {
            SuiteOptions opt = make_options(seed, points, std::nullopt);
            Braiding rb = resolve_braiding(R);
            Braiding fb = (F == "same") ? rb : resolve_braiding(F);
            return report_json(run_rstructs_suite(rb, fb, opt));
        },
        py::arg("R"), py::arg("F"), py::arg("points") = 10, py::arg("seed") = 42);

    m.def(
        "check_kz",
        [](const std::string& kind, const std::string& F, int n, const std::string& g,
           const std::string& kappa, int points, std::uint64_t seed, const std::optional<std::string>& R) {
            SuiteOptions opt = make_options(seed, points, std::nullopt);
            opt.n = n;
            opt.g_spec = g;
            opt.kappa = parse_rational(kappa);
            std::optional<Braiding> rb;
            if (R) rb = resolve_braiding(*R);
            return report_json(run_kz_suite(parse_kind(kind), resolve_braiding(F), opt, rb));
        },
        py::arg("kind"), py::arg("F"), py::arg("n") = 3, py::arg("g") = "id", py::arg("kappa") = "1/2",
        py::arg("points") = 10, py::arg("seed") = 42, py::arg("R") = std::nullopt);

    m.def(
        "check_qkz",
        [](const std::string& R, const std::string& F, const std::string& kind, int n, const std::string& g,
           const std::string& p, const std::string& kappa, int points, std::uint64_t seed,
           const std::optional<std::string>& q) {
            SuiteOptions opt = make_options(seed, points, q);
            opt.n = n;
            opt.g_spec = g;
            opt.shift_p = parse_rational(p);
            opt.kappa = parse_rational(kappa);
            Braiding rb = resolve_braiding(R, opt.q);
            Braiding fb = (F == "same") ? rb : resolve_braiding(F);
            return report_json(run_qkz_suite(rb, fb, parse_kind(kind), opt));
        },
        py::arg("R"), py::arg("F"), py::arg("kind"), py::arg("n") = 3, py::arg("g") = "id",
        py::arg("p") = "1", py::arg("kappa") = "1", py::arg("points") = 10, py::arg("seed") = 42,
        py::arg("q") = std::nullopt);

    m.def(
        "check_bethe",
        [](const std::string& R, const std::string& F, const std::string& kind, int k, int p, int K,
           int bound_a, int bound_b, const std::optional<std::string>& q, bool t0_identity,
           bool certificates) {
            SuiteOptions opt = make_options(42, 10, q);
            opt.k = k;
            opt.p = p;
            opt.K = K;
            opt.bound_a = bound_a;
            opt.bound_b = bound_b;
            opt.t0_identity = t0_identity;
            opt.keep_certificates = certificates;
            Braiding rb = resolve_braiding(R, opt.q);
            Braiding fb = (F == "same") ? rb : resolve_braiding(F, opt.q);
            return report_json(run_bethe_suite(rb, fb, parse_kind(kind), opt));
        },
        py::arg("R"), py::arg("F"), py::arg("kind"), py::arg("k") = 1, py::arg("p") = 1, py::arg("K") = 2,
        py::arg("bound_a") = 2, py::arg("bound_b") = 2, py::arg("q") = std::nullopt,
        py::arg("t0_identity") = false, py::arg("certificates") = true);

    m.def(
        "check_newton",
        [](const std::string& R, const std::string& F, const std::string& kind, int k, int K,
           const std::optional<std::string>& q) {
            SuiteOptions opt = make_options(42, 10, q);
            opt.k = k;
            opt.K = K;
            Braiding rb = resolve_braiding(R, opt.q);
            Braiding fb = (F == "same") ? rb : resolve_braiding(F, opt.q);
            return report_json(run_newton_suite(rb, fb, parse_kind(kind), opt));
        },
        py::arg("R"), py::arg("F"), py::arg("kind"), py::arg("k") = 2, py::arg("K") = 2,
        py::arg("q") = std::nullopt);

    m.def(
        "check_all",
        [](std::uint64_t seed, int points) {
            SuiteOptions opt = make_options(seed, points, std::nullopt);
            return report_json(run_full_suite(opt));
        },
        py::arg("seed") = 42, py::arg("points") = 5);
}
