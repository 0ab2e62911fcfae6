#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppz/dirichlet.hpp"
#include "ppz/errors.hpp"
#include "ppz/hlconstants.hpp"
#include "ppz/kernels.hpp"
#include "ppz/parallel.hpp"
#include "ppz/sieve.hpp"
#include "ppz/special.hpp"
#include "ppz/zetazeros.hpp"

namespace py = pybind11;
using cplx = std::complex<double>;

namespace {

py::dict series_dict(const ppz::SeriesResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["terms_used"] = r.terms_used;
    d["truncation"] = r.truncation;
    d["tail_estimate"] = r.tail_estimate;
    d["tail_is_bound"] = r.tail_is_bound;
    if (r.cutoff) d["cutoff"] = r.cutoff->value;
    return d;
}

ppz::CutoffR cutoff_for(const ppz::ZeroSet& zeros, std::optional<double> target) {
    return target ? ppz::choose_cutoff(zeros, *target) : ppz::cutoff_after_count(zeros, zeros.size());
}

}  // namespace

PYBIND11_MODULE(_ppz, m) {
    m.doc() = "Prime pairs, Hardy-Littlewood constants and zeta-zero sums";

    auto base = py::register_exception<ppz::Error>(m, "PpzError");
    py::register_exception<ppz::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ppz::CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<ppz::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ppz::ConfigError>(m, "ConfigError", base.ptr());

    m.def("set_threads", &ppz::set_thread_count, py::arg("count"));

    py::class_<ppz::PrimeTable>(m, "PrimeTable")
        .def_static("build", [](std::uint64_t limit) { return ppz::PrimeTable::build(limit); }, py::arg("limit"))
        .def_property_readonly("limit", &ppz::PrimeTable::limit)
        .def("is_prime", &ppz::PrimeTable::is_prime)
        .def("von_mangoldt", &ppz::PrimeTable::von_mangoldt)
        .def("prime_count", &ppz::PrimeTable::prime_count);

    m.def(
        "count_prime_pairs",
        [](std::uint64_t two_r, std::vector<std::uint64_t> checkpoints) {
            if (checkpoints.empty()) throw ppz::DomainError("no checkpoints");
            const auto table = ppz::PrimeTable::build(checkpoints.back() + two_r);
            std::vector<std::uint64_t> out;
            for (const auto& rec : ppz::count_prime_pairs(table, two_r, checkpoints)) out.push_back(rec.count);
            return out;
        },
        py::arg("two_r"), py::arg("checkpoints"));

    m.def("twin_prime_constant", &ppz::twin_prime_constant, py::arg("prime_limit") = 10'000'000);
    m.def(
        "c2r_ratio",
        [](std::uint64_t r) {
            const auto q = ppz::c2r_ratio(r);
            return py::make_tuple(q.num, q.den);
        },
        py::arg("half_gap"));
    m.def("c_2r", &ppz::c_2r, py::arg("half_gap"));
    m.def("singular_sum", &ppz::singular_sum, py::arg("terms"));
    m.def("li2", &ppz::li2, py::arg("upto"));

    py::class_<ppz::SievingKernel>(m, "Kernel")
        .def_static("fejer", &ppz::SievingKernel::fejer)
        .def_static("jackson", &ppz::SievingKernel::jackson)
        .def_static("from_name", &ppz::SievingKernel::from_name)
        .def_property_readonly("name", &ppz::SievingKernel::name)
        .def_property_readonly("area", &ppz::SievingKernel::area)
        .def("E", &ppz::SievingKernel::eval_E)
        .def("E_hat", &ppz::SievingKernel::eval_E_hat, py::arg("lambda_"), py::arg("freq"))
        .def("mellin", [](const ppz::SievingKernel& k, double lambda, cplx z) {
            return ppz::mellin_M(k, lambda, z).value;
        }, py::arg("lambda_"), py::arg("arg"));
    m.def("remainder_R", &ppz::remainder_R, py::arg("lambda_"), py::arg("kernel"));

    m.def("gamma", &ppz::special::gamma, py::arg("arg"));
    m.def("zeta", &ppz::special::zeta, py::arg("point"));
    m.def("zeta_log_deriv", [](cplx point) { return ppz::special::zeta_log_deriv(point); }, py::arg("point"));

    py::class_<ppz::ZeroSet>(m, "ZeroSet")
        .def_static("load", [](const std::string& path) { return ppz::load_zeros(path); }, py::arg("path"))
        .def_static("parse", &ppz::parse_zeros, py::arg("text"), py::arg("source") = "text")
        .def("__len__", &ppz::ZeroSet::size)
        .def("__getitem__", [](const ppz::ZeroSet& z, std::size_t i) {
            if (i >= z.size()) throw py::index_error();
            return z[i];
        })
        .def("count_up_to", &ppz::ZeroSet::count_up_to)
        .def("truncated", &ppz::ZeroSet::truncated)
        .def_property_readonly("source", &ppz::ZeroSet::source);

    m.def("choose_cutoff", [](const ppz::ZeroSet& z, double target) {
        const auto c = ppz::choose_cutoff(z, target);
        return py::make_tuple(c.value, c.lower, c.upper, c.below_first_zero);
    });
    m.def(
        "sigma1",
        [](cplx point, double lambda, const ppz::SievingKernel& k, const ppz::ZeroSet& z,
           std::optional<double> cutoff) {
            return series_dict(ppz::sigma1(point, lambda, k, z, cutoff_for(z, cutoff)));
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("zeros"), py::arg("cutoff") = py::none());
    m.def(
        "sigma2_square",
        [](cplx point, double lambda, const ppz::SievingKernel& k, const ppz::ZeroSet& z,
           std::optional<double> cutoff) {
            return series_dict(ppz::sigma2_square(point, lambda, k, z, cutoff_for(z, cutoff)));
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("zeros"), py::arg("cutoff") = py::none());
    m.def(
        "sigma4",
        [](cplx point, double lambda, const ppz::SievingKernel& k, const ppz::ZeroSet& z) {
            const auto r = ppz::sigma4(point, lambda, k, z);
            py::dict d = series_dict(r.total);
            d["diagonal"] = r.diagonal;
            return d;
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("zeros"));
    m.def(
        "g_lambda",
        [](cplx point, double lambda, const ppz::SievingKernel& k, const ppz::ZeroSet& z,
           std::optional<double> cutoff) {
            return series_dict(ppz::g_lambda(point, lambda, k, z, cutoff_for(z, cutoff)));
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("zeros"), py::arg("cutoff") = py::none());
    m.def(
        "pair_correlation",
        [](double alpha, const ppz::ZeroSet& z, double height) {
            const auto f = ppz::pair_correlation_F(alpha, z, height);
            return py::make_tuple(f.value, f.imag_part);
        },
        py::arg("alpha"), py::arg("zeros"), py::arg("height"));
    m.def(
        "omega_probe",
        [](double lambda, const ppz::SievingKernel& k, const ppz::ZeroSet& z, std::vector<double> deltas) {
            const auto rep = ppz::omega_probe(lambda, k, z, deltas);
            py::list rows;
            for (const auto& r : rep.rows) rows.append(py::make_tuple(r.delta, r.scaled, r.scaled_tail));
            py::dict d;
            d["rows"] = rows;
            d["estimate"] = rep.estimate;
            d["label"] = rep.label;
            return d;
        },
        py::arg("lambda_"), py::arg("kernel"), py::arg("zeros"), py::arg("deltas"));

    m.def(
        "d_2r",
        [](cplx point, std::uint64_t two_r, std::uint64_t n_terms, const ppz::PrimeTable& t) {
            return series_dict(ppz::d_2r(point, two_r, ppz::TruncationPlan::make(point, n_terms), t));
        },
        py::arg("point"), py::arg("two_r"), py::arg("n_terms"), py::arg("table"));
    m.def(
        "t_lambda",
        [](cplx point, double lambda, const ppz::SievingKernel& k, std::uint64_t n_terms, const ppz::PrimeTable& t) {
            return series_dict(ppz::t_lambda_expansion(point, lambda, k, ppz::TruncationPlan::make(point, n_terms), t));
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("n_terms"), py::arg("table"));
    m.def(
        "v_lambda",
        [](cplx point, double lambda, const ppz::SievingKernel& k, std::uint64_t n_terms, const ppz::PrimeTable& t) {
            return series_dict(ppz::v_lambda(point, lambda, k, ppz::TruncationPlan::make(point, n_terms), t));
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("n_terms"), py::arg("table"));
    m.def(
        "expansion_residual",
        [](cplx point, double lambda, const ppz::SievingKernel& k, std::uint64_t n_terms, const ppz::PrimeTable& t) {
            return ppz::expansion_identity(point, lambda, k, ppz::TruncationPlan::make(point, n_terms), t).relative;
        },
        py::arg("point"), py::arg("lambda_"), py::arg("kernel"), py::arg("n_terms"), py::arg("table"));
}
