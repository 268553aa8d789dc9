#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "discgrowth/measure_io.hpp"

namespace py = pybind11;
namespace dg = discgrowth;

namespace {

dg::DiscPoint point(std::complex<double> z) { return dg::DiscPoint(z); }

dg::ZeroSequence zeros_from_list(
    const std::vector<std::pair<std::complex<double>, double>>& entries) {
    dg::ZeroSequence zeros;
    for (const auto& [z, m] : entries) zeros.push_back({dg::DiscPoint(z), m});
    return zeros;
}

py::dict fit_dict(const dg::GrowthFit& fit) {
    py::dict d;
    d["exponent"] = fit.exponent;
    d["amplitude"] = fit.amplitude;
    d["r_squared"] = fit.r_squared;
    d["degenerate"] = fit.degenerate;
    py::list grid;
    for (const auto& [x, F] : fit.grid) grid.append(py::make_tuple(x, F));
    d["grid"] = grid;
    return d;
}

py::dict report_dict(const dg::VerificationReport& report) {
    py::dict d;
    d["relation_checked"] = report.relation_checked;
    d["gamma_box"] = fit_dict(report.gamma_box);
    d["gamma_means"] = fit_dict(report.gamma_means);
    d["consistent"] = report.consistent;
    d["tolerance"] = report.tolerance;
    d["direction"] = report.direction;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Blaschke products, complete measures, Carleson-box statistics and "
              "integral-means growth on the unit disc";

    // disc geometry
    m.def(
        "mobius_a",
        [](std::complex<double> z, std::complex<double> zeta) {
            return dg::mobius_A(point(z), point(zeta));
        },
        py::arg("z"), py::arg("zeta"), "(1-|zeta|^2)/(1-z*conj(zeta))");
    m.def(
        "pseudo_distance",
        [](std::complex<double> z, std::complex<double> w) {
            return dg::pseudo_distance(point(z), point(w));
        },
        py::arg("z"), py::arg("w"));

    py::class_<dg::CarlesonBox>(m, "CarlesonBox")
        .def(py::init<double, double>(), py::arg("phi"), py::arg("delta"));
    m.def(
        "carleson_box_contains",
        [](double phi, double delta, std::complex<double> zeta) {
            return dg::region_contains(dg::CarlesonBox(phi, delta), point(zeta));
        },
        py::arg("phi"), py::arg("delta"), py::arg("zeta"));

    // kernels
    m.def("log_primary_factor", &dg::log_primary_factor, py::arg("w"), py::arg("s"),
          "log|E(w,s)| of the Weierstrass primary factor");
    m.def(
        "kernel_k",
        [](std::complex<double> z, std::complex<double> zeta) {
            return dg::kernel_K(point(z), point(zeta));
        },
        py::arg("z"), py::arg("zeta"));
    m.def(
        "kernel_ks",
        [](std::complex<double> z, std::complex<double> zeta, int s) {
            return dg::kernel_Ks(point(z), point(zeta), s);
        },
        py::arg("z"), py::arg("zeta"), py::arg("s"));
    m.def(
        "schwarz_poisson",
        [](std::complex<double> z, double q) {
            const auto sp = dg::kernel_PqSq(point(z), q);
            return py::make_tuple(sp.S, sp.P);
        },
        py::arg("z"), py::arg("q"), "returns (S_q(z), P_q(z))");

    // measures
    py::class_<dg::DiscMeasure>(m, "DiscMeasure")
        .def(py::init([](const std::vector<std::pair<std::complex<double>, double>>& disc_atoms,
                         const std::vector<std::pair<double, double>>& boundary_atoms,
                         const std::vector<std::tuple<double, double, double>>& density) {
                 std::vector<dg::DiscAtom> atoms;
                 for (const auto& [z, w] : disc_atoms) atoms.push_back({dg::DiscPoint(z), w});
                 std::vector<dg::BoundaryAtom> batoms;
                 for (const auto& [theta, mass] : boundary_atoms)
                     batoms.push_back({theta, mass});
                 std::vector<dg::DensityPiece> pieces;
                 for (const auto& [t0, t1, v] : density) pieces.push_back({t0, t1, v});
                 return dg::DiscMeasure(std::move(atoms), std::move(batoms), std::move(pieces));
             }),
             py::arg("disc_atoms") = std::vector<std::pair<std::complex<double>, double>>{},
             py::arg("boundary_atoms") = std::vector<std::pair<double, double>>{},
             py::arg("boundary_density") = std::vector<std::tuple<double, double, double>>{})
        .def_static("from_zeros",
                    [](const std::vector<std::pair<std::complex<double>, double>>& zeros) {
                        return dg::DiscMeasure::from_zeros(zeros_from_list(zeros));
                    })
        .def("total_variation", &dg::DiscMeasure::total_variation)
        .def("to_json", [](const dg::DiscMeasure& mu, int s) {
            return dg::measure_to_json(mu, s).dump();
        });

    py::class_<dg::CompleteMeasure>(m, "CompleteMeasure")
        .def_property_readonly("s", &dg::CompleteMeasure::s)
        .def("total", &dg::CompleteMeasure::total)
        .def("total_variation", &dg::CompleteMeasure::total_variation);

    m.def("build_complete_measure", &dg::build_complete_measure, py::arg("mu"), py::arg("s"));
    m.def(
        "carleson_box_mass",
        [](const dg::CompleteMeasure& lambda, double phi, double delta) {
            const auto bm = dg::box_mass(lambda, dg::CarlesonBox(phi, delta));
            return py::make_tuple(bm.value, bm.total_variation);
        },
        py::arg("lam"), py::arg("phi"), py::arg("delta"));
    m.def(
        "box_mass_integral",
        [](const dg::CompleteMeasure& lambda, double delta, double p, bool exact, int n_phi,
           bool total_variation) {
            return dg::box_mass_integral(lambda, delta, p,
                                         exact ? dg::BoxIntegralMode::exact_breakpoints
                                               : dg::BoxIntegralMode::grid,
                                         n_phi, total_variation);
        },
        py::arg("lam"), py::arg("delta"), py::arg("p"), py::arg("exact") = true,
        py::arg("n_phi") = 0, py::arg("total_variation") = false);
    m.def(
        "counting_n",
        [](const dg::DiscMeasure& mu, double r) { return dg::counting_n(mu, r); },
        py::arg("mu"), py::arg("r"));
    m.def(
        "counting_nu",
        [](const dg::DiscMeasure& mu, double r, double phi) {
            return dg::counting_nu(mu, r, phi);
        },
        py::arg("mu"), py::arg("r"), py::arg("phi"));

    py::class_<dg::PeriodicMeasure>(m, "PeriodicMeasure")
        .def(py::init([](const std::vector<std::pair<double, double>>& atoms,
                         const std::vector<std::tuple<double, double, double>>& density) {
                 std::vector<dg::BoundaryAtom> as;
                 for (const auto& [theta, mass] : atoms) as.push_back({theta, mass});
                 std::vector<dg::DensityPiece> pieces;
                 for (const auto& [t0, t1, v] : density) pieces.push_back({t0, t1, v});
                 return dg::PeriodicMeasure(std::move(as), std::move(pieces));
             }),
             py::arg("atoms") = std::vector<std::pair<double, double>>{},
             py::arg("density") = std::vector<std::tuple<double, double, double>>{});
    m.def(
        "lemma1_check",
        [](const dg::PeriodicMeasure& nu, double p, double delta) {
            const auto res = dg::lemma1_check(nu, p, delta);
            return py::make_tuple(res.lhs, res.rhs, res.holds);
        },
        py::arg("nu"), py::arg("p"), py::arg("delta"));

    // evaluators
    m.def(
        "log_mod_blaschke",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros,
           std::complex<double> z) {
            return dg::log_mod_blaschke(zeros_from_list(zeros), point(z));
        },
        py::arg("zeros"), py::arg("z"), "log|B(z)|; zeros is a list of (a, multiplicity)");
    m.def(
        "canonical_integral",
        [](const dg::DiscMeasure& mu, int s, std::complex<double> z) {
            return dg::canonical_integral(mu, s, point(z));
        },
        py::arg("mu"), py::arg("s"), py::arg("z"));
    m.def(
        "eval_representation",
        [](const dg::CompleteMeasure& lambda, double C, std::complex<double> z) {
            return dg::eval_representation(lambda, C, point(z));
        },
        py::arg("lam"), py::arg("C"), py::arg("z"));

    py::class_<dg::SubharmonicSpec>(m, "SubharmonicSpec")
        .def_static("blaschke",
                    [](const std::vector<std::pair<std::complex<double>, double>>& zeros) {
                        return dg::SubharmonicSpec::blaschke(zeros_from_list(zeros));
                    })
        .def_static("canonical", &dg::SubharmonicSpec::canonical, py::arg("mu"), py::arg("s"))
        .def_static("representation", &dg::SubharmonicSpec::representation, py::arg("lam"),
                    py::arg("C"))
        .def_static("example2", &dg::SubharmonicSpec::example2, py::arg("q"))
        .def_static("constant", &dg::SubharmonicSpec::constant, py::arg("c"))
        .def("eval",
             [](const dg::SubharmonicSpec& u, std::complex<double> z) {
                 return u.eval(dg::DiscPoint(z));
             });

    // means and fits
    m.def(
        "circle_mean_mp",
        [](const dg::SubharmonicSpec& u, double r, double p, double rel_tol) {
            return dg::circle_mean_mp(u, r, p, rel_tol);
        },
        py::arg("u"), py::arg("r"), py::arg("p"), py::arg("rel_tol") = 1e-6);
    m.def("max_on_circle", &dg::max_on_circle, py::arg("u"), py::arg("r"), py::arg("n_grid"));
    m.def(
        "fit_exponent",
        [](const std::vector<std::pair<double, double>>& samples, double floor_eps) {
            return fit_dict(dg::fit_exponent(samples, floor_eps));
        },
        py::arg("samples"), py::arg("floor_eps") = 1e-300);
    m.def(
        "rho_estimate",
        [](const dg::SubharmonicSpec& u, double p, int j0, int j1, double rel_tol) {
            return fit_dict(dg::rho_estimate(u, p, {j0, j1}, rel_tol));
        },
        py::arg("u"), py::arg("p"), py::arg("j0"), py::arg("j1"), py::arg("rel_tol") = 1e-6);

    // classical diagnostics
    m.def(
        "i_mean",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros, double r) {
            return dg::i_mean(zeros_from_list(zeros), r);
        },
        py::arg("zeros"), py::arg("r"));
    m.def(
        "j_sum",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros, double r,
           double tol) { return dg::j_sum(zeros_from_list(zeros), r, tol); },
        py::arg("zeros"), py::arg("r"), py::arg("tol") = 1e-10);
    m.def(
        "psi_r",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros,
           std::complex<double> zeta, double r) {
            return dg::psi_r(zeros_from_list(zeros), point(zeta), r);
        },
        py::arg("zeros"), py::arg("zeta"), py::arg("r"));
    m.def(
        "stolz_count_phi",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros,
           std::complex<double> zeta) {
            return dg::stolz_count_Phi(zeros_from_list(zeros), point(zeta));
        },
        py::arg("zeros"), py::arg("zeta"));
    m.def(
        "linden_region_count",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros, double r,
           double phi, double kappa, double gamma) {
            return dg::linden_region_count(zeros_from_list(zeros), r, phi, kappa, gamma);
        },
        py::arg("zeros"), py::arg("r"), py::arg("phi"), py::arg("kappa"), py::arg("gamma"));

    // worked examples and verification harnesses
    m.def(
        "gen_example1",
        [](double alpha, double beta, int k_max) {
            const auto ex = dg::gen_example1(alpha, beta, k_max);
            std::vector<std::pair<std::complex<double>, double>> zeros;
            for (const auto& z : ex.zeros) zeros.emplace_back(z.point.value(), z.multiplicity);
            return py::make_tuple(zeros, ex.s);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("k_max"));
    m.def(
        "example2_logmod",
        [](double q, std::complex<double> z) { return dg::example2_logmod(q, point(z)); },
        py::arg("q"), py::arg("z"));
    m.def(
        "verify_box_vs_means",
        [](const dg::CompleteMeasure& lambda, const dg::SubharmonicSpec& u, double p, int dj0,
           int dj1, int rj0, int rj1, double tolerance) {
            return report_dict(
                dg::verify_box_vs_means(lambda, u, p, {dj0, dj1}, {rj0, rj1}, tolerance));
        },
        py::arg("lam"), py::arg("u"), py::arg("p"), py::arg("delta_j0"), py::arg("delta_j1"),
        py::arg("r_j0"), py::arg("r_j1"), py::arg("tolerance"));
    m.def(
        "verify_stolz",
        [](const std::vector<std::pair<std::complex<double>, double>>& zeros, double p,
           double tolerance, int j0, int j1) {
            return report_dict(dg::verify_stolz(zeros_from_list(zeros), p, tolerance, {j0, j1}));
        },
        py::arg("zeros"), py::arg("p"), py::arg("tolerance"), py::arg("j0") = 4,
        py::arg("j1") = 11);
    m.def(
        "verify_growth_sufficiency",
        [](const dg::DiscMeasure& mu, int s, double p, double alpha, double tolerance, int j0,
           int j1) {
            return report_dict(
                dg::verify_growth_sufficiency(mu, s, p, alpha, tolerance, {j0, j1}));
        },
        py::arg("mu"), py::arg("s"), py::arg("p"), py::arg("alpha"), py::arg("tolerance"),
        py::arg("j0") = 4, py::arg("j1") = 11);
    m.def(
        "example1_lower_bound_check",
        [](double alpha, double beta, double p, int k_max, int j0, int j1) {
            return fit_dict(dg::example1_lower_bound_check(alpha, beta, p, k_max, {j0, j1}));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("k_max"), py::arg("j0"),
        py::arg("j1"));

    // JSON interop (same schemas as the CLI files)
    m.def("zeros_to_json",
          [](const std::vector<std::pair<std::complex<double>, double>>& zeros) {
              return dg::zeros_to_json(zeros_from_list(zeros)).dump();
          });
    m.def("measure_from_json", [](const std::string& text) {
        auto mf = dg::measure_from_json(nlohmann::json::parse(text));
        return py::make_tuple(mf.mu, mf.s);
    });

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
