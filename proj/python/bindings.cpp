#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subspace/bounds.hpp"
#include "subspace/io.hpp"
#include "subspace/numrange.hpp"
#include "subspace/scenarios.hpp"
#include "subspace/verify.hpp"

namespace py = pybind11;
using namespace subspace;

namespace {

SpectralSplit split_from_args(const std::string& disposition,
                              std::vector<std::pair<double, double>> minus,
                              std::vector<std::pair<double, double>> plus) {
    Disposition d;
    if (disposition == "subordinated")
        d = Disposition::Subordinated;
    else if (disposition == "annular")
        d = Disposition::Annular;
    else
        throw ParseError("disposition must be 'subordinated' or 'annular'");
    return make_split(d, std::move(minus), std::move(plus));
}

py::object opt(const std::optional<double>& v) {
    if (!v) return py::none();
    return py::float_(*v);
}

py::dict report_dict(const BoundReport& r) {
    py::dict out;
    out["disposition"] =
        r.disposition == Disposition::Subordinated ? "subordinated" : "annular";
    out["norm_V"] = r.norm_V;
    py::dict conditions;
    for (const auto& [name, value] : r.conditions)
        conditions[py::str(name)] = value;
    out["conditions"] = conditions;
    out["kappa"] = opt(r.kappa);
    out["mu_star"] = opt(r.mu_star);
    out["bound_estin"] = opt(r.bound_estin);
    out["bound_dk"] = opt(r.bound_dk);
    out["bound_apriori"] = opt(r.bound_apriori);
    out["bound_trio"] = opt(r.bound_trio);
    out["delta_minus"] = opt(r.delta_minus);
    out["delta_plus"] = opt(r.delta_plus);
    out["actual_gap"] = opt(r.actual_gap);
    out["theta_U"] = opt(r.theta_U);
    out["sharpness_ratio"] = opt(r.sharpness_ratio);
    return out;
}

}  // namespace

PYBIND11_MODULE(_subspace, m) {
    m.doc() = "Spectral subspace perturbation toolkit";

    py::register_exception<SubspaceError>(m, "SubspaceError");

    py::class_<Involution>(m, "Involution")
        .def_readonly("J", &Involution::J)
        .def_readonly("P_plus", &Involution::P_plus)
        .def_readonly("P_minus", &Involution::P_minus)
        .def_static("from_matrix", &Involution::from_matrix, py::arg("J"));

    py::class_<SpectralSplit>(m, "SpectralSplit")
        .def_readonly("d", &SpectralSplit::d)
        .def_readonly("alpha", &SpectralSplit::alpha)
        .def_readonly("beta", &SpectralSplit::beta)
        .def_readonly("gap_len", &SpectralSplit::gap_len)
        .def_readonly("sup_minus", &SpectralSplit::sup_minus)
        .def_readonly("inf_plus", &SpectralSplit::inf_plus);

    py::class_<DirectRotation>(m, "DirectRotation")
        .def_readonly("U", &DirectRotation::U)
        .def_readonly("theta", &DirectRotation::theta)
        .def_readonly("operator_angle", &DirectRotation::operator_angle);

    m.def("make_split", &split_from_args, py::arg("disposition"),
          py::arg("sigma_minus"), py::arg("sigma_plus"));

    m.def(
        "eigh",
        [](const Matrix& H) {
            const EigenSystem es = eigh(H);
            return py::make_tuple(es.eigenvalues, es.eigenvectors);
        },
        py::arg("H"), "Eigenvalues (ascending) and phase-fixed eigenvectors");

    m.def("involution_from_split", &involution_from_split, py::arg("A"),
          py::arg("split"));
    m.def("sign_involution", &sign_involution, py::arg("T"), py::arg("mu"));
    m.def(
        "polar_decompose",
        [](const Matrix& T) {
            const PolarParts p = polar_decompose(T);
            return py::make_tuple(p.W, p.absT, p.kernel_dim);
        },
        py::arg("T"));
    m.def("accretivity_margin", &accretivity_margin, py::arg("S"));

    m.def("direct_rotation", &direct_rotation, py::arg("J"), py::arg("Jp"));
    m.def("spectral_angle", &spectral_angle, py::arg("W"));
    m.def("projection_gap", &projection_gap, py::arg("P"), py::arg("Pp"));

    m.def(
        "numrange_boundary",
        [](const Matrix& T, int samples) {
            const NumRangeBoundary b = numrange_boundary(T, samples);
            return py::make_tuple(b.angles, b.points);
        },
        py::arg("T"), py::arg("samples") = 360);
    m.def(
        "sector_bound",
        [](const Matrix& S) {
            const SectorBound sb = sector_bound(S);
            return py::make_tuple(sb.k, sb.witness);
        },
        py::arg("S"));

    m.def("kappa_mu", &kappa_mu, py::arg("A"), py::arg("V"), py::arg("J"),
          py::arg("mu"));
    m.def(
        "kappa_inf",
        [](const Matrix& A, const Matrix& V, const SpectralSplit& split) {
            const KappaInf ki = kappa_inf(A, V, split);
            return py::make_tuple(ki.kappa, ki.mu_star);
        },
        py::arg("A"), py::arg("V"), py::arg("split"));
    m.def("bound_estin", &bound_estin, py::arg("kappa"));
    m.def("bound_dk", &bound_dk, py::arg("norm_V"), py::arg("d"));
    m.def("bound_apriori_tan", &bound_apriori_tan, py::arg("norm_V"),
          py::arg("d"));
    m.def("kappa_piecewise", &kappa_piecewise, py::arg("v"), py::arg("d"),
          py::arg("gap_len"));

    m.def(
        "analyze",
        [](const Matrix& A, const Matrix& V, const SpectralSplit& split) {
            return report_dict(analyze(A, V, split));
        },
        py::arg("A"), py::arg("V"), py::arg("split"));

    m.def(
        "gen_tsharp",
        [](double a, double b, double v1, double v2) {
            const TsharpInstance inst = gen_tsharp({a, b, v1, v2});
            return py::make_tuple(inst.A, inst.V, inst.split,
                                  inst.theta_closed_form);
        },
        py::arg("a"), py::arg("b"), py::arg("v1"), py::arg("v2"));
    m.def(
        "gen_random",
        [](int n_minus, int n_plus, const std::string& disposition, double d,
           double gap_len, double v_norm, std::uint64_t seed) {
            RandomSpec spec;
            spec.n_minus = n_minus;
            spec.n_plus = n_plus;
            spec.disposition = disposition == "annular" ? Disposition::Annular
                                                        : Disposition::Subordinated;
            spec.d = d;
            spec.gap_len = gap_len;
            spec.v_norm = v_norm;
            spec.seed = seed;
            const RandomInstance inst = gen_random(spec);
            return py::make_tuple(inst.A, inst.V, inst.split);
        },
        py::arg("n_minus"), py::arg("n_plus"),
        py::arg("disposition") = "subordinated", py::arg("d") = 1.0,
        py::arg("gap_len") = 0.0, py::arg("v_norm") = 0.1, py::arg("seed") = 0);
    m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("seed"));
}
