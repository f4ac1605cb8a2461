#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhomax/bounds.hpp"
#include "rhomax/enumerate.hpp"
#include "rhomax/extremal.hpp"
#include "rhomax/report.hpp"
#include "rhomax/spectral.hpp"

namespace py = pybind11;
using namespace rhomax;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "maximum spectral radius of simple digraphs with a prescribed number of arcs";

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_arcs", &Digraph::from_arcs, py::arg("n"), py::arg("arcs"))
        .def_static("complete", &Digraph::complete, py::arg("k"))
        .def_property_readonly("n", &Digraph::order)
        .def_property_readonly("e", &Digraph::arc_count)
        .def("arc", &Digraph::arc)
        .def("arcs", &Digraph::arcs)
        .def("out_degree", &Digraph::out_degree)
        .def("in_degree", &Digraph::in_degree)
        .def("text", [](const Digraph& d) { return to_text(d); })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.order()) +
                   ", e=" + std::to_string(d.arc_count()) + ")";
        });

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def(py::init([](int n, std::vector<int> prefix) {
                 return CanonicalForm{n, std::move(prefix)};
             }),
             py::arg("n"), py::arg("m"))
        .def_readonly("n", &CanonicalForm::n)
        .def_readonly("m", &CanonicalForm::m)
        .def("expand", &expand_canonical)
        .def("text", [](const CanonicalForm& c) { return to_text(c); })
        .def("__repr__", [](const CanonicalForm& c) { return "CanonicalForm(" + to_text(c) + ")"; });

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("rho", &SpectralResult::rho)
        .def_readonly("right", &SpectralResult::right)
        .def_readonly("left", &SpectralResult::left)
        .def_readonly("residual", &SpectralResult::residual)
        .def_readonly("iterations", &SpectralResult::iterations)
        .def_readonly("reducible", &SpectralResult::reducible);

    py::class_<ArcDecomposition>(m, "ArcDecomposition")
        .def_readonly("e", &ArcDecomposition::e)
        .def_readonly("k", &ArcDecomposition::k)
        .def_readonly("t", &ArcDecomposition::t)
        .def("__repr__", [](const ArcDecomposition& a) {
            return "ArcDecomposition(e=" + std::to_string(a.e) + ", k=" + std::to_string(a.k) +
                   ", t=" + std::to_string(a.t) + ")";
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("e", &VerificationReport::e)
        .def_readonly("k", &VerificationReport::k)
        .def_readonly("t", &VerificationReport::t)
        .def_readonly("n_candidates", &VerificationReport::n_candidates)
        .def_readonly("rho_max", &VerificationReport::rho_max)
        .def_readonly("argmax", &VerificationReport::argmax)
        .def_readonly("dsharp_rho", &VerificationReport::dsharp_rho)
        .def_readonly("conjecture_holds", &VerificationReport::conjecture_holds)
        .def_readonly("case_label", &VerificationReport::case_label)
        .def("json", [](const VerificationReport& r) { return to_json(r); });

    py::class_<BoundTrace>(m, "BoundTrace")
        .def_readonly("e", &BoundTrace::e)
        .def_readonly("w", &BoundTrace::w)
        .def_readonly("rho", &BoundTrace::rho)
        .def_property_readonly("entries",
                               [](const BoundTrace& t) {
                                   std::vector<std::tuple<std::string, double, double>> out;
                                   for (const auto& e : t.entries)
                                       out.emplace_back(e.name, e.value, e.slack);
                                   return out;
                               })
        .def("json", [](const BoundTrace& t) { return to_json(t); });

    m.def("parse_digraph", py::overload_cast<const std::string&>(&parse_digraph));
    m.def("strongly_connected_components",
          py::overload_cast<const Digraph&>(&strongly_connected_components));
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("clique_number", &clique_number);
    m.def("remove_isolated", &remove_isolated);
    m.def("is_member_dss", [](const Digraph& d) {
        DssCheck c = is_member_dss(d);
        return py::make_tuple(c.member, static_cast<int>(c.violation), c.i, c.j, c.l);
    });
    m.def("rewire_to_dss", &rewire_to_dss, py::arg("d"), py::arg("tol") = 1e-12);

    m.def(
        "spectral_radius",
        [](const Digraph& d, double tol) { return spectral_radius(d, {tol, 1'000'000}); },
        py::arg("d"), py::arg("tol") = 1e-12);
    m.def(
        "spectral_norm",
        [](const std::vector<std::vector<double>>& rows) { return spectral_norm(matrix_from_rows(rows)); },
        py::arg("matrix"));
    m.def("dsharp_cubic_root", &dsharp_cubic_root, py::arg("k"), py::arg("t"));
    m.def(
        "frc_solve",
        [](int k, const std::vector<std::vector<double>>& a12,
           const std::vector<std::vector<double>>& a21, double tol) {
            return frc_solve(k, matrix_from_rows(a12), matrix_from_rows(a21), tol);
        },
        py::arg("k"), py::arg("a12"), py::arg("a21"), py::arg("tol") = 1e-12);

    m.def("decompose_arcs", &decompose_arcs, py::arg("e"));
    m.def("build_dsharp", &build_dsharp, py::arg("e"));
    m.def(
        "rho_dsharp", [](long long e) { return rho_dsharp(e); }, py::arg("e"));
    m.def(
        "rho_closed_form",
        [](long long e) -> py::object {
            auto cf = rho_closed_form(e);
            if (!cf) return py::none();
            return py::make_tuple(cf->case_id, cf->rho, cf->families);
        },
        py::arg("e"));

    m.def(
        "enumerate_dss", [](long long e) { return enumerate_dss(e); }, py::arg("e"));
    m.def(
        "verify_conjecture",
        [](long long e, int jobs, bool long_running) {
            SweepOptions opt;
            opt.jobs = jobs;
            opt.long_running = long_running;
            return verify_conjecture(e, opt);
        },
        py::arg("e"), py::arg("jobs") = 1, py::arg("long_running") = false);
    m.def(
        "brute_max_rho",
        [](long long e, int n) {
            BruteResult r = brute_max_rho(e, n);
            return py::make_tuple(r.rho_max, r.argmax, r.searched);
        },
        py::arg("e"), py::arg("n"));
    m.def(
        "bound_trace", [](const Digraph& d) { return bound_trace(d); }, py::arg("d"));
    m.def("lu_bound", &lu_bound, py::arg("w"), py::arg("e"));
    m.def("coarse_bound", &coarse_bound, py::arg("e"));
    m.def("inequality3_bound", &inequality3_bound, py::arg("k"), py::arg("t"), py::arg("s"));

#ifdef RHOMAX_VERSION
    m.attr("__version__") = RHOMAX_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
