#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quasitoric/cli.hpp"
#include "quasitoric/fixtures.hpp"
#include "quasitoric/quasifold.hpp"
#include "quasitoric/verify.hpp"

namespace py = pybind11;
using namespace quasitoric;

namespace {

Quasifold build_from_text(const std::string& spec_text, double tol_psi, int radius) {
    Tolerances tol;
    tol.psi = tol_psi;
    tol.radius = radius;
    return build_quasifold(parse_spec(spec_text, tol.geom), tol);
}

py::dict check_to_dict(const CheckRecord& r) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = r.status;
    d["residual"] = r.residual;
    d["samples"] = r.samples;
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_quasitoric, m) {
    m.doc() = "Toric quasifolds from simple convex polytopes: charts, moment maps, "
              "level-set projection and the induced Kahler data.";

    py::register_exception<ParseError>(m, "SpecParseError");
    py::register_exception<ValidationError>(m, "SpecValidationError");
    py::register_exception<NonSimpleError>(m, "NonSimplePolytopeError");
    py::register_exception<DomainError>(m, "PointDomainError");
    py::register_exception<SolverError>(m, "ProjectionSolverError");

    py::class_<VertexData>(m, "Vertex")
        .def_readonly("point", &VertexData::point)
        .def_property_readonly("active_facets", [](const VertexData& v) { return v.active; });

    py::class_<ChartGroupElement>(m, "ChartGroupElement")
        .def_readonly("word", &ChartGroupElement::word)
        .def_readonly("phase", &ChartGroupElement::phase);

    py::class_<VertexChart>(m, "Chart")
        .def_readonly("id", &VertexChart::id)
        .def_property_readonly("index_set", [](const VertexChart& c) { return c.index_set(); })
        .def_readonly("base_point", &VertexChart::base_point)
        .def_property_readonly("group_generators",
                               [](const VertexChart& c) { return c.group_generators; })
        .def_property_readonly("group_trivial",
                               [](const VertexChart& c) { return c.group_generators.empty(); });

    py::class_<ProjectionResult>(m, "ProjectionResult")
        .def_readonly("point", &ProjectionResult::point)
        .def_readonly("coefficients", &ProjectionResult::coeffs)
        .def_readonly("residual", &ProjectionResult::residual)
        .def_readonly("iterations", &ProjectionResult::iterations);

    py::class_<Quasifold>(m, "Quasifold")
        .def_property_readonly("dimension", [](const Quasifold& q) { return q.polytope.n; })
        .def_property_readonly("facet_count", [](const Quasifold& q) { return q.polytope.d; })
        .def_property_readonly("normals", [](const Quasifold& q) { return q.polytope.normals; })
        .def_property_readonly("offsets", [](const Quasifold& q) { return q.polytope.offsets; })
        .def_property_readonly("vertices", [](const Quasifold& q) { return q.vertices; })
        .def_property_readonly("kernel_basis", [](const Quasifold& q) { return q.kernel.B; })
        .def_property_readonly("charts", [](const Quasifold& q) { return q.atlas.charts; })
        .def_property_readonly(
            "faces",
            [](const Quasifold& q) {
                return std::vector<IndexSet>(q.faces.begin(), q.faces.end());
            })
        .def("membership",
             [](const Quasifold& q, const CVec& z) -> py::object {
                 auto f = q.membership(z);
                 if (!f) return py::none();
                 return py::cast(*f);
             },
             py::arg("z"), "Face index set of the zero pattern, or None if inadmissible.")
        .def("transition_matrix",
             [](const Quasifold& q, int from, int to) {
                 const auto& t = q.atlas.transition(from, to);
                 Mat full(t.shared_block.rows() + t.log_block.rows(), t.shared_block.cols());
                 full << t.shared_block, t.log_block;
                 return full;
             },
             py::arg("chart_from"), py::arg("chart_to"),
             "Vertex-basis coefficients of the source-only normals over the target basis.")
        .def("to_slice",
             [](const Quasifold& q, int chart, const CVec& z) {
                 return to_slice(z, q.chart(chart), q.tol.geom).coords;
             },
             py::arg("chart"), py::arg("z"))
        .def("slice_transition",
             [](const Quasifold& q, int chart_from, int chart_to, const CVec& coords) {
                 SlicePoint s{chart_from, coords};
                 return slice_transition(q.atlas.transition(chart_from, chart_to),
                                         q.chart(chart_from), q.chart(chart_to), s, q.tol.geom)
                     .coords;
             },
             py::arg("chart_from"), py::arg("chart_to"), py::arg("coords"))
        .def("torus_act",
             [](const Quasifold& q, int chart, const CVec& W, const CVec& coords) {
                 SlicePoint s{chart, coords};
                 return torus_act(W, s, q.chart(chart)).coords;
             },
             py::arg("chart"), py::arg("W"), py::arg("coords"))
        .def("same_model_point",
             [](const Quasifold& q, int chart, const CVec& a, const CVec& b) -> py::object {
                 auto match = match_mod_group(a, b, q.chart(chart), q.tol.radius, 1e-8);
                 if (!match) return py::none();
                 py::dict d;
                 d["word"] = match->word.word;
                 d["phase"] = match->word.phase;
                 d["residual"] = match->residual;
                 return d;
             },
             py::arg("chart"), py::arg("a"), py::arg("b"))
        .def("ambient_moment",
             [](const Quasifold& q, const CVec& z) { return ambient_moment(z, q.polytope.offsets); },
             py::arg("z"))
        .def("kernel_moment",
             [](const Quasifold& q, const CVec& z) { return kernel_moment(z, q.moment); },
             py::arg("z"))
        .def("level_point",
             [](const Quasifold& q, const Vec& zeta, const Vec& phases) {
                 return level_point_from_polytope(zeta, phases, q.polytope, q.tol.geom);
             },
             py::arg("zeta"), py::arg("phases"))
        .def("symplectic_pad",
             [](const Quasifold& q, int chart, const CVec& coords) {
                 SymplecticSlicePoint w{chart, coords};
                 return symplectic_pad(q.chart(chart), w, q.polytope.offsets);
             },
             py::arg("chart"), py::arg("coords"))
        .def("project_to_level",
             [](const Quasifold& q, const CVec& z) { return q.project(z); }, py::arg("z"))
        .def("to_complex_slice",
             [](const Quasifold& q, int chart, const CVec& coords) {
                 SymplecticSlicePoint w{chart, coords};
                 return to_complex_slice(q.chart(chart), w, q.polytope.offsets).coords;
             },
             py::arg("chart"), py::arg("coords"))
        .def("to_symplectic_slice",
             [](const Quasifold& q, int chart, const CVec& coords) {
                 SlicePoint z{chart, coords};
                 return to_symplectic_slice(q.chart(chart), z, q.moment, q.tol.radius, q.tol.geom)
                     .point.coords;
             },
             py::arg("chart"), py::arg("coords"))
        .def("lift_jacobian",
             [](const Quasifold& q, int chart, const CVec& coords) {
                 SymplecticSlicePoint w{chart, coords};
                 auto jac = lift_jacobian(q.chart(chart), w, q.polytope.offsets, q.tol.fd_step);
                 py::dict d;
                 d["matrix"] = jac.matrix;
                 d["positive_definite"] = jac.positive_definite;
                 d["min_eigenvalue"] = jac.min_eigenvalue;
                 return d;
             },
             py::arg("chart"), py::arg("coords"))
        .def("kahler_form",
             [](const Quasifold& q, int chart, const CVec& coords, const Vec& u, const Vec& v) {
                 SlicePoint z{chart, coords};
                 FormSample sample = kahler_eval(q.chart(chart), z, u, v, q.moment, q.tol);
                 py::dict d;
                 d["form"] = sample.form;
                 d["metric"] = sample.metric;
                 return d;
             },
             py::arg("chart"), py::arg("coords"), py::arg("u"), py::arg("v"),
             "Induced form and compatible metric on realified chart vectors.")
        .def("verify",
             [](const Quasifold& q, int samples, std::uint64_t seed) {
                 RunConfig cfg;
                 cfg.samples = samples;
                 cfg.seed = seed;
                 cfg.tol = q.tol;
                 cfg.solver.tol_psi = q.tol.psi;
                 std::vector<py::dict> out;
                 for (const auto& r : verify_quasifold(q, cfg)) out.push_back(check_to_dict(r));
                 return out;
             },
             py::arg("samples") = 50, py::arg("seed") = 1);

    m.def("load_spec",
          [](const std::string& text, double tol_psi, int radius) {
              return build_from_text(text, tol_psi, radius);
          },
          py::arg("text"), py::arg("tol_psi") = 1e-10, py::arg("radius") = 3,
          "Build a quasifold from polytope spec JSON text.");
    m.def("example_spec",
          [](const std::string& name, double s, double t) { return fixtures::by_name(name, s, t); },
          py::arg("name"), py::arg("s") = 1.0, py::arg("t") = 1.4142135623730951,
          "Spec JSON text of a built-in example.");
    m.def("run_command",
          [](const std::vector<std::string>& args) {
              auto result = run_command(args);
              py::dict d;
              d["exit_code"] = result.exit_code;
              d["report"] = result.report;
              return d;
          },
          py::arg("args"), "Run a CLI command; returns exit code and JSON report text.");
    m.attr("__version__") = "0.1.0";
}
