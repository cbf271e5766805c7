#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "siac/bspline.hpp"
#include "siac/dg.hpp"
#include "siac/divided_differences.hpp"
#include "siac/field_io.hpp"
#include "siac/filtering.hpp"
#include "siac/harness.hpp"
#include "siac/kernel.hpp"

namespace py = pybind11;
using namespace siac;

PYBIND11_MODULE(_core, m) {
    m.doc() = "SIAC line and tensor filtering for 2D DG advection fields";

    m.def(
        "bspline_eval",
        [](int order, double x) { return CentralBSpline(order).value(x); },
        py::arg("order"), py::arg("x"),
        "Central B-spline value from the convolution recurrence");
    m.def(
        "bspline_derivative",
        [](int order, int alpha, double x) {
            return CentralBSpline(order).derivative(alpha, x);
        },
        py::arg("order"), py::arg("alpha"), py::arg("x"));
    m.def("kernel_coefficients", &SiacKernel::solve_coefficients, py::arg("k"),
          "Spline weights of the symmetric degree-k kernel");

    py::class_<SiacKernel>(m, "SiacKernel")
        .def(py::init<int, double>(), py::arg("k"), py::arg("scaling"))
        .def_property_readonly("k", &SiacKernel::k)
        .def_property_readonly("scaling", &SiacKernel::scaling)
        .def_property_readonly("coefficients", &SiacKernel::coefficients)
        .def("__call__", &SiacKernel::evaluate, py::arg("t"))
        .def("breakpoints", &SiacKernel::breakpoints)
        .def("reproduction_residual", &SiacKernel::reproduction_residual, py::arg("p"))
        .def("support_half_width", &SiacKernel::support_half_width);

    py::class_<UniformMesh2D>(m, "UniformMesh2D")
        .def(py::init<int, int, double, double, double, double>(), py::arg("nx"),
             py::arg("ny"), py::arg("xmin"), py::arg("xmax"), py::arg("ymin"),
             py::arg("ymax"))
        .def_static("unit_torus", &UniformMesh2D::unit_torus, py::arg("nx"), py::arg("ny"))
        .def_readonly("nx", &UniformMesh2D::nx)
        .def_readonly("ny", &UniformMesh2D::ny)
        .def_property_readonly("hx", &UniformMesh2D::hx)
        .def_property_readonly("hy", &UniformMesh2D::hy);

    py::class_<ModalField2D>(m, "ModalField2D")
        .def_property_readonly("degree", &ModalField2D::degree)
        .def_property_readonly("mesh", &ModalField2D::mesh)
        .def("__call__", &ModalField2D::evaluate, py::arg("x"), py::arg("y"))
        .def("integral", &ModalField2D::integral)
        .def("coefficients",
             [](const ModalField2D& f) { return f.coefficients(); });

    m.def(
        "project",
        [](const UniformMesh2D& mesh, int degree, const std::function<double(double, double)>& u0) {
            return project_initial(mesh, degree, u0);
        },
        py::arg("mesh"), py::arg("degree"), py::arg("u0"),
        "Element-wise L2 projection of a callable onto the modal basis");
    m.def(
        "project_ic",
        [](const UniformMesh2D& mesh, int degree, const std::string& name) {
            return project_initial(mesh, degree, harness::initial_condition(name).u0);
        },
        py::arg("mesh"), py::arg("degree"), py::arg("ic"),
        "Projection of a named initial condition (sinxy | sinxcosy)");
    m.def("solve_advection", &solve_advection, py::arg("field"), py::arg("tfinal"),
          py::arg("cfl") = 0.05);
    m.def(
        "l2_error",
        [](const ModalField2D& field, const std::function<double(double, double)>& exact) {
            return l2_error(field, exact);
        },
        py::arg("field"), py::arg("exact"));
    m.def(
        "l2_error_vs_ic",
        [](const ModalField2D& field, const std::string& name, double tfinal) {
            return l2_error(field, harness::initial_condition(name).exact_at(tfinal));
        },
        py::arg("field"), py::arg("ic"), py::arg("tfinal"),
        "L2 error against the advected named initial condition");
    m.def("save_field",
          [](const ModalField2D& field, const std::string& path) { save_field(field, path); },
          py::arg("field"), py::arg("path"));
    m.def("load_field", [](const std::string& path) { return load_field(path); },
          py::arg("path"));

    py::enum_<FilterKind>(m, "FilterKind")
        .value("tensor", FilterKind::tensor)
        .value("line", FilterKind::line);

    py::class_<FilterConfig>(m, "FilterConfig")
        .def(py::init([](const std::string& kind, double theta, double mu, int k) {
                 FilterConfig c;
                 if (kind == "line") {
                     c.kind = FilterKind::line;
                 } else if (kind == "tensor") {
                     c.kind = FilterKind::tensor;
                 } else {
                     throw std::invalid_argument("kind must be 'line' or 'tensor'");
                 }
                 c.theta = theta;
                 c.mu = mu;
                 c.k_override = k;
                 return c;
             }),
             py::arg("kind"), py::arg("theta") = 0.0, py::arg("mu") = 0.0,
             py::arg("k") = -1)
        .def_readwrite("theta", &FilterConfig::theta)
        .def_readwrite("mu", &FilterConfig::mu)
        .def_property_readonly("resolved_mu", &FilterConfig::resolved_mu);

    py::class_<Counters>(m, "Counters")
        .def_readonly("intersection_scans", &Counters::intersection_scans)
        .def_readonly("integrals", &Counters::integrals)
        .def_readonly("quadrature_evals", &Counters::quadrature_evals)
        .def("__repr__", [](const Counters& c) {
            std::ostringstream os;
            os << "Counters(scans=" << c.intersection_scans << ", integrals=" << c.integrals
               << ", quadrature_evals=" << c.quadrature_evals << ")";
            return os.str();
        });

    m.def(
        "filter_point",
        [](const ModalField2D& field, double x, double y, const FilterConfig& config) {
            return filter_point(field, {x, y}, config);
        },
        py::arg("field"), py::arg("x"), py::arg("y"), py::arg("config"));
    m.def(
        "filter_point_counted",
        [](const ModalField2D& field, double x, double y, const FilterConfig& config) {
            Counters counters;
            const double value = filter_point(field, {x, y}, config, &counters);
            return py::make_tuple(value, counters);
        },
        py::arg("field"), py::arg("x"), py::arg("y"), py::arg("config"));
    m.def(
        "filtered_l2_error_vs_ic",
        [](const ModalField2D& field, const FilterConfig& config, const std::string& name,
           double tfinal) {
            return filtered_l2_error(field, config,
                                     harness::initial_condition(name).exact_at(tfinal));
        },
        py::arg("field"), py::arg("config"), py::arg("ic"), py::arg("tfinal"));
    m.def(
        "filter_field_uniform",
        [](const ModalField2D& field, const FilterConfig& config, int nx, int ny) {
            const SampledFilterField s = filter_field(field, config, Sampling::uniform(nx, ny));
            return py::make_tuple(s.x, s.y, s.value, s.counters);
        },
        py::arg("field"), py::arg("config"), py::arg("nx"), py::arg("ny"),
        "Filter on a uniform grid; returns (x, y, values, counters)");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
