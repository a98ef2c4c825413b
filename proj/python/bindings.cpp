#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "discop/discop.hpp"

namespace py = pybind11;
using namespace discop;

namespace {

Curve curve_from_points(const std::vector<std::pair<double, double>>& points, bool closed) {
  return polyline_curve(points, closed);
}

BinaryImage image_from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  BinaryImage img(r, c);
  for (int y = 0; y < r; ++y) {
    if (static_cast<int>(rows[y].size()) != c) throw DomainError("ragged image rows");
    for (int x = 0; x < c; ++x) img.set(x, y, rows[y][x] != 0);
  }
  return img;
}

std::vector<std::vector<int>> image_rows(const BinaryImage& img) {
  std::vector<std::vector<int>> rows(img.rows(), std::vector<int>(img.cols(), 0));
  for (int y = 0; y < img.rows(); ++y)
    for (int x = 0; x < img.cols(); ++x) rows[y][x] = img.at(x, y);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete approximation operators for curves and image curves";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<KernelError>(m, "KernelError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<NonFiniteSample>(m, "NonFiniteSample", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<TraceError>(m, "TraceError", base.ptr());

  m.def("fejer", &fejer);
  m.def("bspline", &bspline, py::arg("m"), py::arg("t"));

  py::class_<SamplingKernel>(m, "SamplingKernel")
      .def("__call__", &SamplingKernel::operator())
      .def_property_readonly("name", &SamplingKernel::name)
      .def_property_readonly("compact", &SamplingKernel::compact);
  m.def("fejer_kernel", &fejer_kernel);
  m.def("bspline_kernel", &bspline_kernel, py::arg("m"));

  py::class_<KernelValidationReport>(m, "KernelValidationReport")
      .def_readonly("max_partition_defect", &KernelValidationReport::max_partition_defect)
      .def_readonly("abs_sum_sup", &KernelValidationReport::abs_sum_sup)
      .def_readonly("max_adjacent_jump", &KernelValidationReport::max_adjacent_jump)
      .def_readonly("support_consistent", &KernelValidationReport::support_consistent)
      .def("passes", &KernelValidationReport::passes, py::arg("tolerance"), py::arg("continuity_tolerance") = 1e-2);
  m.def(
      "validate_kernel",
      [](const SamplingKernel& k, double tol, int points) {
        const auto grid = standard_probe_grid(points);
        return validate_kernel(k, grid, tol, KernelValidationOptions{});
      },
      py::arg("kernel"), py::arg("tolerance"), py::arg("points") = 11);

  py::class_<TruncationCertificate>(m, "TruncationCertificate")
      .def_readonly("k_min", &TruncationCertificate::k_min)
      .def_readonly("k_max", &TruncationCertificate::k_max)
      .def_readonly("tail_bound", &TruncationCertificate::tail_bound);

  py::class_<OperatorFamily>(m, "OperatorFamily")
      .def_property_readonly("name", &OperatorFamily::name)
      .def_property_readonly("domain", [](const OperatorFamily& f) { return std::pair{f.domain().lo, f.domain().hi}; })
      .def("basis", &OperatorFamily::basis, py::arg("n"), py::arg("k"), py::arg("t"))
      .def("node", &OperatorFamily::node, py::arg("n"), py::arg("k"));
  m.def("make_generalized_sampling", &make_generalized_sampling, py::arg("kernel"), py::arg("tolerance") = 0.0);
  m.def("make_szasz_mirakjan", &make_szasz_mirakjan);
  m.def("make_baskakov", &make_baskakov);
  m.def("make_bernstein", &make_bernstein);

  m.def(
      "evaluate",
      [](const OperatorFamily& family, const std::function<double(double)>& f, int n, double t,
         std::optional<double> tolerance) {
        EvalOptions opts;
        opts.tolerance = tolerance;
        const Evaluation e = evaluate(family, f, n, t, opts);
        return std::pair{e.value, e.certificate};
      },
      py::arg("family"), py::arg("f"), py::arg("n"), py::arg("t"), py::arg("tolerance") = py::none());
  m.def(
      "tail_mass",
      [](const OperatorFamily& family, int n, double t, double delta, std::optional<double> tolerance) {
        EvalOptions opts;
        opts.tolerance = tolerance;
        return tail_mass(family, n, t, delta, opts);
      },
      py::arg("family"), py::arg("n"), py::arg("t"), py::arg("delta"), py::arg("tolerance") = py::none());

  py::class_<Curve>(m, "Curve")
      .def("__call__", [](const Curve& c, double t) { return c(t); })
      .def_property_readonly("domain", [](const Curve& c) { return std::pair{c.domain().lo, c.domain().hi}; })
      .def_property_readonly("dimension", &Curve::dimension)
      .def_property_readonly("closed", &Curve::closed)
      .def("closure_defect", &Curve::closure_defect)
      .def("sample", [](const Curve& c, int grid) { return sample(c, grid); }, py::arg("grid") = 400);
  m.def("specimen", &specimens::by_name, py::arg("name"));
  m.def("specimen_names", &specimens::names);
  m.def("polyline_curve", &curve_from_points, py::arg("points"), py::arg("closed"));
  m.def("parse_strategy", [](const std::string& s) { return to_string(parse_strategy(s)); });
  m.def(
      "apply_operator",
      [](const OperatorFamily& family, const Curve& gamma, int n, std::optional<std::string> strategy) {
        const ExtensionStrategy st = strategy ? parse_strategy(*strategy) : default_strategy(family, gamma.closed());
        return apply_operator(family, gamma, n, st);
      },
      py::arg("family"), py::arg("curve"), py::arg("n"), py::arg("strategy") = py::none());
  m.def("sup_error", &sup_error, py::arg("curve"), py::arg("approx"), py::arg("grid") = 400);
  m.def(
      "smooth_from_points",
      [](const std::vector<std::pair<double, double>>& points, bool closed, const OperatorFamily& family, int n,
         std::optional<std::string> strategy) {
        const ExtensionStrategy st = strategy ? parse_strategy(*strategy) : default_strategy(family, closed);
        return smooth_from_points(points, closed, family, n, st);
      },
      py::arg("points"), py::arg("closed"), py::arg("family"), py::arg("n"), py::arg("strategy") = py::none());

  py::class_<BinaryImage>(m, "BinaryImage")
      .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
      .def_static("from_rows", &image_from_rows)
      .def("to_rows", &image_rows)
      .def_property_readonly("rows", &BinaryImage::rows)
      .def_property_readonly("cols", &BinaryImage::cols)
      .def("at", [](const BinaryImage& img, int x, int y) { return static_cast<int>(img.at(x, y)); })
      .def(
          "set", [](BinaryImage& img, int x, int y, bool value) { img.set(x, y, value ? 1 : 0); }, py::arg("x"),
          py::arg("y"), py::arg("value") = true)
      .def("count", &BinaryImage::count)
      .def("__eq__", [](const BinaryImage& a, const BinaryImage& b) { return a == b; });
  m.def("load_pbm", [](const py::bytes& data) { return load_pbm(std::string(data)); });
  m.def(
      "save_pbm", [](const BinaryImage& img, bool plain) {
        return py::bytes(save_pbm(img, plain ? PbmEncoding::Plain : PbmEncoding::Raw));
      },
      py::arg("image"), py::arg("plain") = false);

  m.def(
      "trace",
      [](const BinaryImage& img) {
        const TraceResult r = trace(img);
        py::dict d;
        d["start"] = std::pair{r.chain.start.x, r.chain.start.y};
        d["codes"] = r.chain.codes;
        d["closed"] = r.chain.closed;
        d["u"] = r.sequences.u;
        d["v"] = r.sequences.v;
        return d;
      },
      py::arg("image"));
  m.def("image_to_curve", [](const BinaryImage& img, bool piecewise_constant) {
    return image_to_curve(img, piecewise_constant ? CoordinateVariant::PiecewiseConstant : CoordinateVariant::PiecewiseLinear);
  }, py::arg("image"), py::arg("piecewise_constant") = false);
  m.def("rasterize", &rasterize, py::arg("curve"), py::arg("rows"), py::arg("cols"));
  m.def(
      "upscale",
      [](const BinaryImage& img, double factor, const OperatorFamily& family, int n, std::optional<std::string> strategy) {
        const ExtensionStrategy st = strategy ? parse_strategy(*strategy) : default_strategy(family, trace(img).chain.closed);
        return upscale(img, factor, family, n, st);
      },
      py::arg("image"), py::arg("factor"), py::arg("family"), py::arg("n"), py::arg("strategy") = py::none());
  m.def("hausdorff_distance", &hausdorff_distance);
  m.def("is_simple_closed_cycle", &is_simple_closed_cycle);
}
