#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ndyn/analysis.hpp"
#include "ndyn/catalog.hpp"
#include "ndyn/cli.hpp"
#include "ndyn/planes.hpp"
#include "ndyn/stability.hpp"
#include "ndyn/verify.hpp"

namespace py = pybind11;
using namespace ndyn;

namespace {

py::dict form_dict(const OperatorForm& f) {
  py::dict d;
  d["n"] = f.n;
  d["k"] = f.k;
  d["sign"] = f.sign;
  d["a"] = f.a;
  d["roots"] = f.roots;
  d["coefficient_sum_vanishes"] = f.coefficient_sum_vanishes;
  d["degenerate"] = f.degenerate;
  return d;
}

py::object ext_object(const ExtComplex& z) {
  if (z.is_infinity()) return py::float_(INFINITY);
  return py::cast(z.value());
}

RationalMap map_from(const std::vector<Complex>& num, const std::vector<Complex>& den) {
  return RationalMap::make(Polynomial(num), Polynomial(den));
}

py::dict region_dict(const StabilityRegion& r) {
  py::dict d;
  d["target"] = r.target;
  d["kind"] = to_string(r.kind);
  d["center"] = r.center;
  d["radius"] = r.radius;
  d["attracting"] = to_string(r.side);
  d["superattracting_parameter"] = r.superattracting_parameter ? py::cast(*r.superattracting_parameter) : py::none();
  return d;
}

py::tuple plane_arrays(const PlaneImage& img) {
  py::array_t<std::uint8_t> outcome({img.height, img.width});
  py::array_t<std::int32_t> iterations({img.height, img.width});
  py::array_t<std::uint8_t> rgb({img.height, img.width, 3});
  auto o = outcome.mutable_unchecked<2>();
  auto it = iterations.mutable_unchecked<2>();
  auto c = rgb.mutable_unchecked<3>();
  for (int row = 0; row < img.height; ++row)
    for (int col = 0; col < img.width; ++col) {
      const PixelRecord& p = img.at(col, row);
      o(row, col) = static_cast<std::uint8_t>(p.outcome);
      it(row, col) = p.iterations;
      for (int k = 0; k < 3; ++k)
        c(row, col, k) = img.rgb[(static_cast<std::size_t>(row) * img.width + col) * 3 + k];
    }
  return py::make_tuple(outcome, iterations, rgb);
}

RenderConfig config(std::array<double, 4> window, std::array<int, 2> res, int max_iter, int threads,
                    const std::string& mode) {
  RenderConfig cfg;
  cfg.x_min = window[0];
  cfg.x_max = window[1];
  cfg.y_min = window[2];
  cfg.y_max = window[3];
  cfg.width = res[0];
  cfg.height = res[1];
  cfg.max_iter = max_iter;
  cfg.threads = threads;
  cfg.mode = parse_color_mode(mode);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_ndyn, m) {
  m.doc() = "Normal forms, fixed points and stability regions of Newton-like operators on z^d - c";

  py::register_exception<Error>(m, "NdynError");

  m.def("catalog", [] {
    py::list out;
    for (const auto& e : catalog_entries()) {
      py::dict d;
      d["name"] = e.name;
      d["kind"] = e.kind == EntryKind::Scheme ? "scheme" : "normal-form";
      d["parameters"] = e.defaults;
      d["nk"] = e.expected_nk ? py::cast(*e.expected_nk) : py::none();
      out.append(d);
    }
    return out;
  });

  m.def(
      "normal_form",
      [](const std::string& method, const Bindings& params, Complex c) {
        return form_dict(catalog_form(catalog(method), params, c));
      },
      py::arg("method"), py::arg("params") = Bindings{}, py::arg("c") = Complex(1.0));

  m.def(
      "operator",
      [](const std::string& method, const Bindings& params, int d, Complex c) {
        const RationalMap r = catalog_map(catalog(method), params, d, c);
        return py::make_tuple(r.num().coeffs(), r.den().coeffs());
      },
      py::arg("method"), py::arg("params") = Bindings{}, py::arg("d") = 2, py::arg("c") = Complex(1.0),
      "Numerator and denominator coefficients, lowest degree first.");

  m.def(
      "form_coefficients_to_map",
      [](int n, const std::vector<Complex>& a, int sign) {
        const RationalMap r = OperatorForm::from_coefficients(n, a, sign).to_map();
        return py::make_tuple(r.num().coeffs(), r.den().coeffs());
      },
      py::arg("n"), py::arg("a"), py::arg("sign") = 1);

  m.def(
      "fixed_points",
      [](const std::vector<Complex>& num, const std::vector<Complex>& den) {
        py::list out;
        for (const auto& f : fixed_points(map_from(num, den))) {
          py::dict d;
          d["point"] = ext_object(f.point);
          d["multiplier"] = f.multiplier;
          d["class"] = to_string(f.cls);
          d["strange"] = f.strange;
          d["multiplicity"] = f.multiplicity;
          out.append(d);
        }
        return out;
      },
      py::arg("num"), py::arg("den"));

  m.def(
      "critical_points",
      [](const std::vector<Complex>& num, const std::vector<Complex>& den) {
        py::list out;
        for (const auto& c : critical_points(map_from(num, den))) {
          py::dict d;
          d["point"] = ext_object(c.point);
          d["multiplicity"] = c.multiplicity;
          d["free"] = c.free;
          out.append(d);
        }
        return out;
      },
      py::arg("num"), py::arg("den"));

  m.def(
      "moebius_sum",
      [](const std::vector<Complex>& coeffs, const std::string& sign) {
        if (sign != "+" && sign != "-") throw Error(ErrorKind::InvalidArgument, "sign must be '+' or '-'");
        return moebius_sum(Polynomial(coeffs), sign == "+" ? SumSign::Plus : SumSign::Minus);
      },
      py::arg("coeffs"), py::arg("sign") = "+", "Closed-form root sum for a polynomial given lowest degree first.");

  m.def(
      "stability",
      [](const std::string& method) {
        const LinearCoeffs lc = linearize(catalog_family(catalog(method)));
        py::dict d;
        d["n"] = lc.n;
        d["k"] = lc.k;
        d["A"] = lc.A;
        d["B"] = lc.B;
        d["z1"] = region_dict(stability_region_z1(lc));
        d["zm1"] = region_dict(stability_region_zm1(lc));
        return d;
      },
      py::arg("method"));

  m.def(
      "strange_multiplier",
      [](const std::string& method, const Bindings& params, int target) {
        return strange_multiplier(catalog_form(catalog(method), params), target);
      },
      py::arg("method"), py::arg("params") = Bindings{}, py::arg("target") = 1);

  m.def(
      "dynamical_plane",
      [](const std::string& method, const Bindings& params, std::array<double, 4> window, std::array<int, 2> res,
         int max_iter, int threads, const std::string& mode, const std::vector<std::vector<Complex>>& attractors) {
        const RenderConfig cfg = config(window, res, max_iter, threads, mode);
        const RationalMap r = catalog_form(catalog(method), params).to_map();
        PlaneImage img;
        {
          py::gil_scoped_release release;
          img = dynamical_plane(r, cfg, attractors);
        }
        return plane_arrays(img);
      },
      py::arg("method"), py::arg("params") = Bindings{}, py::arg("window") = std::array<double, 4>{-2, 2, -2, 2},
      py::arg("res") = std::array<int, 2>{200, 200}, py::arg("max_iter") = 150, py::arg("threads") = 0,
      py::arg("mode") = "speed", py::arg("attractors") = std::vector<std::vector<Complex>>{},
      "Returns (outcome, iterations, rgb) arrays; outcome codes 0 root-0, 1 root-inf, 2 strange, 3 none.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def("verify", [] {
    py::list out;
    for (const auto& s : run_all_suites()) out.append(py::make_tuple(s.name, s.passed, s.failed));
    return out;
  });
}
