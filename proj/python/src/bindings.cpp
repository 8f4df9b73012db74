#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <functional>
#include <sstream>
#include <variant>

#include "qcfrft/analysis.hpp"
#include "qcfrft/cli.hpp"
#include "qcfrft/closed_form.hpp"
#include "qcfrft/io.hpp"
#include "qcfrft/qft.hpp"
#include "qcfrft/short_time.hpp"
#include "qcfrft/transform.hpp"
#include "qcfrft/verify.hpp"

namespace py = pybind11;
using namespace qcfrft;

namespace {

static_assert(sizeof(Quaternion) == 4 * sizeof(double));

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Vec4 spacing_from(const py::object& delta) {
  if (py::isinstance<py::float_>(delta) || py::isinstance<py::int_>(delta)) {
    const double d = delta.cast<double>();
    return {d, d, d, d};
  }
  return delta.cast<Vec4>();
}

// (N1, N2, N3, N4, 4) float64 array -> samples on a centered lattice.
QSignal4 signal_from_array(const Array& a, const py::object& delta) {
  if (a.ndim() != 5 || a.shape(4) != 4) {
    throw std::invalid_argument("expected an array of shape (N1, N2, N3, N4, 4)");
  }
  Index4 dims{};
  for (int k = 0; k < 4; ++k) {
    dims[k] = static_cast<std::size_t>(a.shape(k));
  }
  const auto lat = LatticeSpec::make(dims, spacing_from(delta));
  std::vector<Quaternion> data(lat.size());
  std::memcpy(data.data(), a.data(), data.size() * sizeof(Quaternion));
  return QSignal4(lat, std::move(data));
}

Array to_array(std::span<const Quaternion> values, std::vector<py::ssize_t> shape) {
  shape.push_back(4);
  Array out(shape);
  std::memcpy(out.mutable_data(), values.data(), values.size() * sizeof(Quaternion));
  return out;
}

std::vector<py::ssize_t> shape_of(const LatticeSpec& lat) {
  return {static_cast<py::ssize_t>(lat.dims[0]), static_cast<py::ssize_t>(lat.dims[1]),
          static_cast<py::ssize_t>(lat.dims[2]), static_cast<py::ssize_t>(lat.dims[3])};
}

Array points_array(std::size_t count, const std::function<Vec4(std::size_t)>& at) {
  Array out({static_cast<py::ssize_t>(count), py::ssize_t{4}});
  double* p = out.mutable_data();
  for (std::size_t n = 0; n < count; ++n) {
    const Vec4 v = at(n);
    std::copy(v.begin(), v.end(), p + 4 * n);
  }
  return out;
}

py::array_t<double> quaternion_array(const Quaternion& q) {
  return py::array_t<double>(4, &q.w);
}

py::dict report_dict(const InequalityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["slack"] = r.slack;
  d["holds"] = r.holds;
  d["context"] = r.context;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternion coupled fractional Fourier transforms on 4-D lattices";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<CoupledPair>(m, "CoupledPair")
      .def_readonly("alpha", &CoupledPair::alpha)
      .def_readonly("beta", &CoupledPair::beta)
      .def_readonly("gamma", &CoupledPair::gamma)
      .def_readonly("delta", &CoupledPair::delta)
      .def_readonly("a", &CoupledPair::a)
      .def_readonly("b", &CoupledPair::b)
      .def_readonly("c", &CoupledPair::c)
      .def_property_readonly("d", [](const CoupledPair& p) { return quaternion_array(p.d); });

  py::class_<ParamSet>(m, "Params")
      .def(py::init([](std::array<double, 2> alpha, std::array<double, 2> beta) {
             return derive_params(alpha[0], beta[0], alpha[1], beta[1]);
           }),
           py::arg("alpha"), py::arg("beta"))
      .def_readonly("left", &ParamSet::left)
      .def_readonly("right", &ParamSet::right);

  py::class_<SpectrumField>(m, "Spectrum")
      .def_property_readonly("values",
                             [](const SpectrumField& s) { return to_array(s.values, shape_of(s.base_freq)); })
      .def_property_readonly("xi",
                             [](const SpectrumField& s) {
                               return points_array(s.values.size(), [&](std::size_t k) { return s.xi_at(k); });
                             })
      .def_readonly("cell_measure", &SpectrumField::cell_measure)
      .def_readonly("params", &SpectrumField::params);

  py::class_<TimeFreqField>(m, "TimeFreq")
      .def_property_readonly("values",
                             [](const TimeFreqField& s) {
                               auto shape = shape_of(s.base_freq);
                               shape.insert(shape.begin(), static_cast<py::ssize_t>(s.position_count()));
                               return to_array(s.values, shape);
                             })
      .def_property_readonly("x",
                             [](const TimeFreqField& s) {
                               return points_array(s.position_count(), [&](std::size_t m) { return s.x_at(m); });
                             })
      .def_property_readonly("xi",
                             [](const TimeFreqField& s) {
                               return points_array(s.base_freq.size(), [&](std::size_t k) { return s.xi_at(k); });
                             })
      .def_readonly("x_cell", &TimeFreqField::x_cell)
      .def_readonly("xi_cell", &TimeFreqField::xi_cell);

  m.def(
      "qft",
      [](const Array& f, const py::object& delta) {
        const QSignal4 s = qft_fast(signal_from_array(f, delta));
        return to_array(s.values(), shape_of(s.lattice()));
      },
      py::arg("f"), py::arg("delta"), "Two-sided quaternion Fourier transform on the frequency lattice.");

  m.def(
      "qcfrft",
      [](const Array& f, const py::object& delta, const ParamSet& p, const std::string& method) {
        const QSignal4 s = signal_from_array(f, delta);
        SpectrumField out = qcfrft_fast(s, p);
        if (method == "direct") {
          std::vector<Vec4> xs(out.values.size());
          for (std::size_t k = 0; k < xs.size(); ++k) {
            xs[k] = out.xi_at(k);
          }
          out.values = qcfrft_direct(s, p, xs);
        } else if (method != "fast") {
          throw std::invalid_argument("method must be 'fast' or 'direct'");
        }
        return out;
      },
      py::arg("f"), py::arg("delta"), py::arg("params"), py::arg("method") = "fast");

  m.def(
      "qcfrft_at",
      [](const Array& f, const py::object& delta, const ParamSet& p, const Vec4& xi) {
        return quaternion_array(qcfrft_direct_at(signal_from_array(f, delta), p, xi));
      },
      py::arg("f"), py::arg("delta"), py::arg("params"), py::arg("xi"));

  m.def(
      "qcfrft_inverse",
      [](const SpectrumField& s) {
        const QSignal4 f = qcfrft_inverse(s);
        return to_array(f.values(), shape_of(f.lattice()));
      },
      py::arg("spectrum"));

  m.def(
      "stqcfrft",
      [](const Array& f, const Array& g, const py::object& delta, const ParamSet& p, std::array<std::size_t, 4> stride) {
        return stqcfrft_compute(signal_from_array(f, delta), Window(signal_from_array(g, delta)), p, stride);
      },
      py::arg("f"), py::arg("g"), py::arg("delta"), py::arg("params"),
      py::arg("stride") = std::array<std::size_t, 4>{1, 1, 1, 1});

  m.def(
      "stqcfrft_reconstruct",
      [](const TimeFreqField& s, const Array& g) {
        const QSignal4 f = stqcfrft_reconstruct(s, Window(signal_from_array(g, py::cast(s.time.delta))));
        return to_array(f.values(), shape_of(f.lattice()));
      },
      py::arg("field"), py::arg("g"));

  m.def("cerf", &cerf, py::arg("z"), "Complex error function.");
  m.def(
      "gaussian_qcfrft",
      [](const ParamSet& p, double A, double B, const Vec4& xi) {
        return quaternion_array(gaussian_qcfrft(p, A, B, xi));
      },
      py::arg("params"), py::arg("A"), py::arg("B"), py::arg("xi"));
  m.def(
      "box_window_stqcfrft",
      [](const ParamSet& p, const Vec4& x, const Vec4& xi) { return quaternion_array(box_window_stqcfrft(p, x, xi)); },
      py::arg("params"), py::arg("x"), py::arg("xi"));

  m.def(
      "hy_check",
      [](const Array& f, const py::object& delta, const ParamSet& p, double exp_p) {
        return report_dict(hy_check(signal_from_array(f, delta), p, exp_p));
      },
      py::arg("f"), py::arg("delta"), py::arg("params"), py::arg("p"));
  m.def(
      "renyi_up",
      [](const Array& f, const py::object& delta, const ParamSet& p, double alpha0) {
        return report_dict(renyi_up_report(signal_from_array(f, delta), p, alpha0));
      },
      py::arg("f"), py::arg("delta"), py::arg("params"), py::arg("alpha0"));
  m.def(
      "shannon_up",
      [](const Array& f, const py::object& delta, const ParamSet& p) {
        return report_dict(shannon_up_report(signal_from_array(f, delta), p));
      },
      py::arg("f"), py::arg("delta"), py::arg("params"));
  m.def(
      "lieb",
      [](const Array& f, const Array& g, const py::object& delta, const ParamSet& p, double q) {
        return report_dict(
            lieb_inequality_report(signal_from_array(f, delta), Window(signal_from_array(g, delta)), p, q));
      },
      py::arg("f"), py::arg("g"), py::arg("delta"), py::arg("params"), py::arg("q"));

  m.def(
      "verify_json",
      [](const std::string& suite, std::size_t size, std::uint64_t seed) {
        VerifyOptions o;
        o.suite = suite;
        o.size = size;
        o.seed = seed;
        return to_json(run_verify(o)).dump();
      },
      py::arg("suite") = "all", py::arg("size") = 6, py::arg("seed") = 42);

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI subcommand in process; returns (exit_code, stdout, stderr).");

  m.def(
      "load",
      [](const std::string& path) {
        const QSignal4 f = signal_from(read_signal_file(path));
        return py::make_tuple(to_array(f.values(), shape_of(f.lattice())), f.lattice().delta);
      },
      py::arg("path"), "Reads a qsig4 file; returns (array, delta).");
  m.def(
      "save",
      [](const std::string& path, const Array& f, const py::object& delta) {
        write_signal_file(path, to_file(signal_from_array(f, delta)));
      },
      py::arg("path"), py::arg("f"), py::arg("delta"));
}
