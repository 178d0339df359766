#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vilenkin/cli.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/points.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace py = pybind11;
using namespace vilenkin;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

GridFunction to_grid(const GroupSpec& spec, const ComplexArray& a) {
  if (a.ndim() != 1) throw SpecMismatch("expected a one-dimensional array");
  std::vector<Complex> v(a.data(), a.data() + a.size());
  return GridFunction(spec, std::move(v));
}

template <class S>
py::array_t<Complex> to_array(const S& s) {
  py::array_t<Complex> out(
      py::array::ShapeContainer{static_cast<py::ssize_t>(s.size())});
  std::copy(s.values().begin(), s.values().end(), out.mutable_data());
  return out;
}

Method parse_method(const std::string& m) {
  if (m == "fast") return Method::fast;
  if (m == "naive") return Method::naive;
  throw Error("method must be 'fast' or 'naive'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vilenkin group transforms, kernels and summability means.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<SpecMismatch>(m, "SpecMismatch", PyExc_ValueError);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def_property_readonly("levels", &GroupSpec::levels)
      .def_property_readonly("size", &GroupSpec::size)
      .def_property_readonly("radices", [](const GroupSpec& g) {
        return std::vector<int>(g.radices().begin(), g.radices().end());
      })
      .def_property_readonly("places", [](const GroupSpec& g) {
        return std::vector<Index>(g.places().begin(), g.places().end());
      })
      .def("interval", &GroupSpec::interval, py::arg("x"), py::arg("rank"))
      .def("add", &GroupSpec::add)
      .def("subtract", &GroupSpec::subtract)
      .def("__repr__", [](const GroupSpec& g) {
        return "GroupSpec(" + format_digits(g.radices()) + ")";
      });

  m.def("make_group",
        [](const std::vector<int>& pattern, std::optional<std::size_t> levels) {
          return GroupSpec::make(pattern, levels.value_or(pattern.size()));
        },
        py::arg("pattern"), py::arg("levels") = py::none());
  m.def("digits", [](const GroupSpec& g, Index n) { return g.digits(n); });
  m.def("index_of", [](const GroupSpec& g, const std::vector<int>& d) {
    return g.index_of(d);
  });

  m.def("rademacher", [](const GroupSpec& g, std::size_t k, std::vector<int> x) {
    return rademacher(g, k, Element(g, std::move(x)));
  });
  m.def("psi", [](const GroupSpec& g, Index n, std::vector<int> x) {
    return psi(g, n, Element(g, std::move(x)));
  });
  m.def("character", [](const GroupSpec& g, Index n) {
    return to_array(character(g, n));
  });
  m.def("forward",
        [](const GroupSpec& g, const ComplexArray& f, const std::string& method) {
          return to_array(forward(to_grid(g, f), parse_method(method)));
        },
        py::arg("group"), py::arg("values"), py::arg("method") = "fast");
  m.def("inverse",
        [](const GroupSpec& g, const ComplexArray& c, const std::string& method) {
          std::vector<Complex> v(c.data(), c.data() + c.size());
          return to_array(inverse(Spectrum(g, std::move(v)), parse_method(method)));
        },
        py::arg("group"), py::arg("coeffs"), py::arg("method") = "fast");
  m.def("partial_sum", [](const GroupSpec& g, const ComplexArray& f, Index n) {
    return to_array(partial_sum(to_grid(g, f), n));
  });
  m.def("convolve",
        [](const GroupSpec& g, const ComplexArray& f, const ComplexArray& h) {
          return to_array(convolve(to_grid(g, f), to_grid(g, h)));
        });
  m.def("norm", [](const GroupSpec& g, const ComplexArray& f, double p) {
    return norm(to_grid(g, f), p);
  });
  m.def("weak_norm", [](const GroupSpec& g, const ComplexArray& f, double p) {
    return weak_norm(to_grid(g, f), p);
  });

  py::class_<WeightSequence>(m, "WeightSequence")
      .def_static("parse", [](const std::string& s) { return WeightSequence::parse(s); })
      .def_static("from_table", &WeightSequence::from_table)
      .def_property_readonly("name", &WeightSequence::name)
      .def_property_readonly("first_valid", &WeightSequence::first_valid)
      .def("q", &WeightSequence::q)
      .def("Q", &WeightSequence::Q);

  m.def("classify", [](const WeightSequence& w, Index n_max) {
    const WeightClass c = classify(w, n_max);
    py::dict d;
    d["monotonicity"] = to_string(c.monotonicity);
    d["fn01_sup"] = c.fn01_sup;
    d["fn011_sup"] = c.fn011_sup;
    d["fn01_bounded"] = c.fn01_bounded;
    d["fn011_bounded"] = c.fn011_bounded;
    d["growth_ratio"] = c.growth_ratio;
    d["regular"] = c.regular;
    d["convergence_gate"] = convergence_gate(c);
    d["domination_gate"] = domination_gate(c);
    d["block_gate"] = block_gate(c);
    return d;
  });

  m.def("dirichlet", [](const GroupSpec& g, Index n) { return to_array(dirichlet(g, n)); });
  m.def("fejer", [](const GroupSpec& g, Index n) { return to_array(fejer(g, n)); });
  m.def("t_kernel", [](const GroupSpec& g, const WeightSequence& w, Index n) {
    return to_array(t_kernel(w, n, g));
  });
  m.def("norlund_kernel", [](const GroupSpec& g, const WeightSequence& w, Index n) {
    return to_array(norlund_kernel(w, n, g));
  });
  m.def("reflection_residual", &reflection_residual);
  m.def("abel_kernel_residual",
        [](const GroupSpec& g, const WeightSequence& w, Index n) {
          return abel_kernel_residual(w, n, g);
        });
  m.def("block_residual",
        [](const GroupSpec& g, const WeightSequence& w, std::size_t rank) {
          return block_residual(w, rank, g);
        });
  m.def("domination_constant", [](const GroupSpec& g, const std::vector<Index>& ns) {
    return domination_constant(ns, g).c;
  });

  m.def("t_mean",
        [](const GroupSpec& g, const ComplexArray& f, const WeightSequence& w,
           Index n, const std::string& method) {
          return to_array(t_mean(to_grid(g, f), w, n, parse_mean_method(method)));
        },
        py::arg("group"), py::arg("values"), py::arg("weights"), py::arg("n"),
        py::arg("method") = "direct");
  m.def("norlund_mean",
        [](const GroupSpec& g, const ComplexArray& f, const WeightSequence& w,
           Index n, const std::string& method) {
          return to_array(norlund_mean(to_grid(g, f), w, n, parse_mean_method(method)));
        },
        py::arg("group"), py::arg("values"), py::arg("weights"), py::arg("n"),
        py::arg("method") = "direct");
  m.def("named_mean",
        [](const std::string& name, const GroupSpec& g, const ComplexArray& f,
           Index n, double alpha) {
          return to_array(named_mean(parse_named_mean(name), to_grid(g, f), n, alpha));
        },
        py::arg("name"), py::arg("group"), py::arg("values"), py::arg("n"),
        py::arg("alpha") = 0.5);

  m.def("lebesgue_modulus", [](const GroupSpec& g, const ComplexArray& f,
                               std::vector<int> x, std::size_t n) {
    return lebesgue_modulus(to_grid(g, f), Element(g, std::move(x)), n);
  });
  m.def("w_modulus", [](const GroupSpec& g, const ComplexArray& f,
                        std::vector<int> x, std::size_t n) {
    return w_modulus(to_grid(g, f), Element(g, std::move(x)), n);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
