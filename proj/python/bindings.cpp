#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include <sstream>
#include <string>
#include <vector>

#include "entspec/asymptotics.hpp"
#include "entspec/cli.hpp"
#include "entspec/errors.hpp"
#include "entspec/model.hpp"
#include "entspec/oracle.hpp"
#include "entspec/partitions.hpp"
#include "entspec/spectrum.hpp"

namespace py = pybind11;
using namespace entspec;

namespace {

py::int_ to_python(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_python(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_python(x));
  return out;
}

Representation representation_from(const std::string& name) {
  for (auto r : {Representation::Theta, Representation::Lambda, Representation::QSeries,
                 Representation::SpectrumSum})
    if (to_string(r) == name) return r;
  throw DomainError("unknown representation: " + name);
}

Regime regime_from(const std::string& name) {
  for (auto r : {Regime::HighField, Regime::LowField})
    if (to_string(r) == name) return r;
  throw DomainError("unknown regime: " + name);
}

}  // namespace

PYBIND11_MODULE(_entspec, m) {
  m.doc() = "Exact entanglement spectrum of the XY chain";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CriticalInputError>(m, "CriticalInputError", domain.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<ModelPoint>(m, "ModelPoint")
      .def_readonly("gamma", &ModelPoint::gamma)
      .def_readonly("h", &ModelPoint::h)
      .def_property_readonly("region", [](const ModelPoint& p) { return std::string(to_string(p.region)); })
      .def("__repr__", [](const ModelPoint& p) {
        std::ostringstream s;
        s << "ModelPoint(gamma=" << p.gamma << ", h=" << p.h << ", region=" << to_string(p.region) << ")";
        return s.str();
      });

  py::class_<EllipticData>(m, "EllipticData")
      .def_readonly("k", &EllipticData::k)
      .def_readonly("k_prime", &EllipticData::k_prime)
      .def_readonly("I_k", &EllipticData::big_I_k)
      .def_readonly("I_k_prime", &EllipticData::big_I_k_prime)
      .def_readonly("tau0", &EllipticData::tau0)
      .def_readonly("q", &EllipticData::q);

  m.def("classify", &classify, py::arg("gamma"), py::arg("h"), py::arg("eps_crit") = kDefaultEpsCrit);
  m.def("is_gapped", &is_gapped);
  m.def("elliptic_data", &elliptic_data);
  m.def("regime", [](const ModelPoint& p) { return std::string(to_string(regime_of(p))); });

  m.def(
      "exact_spectrum",
      [](const ModelPoint& p, std::size_t n_levels) {
        const EntanglementSpectrum s = exact_spectrum(p, n_levels);
        py::dict d;
        d["regime"] = std::string(to_string(s.regime));
        d["eigenvalues"] = s.eigenvalues;
        d["log_eigenvalues"] = s.log_eigenvalues;
        d["degeneracies"] = to_python(s.degeneracies);
        return d;
      },
      py::arg("point"), py::arg("n_levels"));

  m.def(
      "renyi_entropy",
      [](const ModelPoint& p, double alpha, const std::string& rep) {
        return renyi_entropy(p, alpha, representation_from(rep)).value;
      },
      py::arg("point"), py::arg("alpha"), py::arg("representation") = "qseries");
  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("zeta", &zeta_product, py::arg("point"), py::arg("alpha"));
  m.def("small_alpha_entropy", &small_alpha_entropy, py::arg("point"), py::arg("alpha"));

  m.def(
      "degeneracy_tables",
      [](std::size_t n_max) {
        const auto t = shared_tables(n_max);
        py::dict d;
        d["a"] = to_python(t->a);
        d["b"] = to_python(t->b);
        d["p_distinct"] = to_python(t->p_distinct);
        return d;
      },
      py::arg("n_max"));

  m.def(
      "asymptotic_degeneracy",
      [](std::size_t n, const std::string& regime) { return asymptotic_degeneracy(n, regime_from(regime)).log_value; },
      py::arg("n"), py::arg("regime"), "Natural log of the leading asymptotic degeneracy.");
  m.def(
      "cauchy_degeneracy",
      [](const ModelPoint& p, std::size_t n, std::optional<std::size_t> points, std::optional<double> radius) {
        return cauchy_degeneracy(p, n, points ? *points : default_quadrature_points(n), radius);
      },
      py::arg("point"), py::arg("n"), py::arg("quadrature_points") = py::none(), py::arg("radius") = py::none());
  m.def("log_generating_function", &log_generating_function, py::arg("point"), py::arg("z"));

  m.def(
      "free_fermion_spectrum",
      [](const ModelPoint& p, std::size_t block_size, std::size_t max_levels) {
        const OracleSpectrum s = free_fermion_spectrum(p, block_size, max_levels);
        py::dict d;
        d["eigenvalues"] = s.eigenvalues;
        d["log_eigenvalues"] = s.log_eigenvalues;
        d["tail_deficit"] = s.tail_deficit;
        d["warnings"] = s.warnings;
        return d;
      },
      py::arg("point"), py::arg("block_size"), py::arg("max_levels") = 100);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"entspec"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(int(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface in process; returns (exit_code, stdout, stderr).");
}
