#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "zcocycle/cocycle.hpp"
#include "zcocycle/dedekind.hpp"
#include "zcocycle/ehrhart.hpp"
#include "zcocycle/verify.hpp"

namespace py = pybind11;
using namespace zcy;

// All values cross the boundary as exact strings in the CLI text formats:
// rationals "p/q", quadratic reals "p/q+r/s*sqrt(D)", matrices "a,b,c,d",
// points "p/q,r/s".

PYBIND11_MODULE(_zcocycle, m) {
    m.doc() = "Exact cocycle, Dedekind-Rademacher, and Ehrhart evaluations";

    m.def("eval_zeta0",
          [](const std::string& gamma, const std::string& x, const std::string& tau) {
              return render_quadratic(
                  zeta0(parse_matrix(gamma), parse_point(x), parse_quadratic(tau)));
          },
          py::arg("gamma"), py::arg("x"), py::arg("tau"));

    m.def("eval_zeta0_rational",
          [](const std::string& gamma, const std::string& x) {
              return render_rational(zeta0_rational_case(parse_matrix(gamma), parse_point(x)));
          },
          py::arg("gamma"), py::arg("x"));

    m.def("eval_dedekind",
          [](long a, long c, const std::string& x) {
              return render_rational(dedekind_rademacher(Int(a), Int(c), parse_point(x)));
          },
          py::arg("a"), py::arg("c"), py::arg("x"));

    m.def("content", [](const std::string& gamma) { return content(parse_matrix(gamma)).get_si(); },
          py::arg("gamma"));

    m.def("lattice_point_count",
          [](const std::string& gamma, long ell, long mm) {
              Rational inv_ell(1, ell);
              inv_ell.canonicalize();
              return lattice_point_count(dilate(triangle_T(parse_matrix(gamma)), inv_ell), Int(mm))
                  .get_str();
          },
          py::arg("gamma"), py::arg("ell"), py::arg("m"));

    m.def("g_coefficient",
          [](const std::string& gamma, long ell, int i, long mm) {
              Rational inv_ell(1, ell);
              inv_ell.canonicalize();
              QuasiPolynomial q = ehrhart_fit(dilate(triangle_T(parse_matrix(gamma)), inv_ell));
              return render_rational(g_coefficient(q, i, Int(mm)));
          },
          py::arg("gamma"), py::arg("ell"), py::arg("i"), py::arg("m"));

    m.def("hayes_residual",
          [](const std::string& gamma, long mm, const std::string& tau) {
              return render_rational(verify_hayes(parse_matrix(gamma), Int(mm), parse_quadratic(tau)));
          },
          py::arg("gamma"), py::arg("m"), py::arg("tau"));

    m.def("theorem3_residual",
          [](const std::string& gamma, const std::string& gamma_prime, long mm) {
              return render_rational(
                  theorem3_residual(parse_matrix(gamma), parse_matrix(gamma_prime), Int(mm)));
          },
          py::arg("gamma"), py::arg("gamma_prime"), py::arg("m"));

    m.def("suite_names", [] { return suite_names(); });

    m.def("run_suite",
          [](const std::string& name, long trials, std::uint64_t seed, long max_entry) {
              SuiteBounds bounds;
              bounds.max_entry = max_entry;
              SuiteReport r = run_suite(name, trials, seed, bounds);
              py::dict d;
              d["suite"] = r.suite;
              d["attempted"] = r.attempted;
              d["passed"] = r.passed;
              d["counterexample"] =
                  r.counterexample.empty() ? py::object(py::none()) : py::object(py::str(r.counterexample));
              d["ok"] = r.ok();
              return d;
          },
          py::arg("name"), py::arg("trials") = 200, py::arg("seed") = 42,
          py::arg("max_entry") = 50);
}
