#include "cli.hpp"
#include "quintic/certify.hpp"
#include "quintic/errors.hpp"
#include "quintic/kernel.hpp"
#include "quintic/ladder.hpp"
#include "quintic/modular.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace quintic;

namespace {

py::dict modulus(const std::string& r_text, int prec, int tol_exp, int digits) {
  const PrecisionContext ctx(prec, tol_exp);
  const SingularModulusRecord m = solve_singular_modulus(Rational::parse(r_text), ctx);
  py::dict d;
  d["r"] = m.r.to_string();
  d["k"] = m.k.to_decimal(digits);
  d["k_comp"] = m.k_comp.to_decimal(digits);
  d["q"] = m.q.to_decimal(digits);
  d["K"] = m.K_k.to_decimal(digits);
  d["K_comp"] = m.K_kcomp.to_decimal(digits);
  d["residual"] = m.residual.to_scientific(6);
  return d;
}

py::list ladder_levels(const std::string& r0_text, int n, int prec, int tol_exp, int digits) {
  const PrecisionContext ctx(prec, tol_exp);
  const Rational r0 = Rational::parse(r0_text);
  const BigReal k0 = solve_singular_modulus(r0, ctx).k;
  const BigReal k_low = solve_singular_modulus(r0 / Rational(25), ctx).k;
  py::list out;
  for (const LadderStep& st : ladder(r0, k0, k_low, n, ctx).steps) {
    py::dict d;
    d["r"] = st.r.to_string();
    d["k"] = st.k.to_decimal(digits);
    d["residual"] = st.oracle_residual.to_scientific(6);
    d["certified"] = st.certified;
    out.append(d);
  }
  return out;
}

py::tuple rrcf(const std::string& r_text, int prec, int tol_exp, int digits) {
  const PrecisionContext ctx(prec, tol_exp);
  const Rational r = Rational::parse(r_text);
  const BigReal closed = rrcf_closed(r, ctx);
  const BigReal cf = rrcf_converged(nome(r, ctx), ctx);
  return py::make_tuple(closed.to_decimal(digits), cf.to_decimal(digits), abs(closed - cf).to_scientific(6));
}

std::string verify_json(const std::string& r_text, const std::optional<std::vector<std::string>>& ids, int prec,
                        int tol_exp) {
  const PrecisionContext ctx(prec, tol_exp);
  return to_json(run_suite(Rational::parse(r_text), ids, ctx)).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_quintic, m) {
  m.doc() = "Singular moduli k_r, the degree-5 ladder and identity certification";

  // Translators run newest first, so subclasses are registered after the base.
  auto& base = py::register_exception<Error>(m, "QuinticError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<BranchError>(m, "BranchError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  m.def("modulus", &modulus, py::arg("r"), py::arg("prec") = 512, py::arg("tol_exp") = 120, py::arg("digits") = 50,
        "k_r, k'_r, q, K(k), K(k') and the defining residual as decimal strings.");
  m.def("ladder", &ladder_levels, py::arg("r0"), py::arg("n") = 1, py::arg("prec") = 512, py::arg("tol_exp") = 120,
        py::arg("digits") = 50);
  m.def("rrcf", &rrcf, py::arg("r"), py::arg("prec") = 512, py::arg("tol_exp") = 120, py::arg("digits") = 50,
        "(closed form, continued fraction, |difference|)");
  m.def("verify_json", &verify_json, py::arg("r"), py::arg("ids") = py::none(), py::arg("prec") = 512,
        py::arg("tol_exp") = 120);
  m.def("registry", &identity_registry);
  m.def("run_cli", &run_cli, py::arg("args"), "(exit code, stdout, stderr) of one CLI invocation.");
}
