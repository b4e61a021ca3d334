#include "ricepath/binom.hpp"
#include "ricepath/csv.hpp"
#include "ricepath/depoisson.hpp"
#include "ricepath/errors.hpp"
#include "ricepath/laplace.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/trie.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ricepath;

namespace {

// rationals cross the boundary as "p/q" strings; the Python side wraps them in Fraction
std::vector<std::string> to_strings(const ExactTable& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (const auto& v : t) out.push_back(to_string(v));
  return out;
}

ExactTable from_strings(const std::vector<std::string>& v) {
  ExactTable out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

SequenceSpec toll_from(const std::string& text) {
  const auto head = text.substr(0, text.find(' '));
  if (head == "size" || head == "pathlength" || head == "sorting") return SequenceSpec::parse("toll " + text);
  return SequenceSpec::parse(text);
}

AnalyticFunction wrap(const std::function<Complex(Complex)>& f, double domain, double growth) {
  AnalyticFunction h;
  h.eval = [f](Complex s) {
    py::gil_scoped_acquire gil;
    return f(s);
  };
  h.domain_abscissa = domain;
  h.growth = growth;
  h.name = "python";
  return h;
}

}  // namespace

PYBIND11_MODULE(_ricepath, m) {
  m.doc() = "Binomial transforms, Rice integrals, Laplace liftings and trie costs";
  m.attr("__version__") = csv::version();

  // translators run newest first, so bases go in before their subclasses
  const auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  const auto both = [&base](PyObject* std_base) { return py::make_tuple(base, py::handle(std_base)); };
  py::register_exception<ConvergenceError>(m, "ConvergenceError", both(PyExc_ArithmeticError));
  const auto& domain = py::register_exception<DomainError>(m, "DomainError", both(PyExc_ValueError));
  py::register_exception<RangeError>(m, "RangeError", both(PyExc_ValueError));
  py::register_exception<ParseError>(m, "ParseError", both(PyExc_ValueError));
  py::register_exception<PoleError>(m, "PoleError", py::make_tuple(domain, py::handle(PyExc_ArithmeticError)));

  py::class_<SequenceSpec>(m, "SequenceSpec")
      .def_static("parse", &SequenceSpec::parse, py::arg("text"))
      .def_static("golden", &SequenceSpec::golden)
      .def("value", &SequenceSpec::value, py::arg("k"))
      .def("exact", &SequenceSpec::exact)
      .def("degree", &SequenceSpec::degree)
      .def("valuation", &SequenceSpec::valuation)
      .def("exact_table", [](const SequenceSpec& f, long n) { return to_strings(f.exact_table(n)); }, py::arg("n_max"))
      .def("table", &SequenceSpec::table, py::arg("n_max"))
      .def("canonical", [](const SequenceSpec& f) { return canonicalize(f).sequence; })
      .def("__str__", &SequenceSpec::to_string)
      .def("__repr__", [](const SequenceSpec& f) { return "SequenceSpec.parse('" + f.to_string() + "')"; });

  m.def("_pi_transform", [](const std::vector<std::string>& f) { return to_strings(pi_transform(from_strings(f))); });
  m.def("_shift_table", [](const std::vector<std::string>& f, int k) { return to_strings(shift_table(from_strings(f), k)); });
  m.def("poisson_transform", &poisson_transform_eval, py::arg("f"), py::arg("z"), py::arg("tol") = 1e-12);

  m.def("newton_psi", &newton_psi, py::arg("f"), py::arg("s"), py::arg("tol") = 1e-12);
  m.def("rice_kernel", &rice_kernel, py::arg("n"), py::arg("s"));
  m.def(
      "rice_recover_f",
      [](const std::function<Complex(Complex)>& psi, long n, double a, double domain, double growth, double tol) {
        const auto h = wrap(psi, domain, growth);
        py::gil_scoped_release release;
        return rice_recover_f(h, n, a, tol);
      },
      py::arg("psi"), py::arg("n"), py::arg("abscissa"), py::arg("domain"), py::arg("growth") = 0.0,
      py::arg("tol") = 1e-10);

  m.def(
      "canonical_psi",
      [](double d, int b, Complex s) { return CanonicalPsi(BasicPair{d, b}).psi(s); }, py::arg("d"), py::arg("b"),
      py::arg("s"));
  m.def(
      "psi_via_laplace",
      [](double d, int b, Complex s, double tol) {
        const auto form = make_hat_phi_form(BasicPair{d, b});
        return psi_via_laplace([&form](double u) { return hat_phi_closed_form(form, u); }, s, tol);
      },
      py::arg("d"), py::arg("b"), py::arg("s"), py::arg("tol") = 1e-12);
  m.def(
      "twisted_gamma", [](int ell, int k, Complex s) { return twisted_gamma({ell, k}, s); }, py::arg("ell"),
      py::arg("m"), py::arg("s"));
  m.def(
      "twisted_gamma_closed_form", [](int ell, int k, Complex s) { return twisted_gamma_closed_form({ell, k}, s); },
      py::arg("ell"), py::arg("m"), py::arg("s"));

  m.def("charlier_tau", [](int j, long n) { return py::int_(py::str(charlier_tau(j, n).get_str())); });
  m.def(
      "charlier_estimate",
      [](const SequenceSpec& f, long n, int k) {
        return charlier_truncated_estimate([&f](Complex z) { return poisson_transform_eval(f, z, 1e-15); }, n, k);
      },
      py::arg("f"), py::arg("n"), py::arg("k"));

  m.def(
      "lambda_series", [](const std::string& probs, Complex s) { return lambda_series(MemorylessSource::parse(probs), s); },
      py::arg("probs"), py::arg("s"));
  m.def(
      "entropy", [](const std::string& probs) { return entropy(MemorylessSource::parse(probs)); }, py::arg("probs"));
  m.def(
      "_mean_exact",
      [](const std::string& probs, const std::string& toll, long n) {
        return to_strings(exact_mean_recurrence_exact(MemorylessSource::parse(probs), toll_from(toll), n));
      },
      py::arg("probs"), py::arg("toll"), py::arg("n_max"));
  m.def(
      "mean_float",
      [](const std::string& probs, const std::string& toll, long n) {
        return exact_mean_recurrence_float(MemorylessSource::parse(probs), toll_from(toll), n);
      },
      py::arg("probs"), py::arg("toll"), py::arg("n_max"));
  m.def(
      "_mean_via_rice_pair",
      [](const std::string& probs, const std::string& toll, long n) {
        return to_string(mean_via_rice_pair_exact(MemorylessSource::parse(probs), toll_from(toll), n));
      },
      py::arg("probs"), py::arg("toll"), py::arg("n"));
  m.def(
      "simulate_trie",
      [](const std::string& probs, const std::string& toll, long n, long trials, std::uint64_t seed, int threads) {
        const auto source = MemorylessSource::parse(probs);
        const auto t = toll_from(toll);
        TrieStats st;
        {
          py::gil_scoped_release release;
          st = simulate_trie(source, t, n, trials, seed, threads);
        }
        return py::dict(py::arg("n") = st.n, py::arg("mean") = st.mean, py::arg("stderr") = st.std_error,
                        py::arg("trials") = st.trials, py::arg("seed") = st.seed, py::arg("rng") = st.rng);
      },
      py::arg("probs"), py::arg("toll"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1);
  m.def(
      "asymptotic_constant_fit",
      [](const std::string& probs, const std::string& toll, long lo, long hi) {
        std::vector<long> grid;
        for (long n = lo; n <= hi; ++n) grid.push_back(n);
        const auto fit = asymptotic_constant_fit(MemorylessSource::parse(probs), toll_from(toll), grid);
        return py::dict(py::arg("a") = fit.a, py::arg("b") = fit.b, py::arg("c_fit") = fit.c_fit,
                        py::arg("c_theory") = fit.c_theory, py::arg("rel_err") = fit.rel_err);
      },
      py::arg("probs"), py::arg("toll") = "sorting", py::arg("lo") = 256, py::arg("hi") = 16384);
}
