// Python bindings. Rationals cross the boundary as fractions.Fraction.

#include "symspec/construct.hpp"
#include "symspec/fourier.hpp"
#include "symspec/harness.hpp"
#include "symspec/liftmat.hpp"
#include "symspec/optimize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace symspec;

namespace {

py::object fraction(const Rational& q) {
  const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

// Accepts Fraction, int, float or str; floats go through their repr.
Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

SymFn sym(const std::string& values) { return SymFn::parse(values); }

BoolFn table(const std::vector<int>& values) {
  std::size_t size = values.size();
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if (size == 0 || (std::size_t{1} << n) != size) throw Error("truth table length must be a power of two");
  std::vector<std::uint8_t> bits(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (values[i] != 0 && values[i] != 1) throw Error("truth table entries must be 0 or 1");
    bits[i] = static_cast<std::uint8_t>(values[i]);
  }
  return BoolFn(n, std::move(bits));
}

py::dict terms_dict(const std::map<Mask, Rational>& terms) {
  py::dict out;
  for (const auto& [mask, c] : terms) out[py::int_(mask)] = fraction(c);
  return out;
}

py::dict stats_dict(const SpectralStats& s) {
  py::dict d;
  d["degree"] = s.degree ? py::object(py::int_(*s.degree)) : py::object(py::none());
  d["mon"] = s.mon;
  d["l1"] = fraction(s.l1);
  d["linf"] = fraction(s.linf);
  return d;
}

py::dict matrix_stats_dict(const MatrixStats& s) {
  py::dict d;
  d["rank"] = s.rank;
  d["trace_norm"] = s.trace_norm;
  d["frobenius"] = s.frobenius;
  d["spectral"] = s.spectral;
  d["singular_values"] = s.singular_values;
  d["analytic"] = s.analytic;
  return d;
}

LiftMatrix build_lift(const std::string& f, const std::string& kind, std::optional<int> k, int t) {
  const LiftKind lk = parse_lift_kind(kind);
  return k ? promise_lift(sym(f), lk, *k, t) : lift(sym(f), lk);
}

}  // namespace

PYBIND11_MODULE(_symspec, m) {
  m.doc() = "Spectral measures, sign representations and matrix lifts of symmetric Boolean functions";

  // translators run newest first, so the base class goes in first
  auto base = py::register_exception<Error>(m, "SymspecError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("named_function", [](const std::string& name, int n) { return named_function(name, n).to_string(); },
        py::arg("name"), py::arg("n"));

  m.def("measures", [](const std::string& f) {
    const Measures ms = measures(sym(f));
    py::dict d;
    d["r0"] = ms.r0;
    d["r1"] = ms.r1;
    d["r"] = ms.r;
    d["lambda"] = ms.lambda;
    d["rho"] = ms.rho;
    return d;
  }, py::arg("f"));

  m.def("level_spectrum", [](const std::string& f) { return fractions(level_spectrum(sym(f)).levels); },
        py::arg("f"));
  m.def("spectral_stats", [](const std::string& f) { return stats_dict(spectral_stats(level_spectrum(sym(f)))); },
        py::arg("f"));
  m.def("wht", [](const std::vector<int>& t) { return fractions(wht(table(t)).exact); }, py::arg("table"));
  m.def("expand", [](const std::string& f) {
    const BoolFn g = expand(sym(f));
    return std::vector<int>(g.table().begin(), g.table().end());
  }, py::arg("f"));

  m.def("approx_l1", [](const std::string& f, const py::object& eps) {
    const ApproxResult r = approx_l1(sym(f), rational(eps));
    py::dict d;
    d["value"] = fraction(r.value);
    d["witness"] = fractions(r.witness);
    d["max_error"] = fraction(r.max_error);
    return d;
  }, py::arg("f"), py::arg("eps"));

  m.def("mon_eps", [](const std::vector<int>& t, const py::object& eps) {
    const MonEpsResult r = mon_eps_exact(table(t), rational(eps));
    py::dict d;
    d["value"] = r.value;
    d["support"] = r.support;
    d["coeffs"] = fractions(r.coeffs);
    d["error"] = fraction(r.error);
    return d;
  }, py::arg("table"), py::arg("eps"));

  m.def("signmon", [](const std::vector<int>& t) {
    const SignmonResult r = signmon_exact(table(t));
    py::dict d;
    d["value"] = r.value;
    d["terms"] = terms_dict(r.certificate.poly.expanded());
    d["margin"] = fraction(r.certificate.margin);
    return d;
  }, py::arg("table"));

  m.def("sign_poly", [](const std::string& f, const py::object& margin) {
    const SymFn fn = sym(f);
    const SignPoly p = sign_poly_for(fn, rational(margin));
    const SignCheck chk = verify_sign(p, fn);
    py::dict d;
    d["term_count"] = p.term_count();
    d["terms"] = terms_dict(p.expanded());
    d["verified"] = chk.ok;
    d["margin"] = fraction(chk.margin);
    return d;
  }, py::arg("f"), py::arg("margin") = py::str("1/10"));

  m.def("lift", [](const std::string& f, const std::string& kind, std::optional<int> k, int t) {
    const LiftMatrix lm = build_lift(f, kind, k, t);
    std::vector<std::vector<int>> rows(lm.data.rows(), std::vector<int>(lm.data.cols()));
    for (std::size_t i = 0; i < lm.data.rows(); ++i)
      for (std::size_t j = 0; j < lm.data.cols(); ++j) rows[i][j] = lm.data(i, j);
    return rows;
  }, py::arg("f"), py::arg("kind") = "xor", py::arg("k") = py::none(), py::arg("t") = 0);

  m.def("matrix_stats", [](const std::string& f, const std::string& kind, std::optional<int> k, int t) {
    return matrix_stats_dict(matrix_stats(build_lift(f, kind, k, t)));
  }, py::arg("f"), py::arg("kind") = "xor", py::arg("k") = py::none(), py::arg("t") = 0);

  m.def("plan_reduction", [](const std::string& f) -> py::object {
    const auto p = plan_reduction(sym(f));
    if (!p) return py::none();
    py::dict d;
    d["n"] = p->n;
    d["reversed"] = p->reversed;
    d["s"] = p->s;
    d["t"] = p->t;
    d["k"] = p->k;
    d["ell"] = p->ell;
    d["case"] = to_string(p->plan_case);
    return d;
  }, py::arg("f"));

  m.def("bs92", [](const std::string& f, const py::object& eps, int trials, std::uint64_t seed) {
    const SymFn fn = sym(f);
    const Rational e = rational(eps);
    Bs92Result r;
    {
      py::gil_scoped_release release;
      r = bs92_sample(fn, e, trials, seed);
    }
    py::dict d;
    d["samples"] = r.samples;
    d["bound"] = fraction(r.bound);
    d["median_error"] = r.median_error;
    py::list rows;
    for (const auto& tr : r.trials) rows.append(py::make_tuple(tr.trial, tr.support, tr.linf_error));
    d["trials"] = rows;
    d["best"] = r.best;
    return d;
  }, py::arg("f"), py::arg("eps"), py::arg("trials") = 50, py::arg("seed") = 1);

  m.def("sweep", [](int n_lo, int n_hi, std::vector<std::string> checks, int workers, std::uint64_t seed) {
    SweepOptions opt;
    opt.n_lo = n_lo;
    opt.n_hi = n_hi;
    opt.checks = std::move(checks);
    opt.workers = workers;
    opt.config.seed = seed;
    Ledger ledger;
    {
      py::gil_scoped_release release;
      ledger = sweep(opt);
    }
    py::list out;
    for (const auto& r : ledger.results) {
      py::dict d;
      d["check_id"] = r.check_id;
      d["instance"] = r.instance;
      d["lhs"] = r.lhs;
      d["rhs"] = r.rhs;
      d["verdict"] = to_string(r.verdict);
      d["note"] = r.note;
      out.append(d);
    }
    return out;
  }, py::arg("n_lo"), py::arg("n_hi"), py::arg("checks") = std::vector<std::string>{}, py::arg("workers") = 0,
     py::arg("seed") = 1);
}
