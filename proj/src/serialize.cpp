#include "symspec/serialize.hpp"

#include <cstdio>

namespace symspec {

std::string mask_hex(Mask m) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(m));
  return buf;
}

Mask parse_mask_hex(std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    throw ParseError("mask must look like 0x1f", 0);
  Mask m = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    const char c = text[i];
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ParseError("bad hex digit in mask", i);
    if (m >> 60) throw ParseError("mask overflows 64 bits", i);
    m = m << 4 | static_cast<Mask>(d);
  }
  return m;
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json terms_json(const std::map<Mask, Rational>& terms) {
  Json a = Json::array();
  for (const auto& [mask, c] : terms) a.push_back({{"mask", mask_hex(mask)}, {"coeff", to_string(c)}});
  return a;
}

}  // namespace

Json to_json(const Measures& m) {
  return {{"r0", m.r0}, {"r1", m.r1}, {"r", m.r}, {"lambda", m.lambda}, {"rho", m.rho}};
}

Json to_json(const SpectralStats& s) {
  Json j;
  j["degree"] = s.degree ? Json(*s.degree) : Json("undefined");
  j["mon"] = s.mon;
  j["l1"] = to_string(s.l1);
  j["linf"] = to_string(s.linf);
  return j;
}

Json to_json(const LevelSpectrum& s) { return {{"n", s.n}, {"levels", rationals(s.levels)}}; }

Json to_json(const ApproxResult& r) {
  return {{"value", to_string(r.value)},
          {"eps", to_string(r.eps)},
          {"ansatz", r.ansatz == Ansatz::dense ? "dense" : "symmetric-levels"},
          {"witness", rationals(r.witness)},
          {"max_error", to_string(r.max_error)}};
}

Json to_json(const MonEpsResult& r) {
  Json support = Json::array();
  for (Mask m : r.support) support.push_back(mask_hex(m));
  return {{"value", r.value},
          {"support", support},
          {"coeffs", rationals(r.coeffs)},
          {"error", to_string(r.error)},
          {"supports_tested", r.supports_tested}};
}

Json to_json(const LevelSupportResult& r) {
  return {{"value", r.value}, {"levels", r.levels}, {"coeffs", rationals(r.coeffs)}, {"error", to_string(r.error)}};
}

Json to_json(const SignPoly& p, const Caps& caps) {
  Json j;
  j["n"] = p.n();
  j["term_count"] = p.term_count();
  if (p.is_symmetric()) j["levels"] = rationals(p.levels());
  j["terms"] = terms_json(p.expanded(caps));
  if (!p.factors().empty()) {
    Json factors = Json::array();
    for (const auto& f : p.factors()) factors.push_back(to_json(f, caps));
    j["factors"] = factors;
  }
  return j;
}

Json to_json(const SignCertificate& c, const Caps& caps) {
  return {{"margin", to_string(c.margin)}, {"poly", to_json(c.poly, caps)}};
}

Json to_json(const SignmonResult& r, const Caps& caps) {
  return {{"value", r.value}, {"supports_tested", r.supports_tested}, {"certificate", to_json(r.certificate, caps)}};
}

Json to_json(const ReductionPlan& p) {
  return {{"n", p.n},
          {"reversed", p.reversed},
          {"s", p.s},
          {"t", p.t},
          {"k", p.k},
          {"ell", p.ell},
          {"case", to_string(p.plan_case)},
          {"k_over_n", p.k_fraction()},
          {"ell_over_n", p.ell_fraction()}};
}

Json to_json(const MatrixStats& s) {
  return {{"rank", s.rank},
          {"trace_norm", s.trace_norm},
          {"frobenius", s.frobenius},
          {"spectral", s.spectral},
          {"analytic", s.analytic},
          {"singular_values", s.singular_values}};
}

Json to_json(const FtoFReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back({{"item", i.item}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"pass", i.pass}, {"note", i.note}});
  return {{"f", r.f.to_string()}, {"all_pass", r.all_pass()}, {"items", items}};
}

Json to_json(const Bs92Result& r) {
  return {{"n", r.n},
          {"eps", to_string(r.eps)},
          {"l1", to_string(r.l1)},
          {"bound", to_string(r.bound)},
          {"samples", r.samples},
          {"trials", r.trials.size()},
          {"best_trial", r.best},
          {"best_error", r.trials.empty() ? 0.0 : r.trials[r.best].linf_error},
          {"best_support", r.trials.empty() ? 0 : r.trials[r.best].support},
          {"median_error", r.median_error}};
}

SignPoly sign_poly_from_json(const Json& j) {
  std::map<Mask, Rational> terms;
  for (const auto& t : j.at("terms"))
    terms[parse_mask_hex(t.at("mask").get<std::string>())] = parse_rational(t.at("coeff").get<std::string>());
  return SignPoly::sparse(j.at("n").get<int>(), std::move(terms));
}

}  // namespace symspec
