#include "oracles.hpp"

#include "symspec/fourier.hpp"
#include "symspec/lp.hpp"
#include "symspec/optimize.hpp"

#include <doctest.h>

using namespace symspec;

TEST_CASE_TEMPLATE("simplex on trivial programs", T, double, Rational) {
  lp::Problem<T> p;
  p.objective = {T(1)};
  p.add_row({T(1)}, lp::Sense::ge, T(3));
  auto r = lp::solve(p);
  CHECK(r.status == lp::Status::optimal);
  CHECK(r.value == T(3));

  lp::Problem<T> q;
  q.objective = {T(0)};
  q.add_row({T(1)}, lp::Sense::le, T(0));
  q.add_row({T(1)}, lp::Sense::ge, T(1));
  CHECK(lp::solve(q).status == lp::Status::infeasible);

  lp::Problem<T> u;
  u.maximize = true;
  u.objective = {T(1)};
  u.add_row({T(1)}, lp::Sense::ge, T(0));
  CHECK(lp::solve(u).status == lp::Status::unbounded);
}

TEST_CASE("simplex with free variables and equalities") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x - y = -1/2 over free x, y.
  lp::Problem<Rational> p;
  p.maximize = true;
  p.objective = {1, 1};
  p.bounds = {lp::Bound<Rational>::free(), lp::Bound<Rational>::free()};
  p.add_row({1, 2}, lp::Sense::le, 4);
  p.add_row({3, 1}, lp::Sense::le, 6);
  p.add_row({1, -1}, lp::Sense::eq, Rational(-1, 2));
  const auto r = lp::solve(p);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == Rational(3, 2));
  CHECK(r.value == Rational(5, 2));
}

TEST_CASE("approx_l1 of parity is 1 - eps") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(approx_l1(named_function("parity", n), Rational(1, 5)).value == Rational(4, 5));
    CHECK(approx_l1(named_function("parity", n), Rational(1, 4)).value == Rational(3, 4));
  }
}

TEST_CASE("approx_l1 boundary cases and witness validity") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Rational l1 = spectral_stats(level_spectrum(f)).l1;
      REQUIRE(approx_l1(f, 0).value == l1);
      const ApproxResult a = approx_l1(f, Rational(1, 5));
      REQUIRE(a.value <= l1);
      REQUIRE(a.max_error <= Rational(1, 5));
      Rational sum = 0;
      for (int k = 0; k <= n; ++k) sum += abs(a.witness[k]) * binomial(n, k);
      REQUIRE(sum == a.value);
      REQUIRE(approx_l1(f, Rational(1, 4)).value <= a.value);
    }
  CHECK(approx_l1(SymFn::parse("0000"), Rational(1, 4)).value == 0);
}

TEST_CASE("symmetric and dense approx_l1 agree for n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Rational eps(1, 5);
      const ApproxResult sym = approx_l1(f, eps);
      const ApproxResult dense = approx_l1_dense(expand(f), eps);
      REQUIRE(sym.value == dense.value);
      REQUIRE(approx_l1_dual(expand(f), eps).value == sym.value);
    }
}

TEST_CASE("mon_eps_exact") {
  CHECK(mon_eps_exact(expand(SymFn::parse("000")), Rational(1, 4)).value == 0);
  const MonEpsResult p2 = mon_eps_exact(expand(SymFn::parse("010")), Rational(1, 4));
  CHECK(p2.value == 2);
  CHECK(p2.error <= Rational(1, 4));
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const BoolFn g = expand(SymFn::from_code(n, code));
      REQUIRE(mon_eps_exact(g, 0).value == spectral_stats(wht(g)).mon);
      REQUIRE(mon_eps_exact(g, Rational(1, 4)).value == mon_eps_exact(complement_inputs(g), Rational(1, 4)).value);
    }
}

TEST_CASE("mon_eps_symmetric_upper") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(mon_eps_symmetric_upper(named_function("parity", n), Rational(1, 4)).value == 2);
    CHECK(mon_eps_symmetric_upper(named_function("const1", n), Rational(1, 4)).value == 1);
  }
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      REQUIRE(mon_eps_symmetric_upper(f, Rational(1, 4)).value >=
              mon_eps_exact(expand(f), Rational(1, 4)).value);
    }
}

TEST_CASE("signmon_exact on small functions") {
  for (int n = 1; n <= 3; ++n) {
    const SignmonResult r = signmon_exact(expand(named_function("parity", n)));
    CHECK(r.value == 1);
    CHECK(verify_sign(r.certificate.poly, expand(named_function("parity", n))).ok);
  }
  const SignmonResult and2 = signmon_exact(expand(SymFn::parse("001")));
  CHECK(and2.value == 3);
  CHECK(and2.certificate.margin > 0);
  CHECK(verify_sign(and2.certificate.poly, expand(SymFn::parse("001"))).ok);
  CHECK(signmon_exact(expand(SymFn::parse("1111"))).value == 1);
}

TEST_CASE("verify_sign") {
  for (int n = 1; n <= 6; ++n) {
    const SymFn par = named_function("parity", n);
    const SignCheck good = verify_sign(SignPoly::full_parity(n, -1), par);
    CHECK(good.ok);
    CHECK(good.margin == 1);
    CHECK_FALSE(verify_sign(SignPoly::full_parity(n, 1), par).ok);
  }
  // -2 - 2 chi_1 - chi_2: values -5, -1, -3, 1
  const SignPoly p = SignPoly::sparse(2, {{0, Rational(-2)}, {1, Rational(-2)}, {2, Rational(-1)}});
  CHECK(verify_sign(p, expand(SymFn::parse("001"))).ok);
}

TEST_CASE("eps validation") {
  CHECK_THROWS(check_eps(Rational(1, 2)));
  CHECK_THROWS(check_eps(Rational(-1, 10)));
  CHECK_NOTHROW(check_eps(Rational(1, 4)));
}
