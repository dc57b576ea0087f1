#include "oracles.hpp"

#include "symspec/construct.hpp"
#include "symspec/fourier.hpp"
#include "symspec/optimize.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symspec;

namespace {

Integer power(int base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("one-flip polynomial for n = 3, flip at 2") {
  const SymFn f = SymFn::parse("1000");
  const auto spec = classify_one_flip(f);
  REQUIRE(spec.has_value());
  CHECK(spec->flip == 2);
  CHECK(one_flip_target(*spec) == f);
  const SignPoly p = one_flip_sign_poly(*spec);
  CHECK(p.term_count() == 5);
  CHECK(p.evaluate_weight(0) == Rational(39, 10));
  CHECK(p.evaluate_weight(1) == Rational(-59, 10));
  CHECK(p.evaluate_weight(2) == Rational(-1, 10));
  CHECK(p.evaluate_weight(3) == Rational(-99, 10));
}

TEST_CASE("every rho = 1 function is a one-flip target with an n + 2 term certificate") {
  for (int n = 2; n <= 9; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const auto spec = classify_one_flip(f);
      REQUIRE(spec.has_value() == (oracle::flips(f, 2) == 1));
      if (!spec) continue;
      REQUIRE(one_flip_target(*spec) == f);
      const SignPoly p = one_flip_sign_poly(*spec);
      REQUIRE(p.term_count() <= static_cast<std::uint64_t>(n + 2));
      REQUIRE(verify_sign(p, f).ok);
    }
}

TEST_CASE("one-flip rejects pure parity and bad margins") {
  CHECK_FALSE(classify_one_flip(named_function("parity", 4)).has_value());
  CHECK_FALSE(classify_one_flip(SymFn::parse("11111")).has_value());
  const auto spec = classify_one_flip(SymFn::parse("00001"));
  REQUIRE(spec.has_value());
  CHECK_THROWS(one_flip_sign_poly(*spec, Rational(0)));
  CHECK_THROWS(one_flip_sign_poly(*spec, Rational(2)));
}

TEST_CASE("sign_poly_for meets the (n+2)^rho bound, checked pointwise on the cube") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const SignPoly p = sign_poly_for(f);
      REQUIRE(p.term_count() <= power(n + 2, measures(f).rho));
      REQUIRE(verify_sign(p, f).ok);
      REQUIRE(verify_sign(p, expand(f)).ok);
      const auto terms = p.expanded();
      REQUIRE(terms.size() == p.term_count());
      for (const auto& [mask, c] : terms) REQUIRE(c != 0);
    }
}

TEST_CASE("base cases and named examples") {
  CHECK(sign_poly_for(named_function("parity", 7)).term_count() == 1);
  CHECK(sign_poly_for(named_function("const1", 7)).term_count() == 1);
  const SignPoly and5 = sign_poly_for(SymFn::parse("000001"));
  CHECK(and5.term_count() <= 7);
  CHECK(verify_sign(and5, SymFn::parse("000001")).ok);
  const SignPoly maj5 = sign_poly_for(SymFn::parse("000111"));
  CHECK(maj5.term_count() <= 49);
  CHECK(verify_sign(maj5, SymFn::parse("000111")).ok);
}

TEST_CASE("construction trace: product signs agree with f at every level") {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      for (const auto& step : construction_trace(f)) {
        for (int j = 0; j <= n; ++j)
          REQUIRE(step.target(j) == (step.reduced(j) == step.single_flip(j)));
        REQUIRE(oracle::flips(step.reduced, 2) == oracle::flips(step.target, 2) - 1);
      }
    }
}

TEST_CASE("product term count is submultiplicative") {
  for (int n = 2; n <= 7; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SignPoly p = sign_poly_for(SymFn::from_code(n, code));
      if (p.factors().size() != 2) continue;
      REQUIRE(p.term_count() <= p.factors()[0].term_count() * p.factors()[1].term_count());
    }
}

TEST_CASE("bs92 sampler") {
  const Bs92Result zero = bs92_sample(SymFn::parse("0000"), Rational(1, 4), 5, 1);
  CHECK(zero.samples == 0);
  CHECK(zero.median_error == 0);

  const int n = 4;
  const Bs92Result par = bs92_sample(named_function("parity", n), Rational(1, 4), 50, 3);
  CHECK(par.samples == 64 * n);
  CHECK(par.trials.size() == 50);
  const auto good = std::count_if(par.trials.begin(), par.trials.end(),
                                  [](const Bs92Trial& t) { return t.linf_error <= 0.25; });
  CHECK(good >= 45);
  for (const auto& t : par.trials) CHECK(t.support <= 2);

  const Bs92Result again = bs92_sample(named_function("parity", n), Rational(1, 4), 50, 3);
  CHECK(bs92_csv(again) == bs92_csv(par));

  const Bs92Result maj = bs92_sample(named_function("maj", 9), Rational(1, 4), 50, 7);
  CHECK(maj.median_error <= 0.25);
  for (const auto& t : maj.trials) CHECK(t.support <= maj.samples);
}

TEST_CASE("bs92 estimator is unbiased") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const BoolFn g = expand(SymFn::from_code(n, code));
      REQUIRE(bs92_expected_coefficients(g) == wht(g).exact);
    }
}
