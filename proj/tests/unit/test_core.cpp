#include "oracles.hpp"

#include "symspec/core.hpp"

#include <doctest.h>

using namespace symspec;

namespace {

// r0 straight from its definition, scanning r upward.
int r0_by_definition(const SymFn& f) {
  const int n = f.n();
  const int half = (n + 1) / 2;
  for (int r = 0; r <= half; ++r) {
    bool ok = true;
    for (int i = r; i <= half - 1; ++i) ok = ok && (i + 2 > n || f(i) == f(i + 2));  // n = 1: f(2) absent
    if (ok) return r;
  }
  return half;
}

int r1_by_definition(const SymFn& f) {
  const int n = f.n();
  const int half = (n + 1) / 2;
  for (int r = 0; r <= n / 2 - 1; ++r) {
    bool ok = true;
    for (int i = half; i <= n - r - 2; ++i) ok = ok && f(i) == f(i + 2);
    if (ok) return r;
  }
  return 0;
}

}  // namespace

TEST_CASE("measures on named functions") {
  CHECK(measures(SymFn::parse("010101")) == Measures{0, 0, 0, 5, 0});
  CHECK(measures(SymFn::parse("000001")) == Measures{0, 1, 1, 1, 1});
  CHECK(measures(SymFn::parse("000111")) == Measures{3, 0, 3, 1, 2});
}

TEST_CASE("lambda, rho and r0 match direct counts for every function up to n = 9") {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Measures m = measures(f);
      REQUIRE(m.lambda == oracle::flips(f, 1));
      REQUIRE(m.rho == oracle::flips(f, 2));
      REQUIRE(m.r0 == r0_by_definition(f));
      REQUIRE(m.r == std::max(m.r0, m.r1));
      REQUIRE(m.r1 == r1_by_definition(f));
    }
  }
}

TEST_CASE("reverse, restrict_one, prefix_restrict") {
  CHECK(reverse(SymFn::parse("000001")) == SymFn::parse("100000"));
  CHECK(reverse(SymFn::parse("010101")) == SymFn::parse("101010"));
  CHECK(reverse(SymFn::parse("0110")) == SymFn::parse("0110"));
  CHECK(restrict_one(SymFn::parse("000001")) == SymFn::parse("00001"));
  CHECK(restrict_one(SymFn::parse("010101")) == SymFn::parse("10101"));
  CHECK(restrict_one(SymFn::parse("000000")) == SymFn::parse("00000"));
  CHECK(prefix_restrict(SymFn::parse("000001"), 3) == SymFn::parse("0000"));
  CHECK(prefix_restrict(SymFn::parse("000111"), 4) == SymFn::parse("00011"));
  CHECK(prefix_restrict(SymFn::parse("000111"), 5) == SymFn::parse("000111"));
}

TEST_CASE("expand and complement_inputs") {
  CHECK(expand(SymFn::parse("010")).table() == oracle::values_of({0, 1, 1, 0}));
  CHECK(expand(SymFn::parse("001")).table() == oracle::values_of({0, 0, 0, 1}));
  CHECK(expand(SymFn::parse("111")).table() == oracle::values_of({1, 1, 1, 1}));
  CHECK(complement_inputs(expand(SymFn::parse("001"))).table() == oracle::values_of({1, 0, 0, 0}));
  CHECK(complement_inputs(expand(SymFn::parse("0101"))) == expand(SymFn::parse("1010")));
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      REQUIRE(as_symmetric(expand(f)) == f);
      REQUIRE(complement_inputs(expand(f)) == expand(reverse(f)));
    }
}

TEST_CASE("as_symmetric rejects non-symmetric tables") {
  CHECK_FALSE(as_symmetric(BoolFn(2, oracle::values_of({0, 1, 0, 0}))).has_value());
}

TEST_CASE("parsing and named functions") {
  CHECK(SymFn::parse("0011").n() == 3);
  CHECK_THROWS_AS(SymFn::parse(""), ParseError);
  CHECK_THROWS_AS(SymFn::parse("0"), ParseError);
  CHECK_THROWS_AS(SymFn::parse("01x"), ParseError);
  CHECK(named_function("maj", 5) == SymFn::parse("000111"));
  CHECK(named_function("parity", 3) == SymFn::parse("0101"));
  CHECK(named_function("and", 2) == SymFn::parse("001"));
  CHECK(named_function("or", 2) == SymFn::parse("011"));
  CHECK(named_function("mod3", 6) == SymFn::parse("1001001"));
  CHECK(named_function("threshold2", 3) == SymFn::parse("0011"));
  CHECK_THROWS(named_function("nope", 3));
  const BoolFn g = BoolFn::parse_hex(3, "96");
  CHECK(g == expand(SymFn::parse("0101")));
  CHECK(g.to_hex() == "96");
  CHECK(SymFn::from_code(3, SymFn::parse("0110").code()) == SymFn::parse("0110"));
}
