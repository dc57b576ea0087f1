#include "symspec/harness.hpp"
#include "symspec/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace symspec;

TEST_CASE("config parsing and validation") {
  Config cfg;
  std::istringstream in("# comment\nseed = 42\neps_main1 = 0.2\nlift_n = 8  # trailing\n\nworkers=2\n");
  cfg.apply(in);
  CHECK(cfg.seed == 42);
  CHECK(cfg.eps_main1 == Rational(1, 5));
  CHECK(cfg.caps.lift_n == 8);
  CHECK(cfg.workers == 2);
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS(cfg.apply_kv("no_such_key", "1"));
  CHECK_THROWS(cfg.apply_kv("seed", "abc"));
  Config bad;
  bad.eps_main1 = Rational(1, 2);
  CHECK_THROWS(bad.validate());
}

TEST_CASE("rationals and masks round trip") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(mask_hex(31) == "0x1f");
  CHECK(parse_mask_hex("0x1f") == 31);
  CHECK_THROWS_AS(parse_mask_hex("1f"), ParseError);
}

TEST_CASE("sign polynomial json round trip") {
  const SignPoly p = sign_poly_for(SymFn::parse("000111"));
  const Json j = to_json(p);
  CHECK(j.at("term_count") == p.term_count());
  CHECK(j.contains("factors"));
  const SignPoly back = sign_poly_from_json(Json::parse(j.dump()));
  CHECK(back.expanded() == p.expanded());
  CHECK(verify_sign(back, SymFn::parse("000111")).ok);
}

TEST_CASE("result serialization") {
  const Json a = to_json(approx_l1(named_function("parity", 3), Rational(1, 5)));
  CHECK(a.at("value") == "4/5");
  CHECK(a.at("ansatz") == "symmetric-levels");
  const Json s = to_json(signmon_exact(expand(SymFn::parse("001"))));
  CHECK(s.at("value") == 3);
  const Json m = to_json(measures(SymFn::parse("000111")));
  CHECK(m.at("rho") == 2);
  CHECK(to_json(spectral_stats(level_spectrum(SymFn::parse("000")))).at("degree") == "undefined");
}

TEST_CASE("individual checks") {
  Config cfg;
  CHECK(check_sign_construction(SymFn::parse("000111"), cfg).verdict == Verdict::pass);
  CHECK(check_infinity_norm(SymFn::parse("00000")).verdict == Verdict::pass);
  CHECK(check_bruck(expand(SymFn::parse("001")), cfg).verdict == Verdict::pass);
  CHECK(check_planner(33).verdict == Verdict::pass);
  CHECK(check_padding(SymFn::parse("0110"), cfg).verdict == Verdict::pass);
  CHECK(check_main4(SymFn::parse("0000"), cfg).verdict == Verdict::vacuous);
  CHECK(check_main4(SymFn::parse("0110"), cfg).verdict == Verdict::pass);
  const auto suite = bs92_suite(6);
  CHECK(suite.size() == 5);
  CHECK(suite.back().second == named_function("threshold2", 6));
}

TEST_CASE("sweep validation") {
  SweepOptions opt;
  opt.checks = {"C1", "C42"};
  CHECK_THROWS(validate(opt));
  opt.checks = {"C1"};
  opt.n_lo = 5;
  opt.n_hi = 3;
  CHECK_THROWS(validate(opt));
  opt.n_lo = 0;
  opt.n_hi = 3;
  CHECK_THROWS(validate(opt));
}

TEST_CASE("sweep is deterministic across worker counts") {
  SweepOptions opt;
  opt.n_lo = 1;
  opt.n_hi = 3;
  opt.checks = {"C1", "C2", "C3", "C7"};
  opt.config.random_samples = 20;
  opt.workers = 1;
  const Ledger one = sweep(opt);
  opt.workers = 3;
  const Ledger three = sweep(opt);
  CHECK_FALSE(one.any_fail());
  CHECK(ledger_jsonl(one, false) == ledger_jsonl(three, false));
  CHECK(summary_csv(one) == summary_csv(three));
  const auto rows = summarize(one);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].check_id == "C1");
  CHECK(rows[0].instances == 4 + 8 + 16);
  CHECK(rows[2].instances == 4 + 8 + 16 + 20);
}

TEST_CASE("sweep caps emit one skip per n") {
  SweepOptions opt;
  opt.n_lo = 5;
  opt.n_hi = 6;
  opt.checks = {"C3"};
  const Ledger l = sweep(opt);
  REQUIRE(l.results.size() == 2);
  CHECK(l.results[0].verdict == Verdict::skip);
  CHECK(l.results[0].instance == "n=5");
}

TEST_CASE("replaying one function") {
  SweepOptions opt;
  opt.n_lo = 1;
  opt.n_hi = 14;
  opt.checks = {"C2"};
  opt.only = SymFn::parse("000111");
  const Ledger l = sweep(opt);
  REQUIRE(l.results.size() == 1);
  CHECK(l.results[0].instance == "sym:000111");
}
