#include "oracles.hpp"

#include "symspec/fourier.hpp"
#include "symspec/signpoly.hpp"

#include <doctest.h>

#include <random>

using namespace symspec;

TEST_CASE("dense transform equals naive summation") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::uint8_t> table(std::size_t{1} << n);
      for (auto& v : table) v = rng() & 1;
      const BoolFn g(n, table);
      const Spectrum s = wht(g);
      REQUIRE(s.exact == oracle::naive_spectrum(g));
      const Spectrum fl = wht(g, SpectrumMode::floating);
      for (Mask m = 0; m < s.size(); ++m) REQUIRE(fl.approx[m] == doctest::Approx(s.exact[m].get_d()));
    }
  }
}

TEST_CASE("small spectra") {
  const Spectrum and2 = wht(expand(SymFn::parse("001")));
  CHECK(and2.exact == std::vector<Rational>{Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(1, 4)});
  const Spectrum one = wht(expand(SymFn::parse("1111")));
  CHECK(one.exact[0] == 1);
  for (Mask m = 1; m < 8; ++m) CHECK(one.exact[m] == 0);
  for (int n = 1; n <= 6; ++n) {
    const Spectrum par = wht(expand(named_function("parity", n)));
    const Mask full = (Mask{1} << n) - 1;
    CHECK(par.exact[0] == Rational(1, 2));
    CHECK(par.exact[full] == Rational(-1, 2));
  }
}

TEST_CASE("level spectrum equals the dense transform on every symmetric function, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const LevelSpectrum ls = level_spectrum(f);
      const Spectrum s = wht(expand(f));
      for (Mask m = 0; m < s.size(); ++m) REQUIRE(s.exact[m] == ls.levels[popcount(m)]);
    }
}

TEST_CASE("level spectra of named functions") {
  CHECK(level_spectrum(SymFn::parse("001")).levels ==
        std::vector<Rational>{Rational(1, 4), Rational(-1, 4), Rational(1, 4)});
  const LevelSpectrum p = level_spectrum(named_function("parity", 5));
  CHECK(p.levels.front() == Rational(1, 2));
  CHECK(p.levels.back() == Rational(-1, 2));
  for (int k = 1; k < 5; ++k) CHECK(p.levels[k] == 0);
  for (const auto& c : level_spectrum(SymFn::parse("00000")).levels) CHECK(c == 0);
}

TEST_CASE("krawtchouk values are sums of characters over a weight class") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const Mask s = (Mask{1} << k) - 1;
      for (int j = 0; j <= n; ++j) {
        long acc = 0;
        for (Mask x = 0; x < (Mask{1} << n); ++x)
          if (popcount(x) == j) acc += character(s, x);
        REQUIRE(krawtchouk(n, k, j) == acc);
      }
    }
}

TEST_CASE("evaluate_levels reproduces f from its level spectrum") {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); code += 3) {
      const SymFn f = SymFn::from_code(n, code);
      const LevelSpectrum ls = level_spectrum(f);
      for (int j = 0; j <= n; ++j) REQUIRE(evaluate_levels(ls.levels, j) == (f(j) ? 1 : 0));
    }
}

TEST_CASE("spectral stats") {
  for (int n = 1; n <= 6; ++n) {
    const SpectralStats s = spectral_stats(level_spectrum(named_function("parity", n)));
    CHECK(s.degree == n);
    CHECK(s.mon == 2);
    CHECK(s.l1 == 1);
    CHECK(s.linf == Rational(1, 2));
  }
  const SpectralStats and2 = spectral_stats(level_spectrum(SymFn::parse("001")));
  CHECK(and2.degree == 2);
  CHECK(and2.mon == 4);
  CHECK(and2.l1 == 1);
  CHECK(and2.linf == Rational(1, 4));
  const SpectralStats zero = spectral_stats(level_spectrum(SymFn::parse("0000")));
  CHECK_FALSE(zero.degree.has_value());
  CHECK(zero.mon == 0);
  CHECK(zero.l1 == 0);
}

TEST_CASE("dense and level stats agree, Parseval holds") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Spectrum s = wht(expand(f));
      const SpectralStats a = spectral_stats(s);
      const SpectralStats b = spectral_stats(level_spectrum(f));
      REQUIRE(a.mon == b.mon);
      REQUIRE(a.l1 == b.l1);
      REQUIRE(a.linf == b.linf);
      REQUIRE(a.degree == b.degree);
      Rational energy = 0;
      for (const auto& c : s.exact) energy += c * c;
      int ones = 0;
      const BoolFn g = expand(f);
      for (auto v : g.table()) ones += v;
      REQUIRE(energy == Rational(ones) / (1 << n));
    }
}

TEST_CASE("sign form is the spectrum of 1 - 2f") {
  const LevelSpectrum and2 = sign_form(level_spectrum(SymFn::parse("001")));
  CHECK(and2.levels == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(-1, 2)});
  const LevelSpectrum zero = sign_form(level_spectrum(SymFn::parse("000")));
  CHECK(zero.levels == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("level_product_count against brute force") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c) {
          const Mask target = (Mask{1} << c) - 1;
          long count = 0;
          for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if (popcount(s) != a) continue;
            const Mask t = s ^ target;
            count += popcount(t) == b;
          }
          REQUIRE(level_product_count(n, a, b, c) == count);
        }
}

TEST_CASE("afh trend rows only for r > 1") {
  for (const auto& row : afh_trend_report(2, 7)) {
    CHECK(row.r > 1);
    CHECK(row.l1 == spectral_stats(level_spectrum(SymFn::parse(row.function))).l1);
  }
}
