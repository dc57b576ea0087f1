#include "oracles.hpp"

#include "symspec/fourier.hpp"
#include "symspec/liftmat.hpp"
#include "symspec/matrix.hpp"
#include "symspec/optimize.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace symspec;

namespace {

Matrix<int> from_rows(std::vector<std::vector<int>> rows) {
  Matrix<int> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Rank by plain rational elimination.
std::size_t naive_rank(const Matrix<int>& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("string enumeration is lexicographic by bitstring") {
  CHECK(all_strings(2) == std::vector<Mask>{0b00, 0b10, 0b01, 0b11});
  CHECK(weight_strings(3, 1) == std::vector<Mask>{0b100, 0b010, 0b001});
  for (int len = 1; len <= 8; ++len)
    for (int w = 0; w <= len; ++w) {
      const auto s = weight_strings(len, w);
      REQUIRE(s.size() == binomial_u64(len, w));
      for (Mask x : s) REQUIRE(popcount(x) == w);
    }
}

TEST_CASE("full lifts") {
  const SymFn id = SymFn::parse("01");
  CHECK(lift(id, LiftKind::xor_kind).data == from_rows({{0, 1}, {1, 0}}));
  CHECK(lift(id, LiftKind::and_kind).data == from_rows({{0, 0}, {0, 1}}));
  CHECK(exact_rank(lift(SymFn::parse("010"), LiftKind::xor_kind).data) == 2);
  const SymFn f = SymFn::parse("0110");
  const LiftMatrix m = lift(f, LiftKind::xor_kind);
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      REQUIRE(m.data(i, j) == f(popcount(m.rows[i] ^ m.cols[j])));
}

TEST_CASE("promise lifts") {
  const SymFn f = SymFn::parse("0110");
  const LiftMatrix m = promise_lift(f, LiftKind::xor_kind, 1, 0);
  REQUIRE(m.data.rows() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.data(i, j) == (i == j ? f(0) : f(2)));
  const LiftMatrix k0 = promise_lift(f, LiftKind::xor_kind, 0, 2);
  CHECK(k0.data == from_rows({{f(2)}}));
  const LiftMatrix big = promise_lift(named_function("maj", 9), LiftKind::and_kind, 3, 0);
  CHECK(big.data.rows() == 84);
  CHECK(big.data.cols() == 84);
  CHECK_THROWS(promise_lift(f, LiftKind::xor_kind, 2, 0));
}

TEST_CASE("xor/and identity on the promise") {
  for (std::uint64_t code = 0; code < 128; ++code) {
    const XorAndIdentity r = xor_to_and_identity(SymFn::from_code(6, code), 2, 0);
    REQUIRE(r.entries_checked == 225);
    REQUIRE(r.equal());
  }
  const XorAndIdentity shifted = xor_to_and_identity(named_function("maj", 9), 3, 1);
  CHECK(shifted.equal());
  const XorAndIdentity k0 = xor_to_and_identity(SymFn::parse("0110"), 0, 1);
  CHECK(k0.equal());
  CHECK(k0.xor_side.data == from_rows({{1}}));
}

TEST_CASE("padding embedding") {
  for (int m = 1; m <= 4; ++m)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m + 1)); ++code) {
      const PaddingEmbedding e = padding_embedding(SymFn::from_code(m, code));
      REQUIRE(e.ok());
      REQUIRE(e.pairs_checked == (std::uint64_t{1} << (2 * m)));
    }
  CHECK(popcount(pad_row(0b01, 2)) == 2);
  CHECK((pad_row(0b01, 2) & pad_col(0b11, 2)) == 0b01);
}

TEST_CASE("rank, eigenvalues and singular values") {
  CHECK(exact_rank(from_rows({{0, 1}, {1, 0}})) == 2);
  CHECK(exact_rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(exact_rank(Matrix<int>(4, 4)) == 0);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    Matrix<int> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % 3) - 1;
    REQUIRE(exact_rank(m) == naive_rank(m));
    REQUIRE(rank_mod_p(m) <= naive_rank(m));
  }

  const MatrixStats s = matrix_stats(from_rows({{0, 1}, {1, 0}}));
  CHECK(s.rank == 2);
  CHECK(s.trace_norm == doctest::Approx(2));
  CHECK(s.spectral == doctest::Approx(1));
  const MatrixStats z = matrix_stats(Matrix<int>(3, 3));
  CHECK(z.rank == 0);
  CHECK(z.trace_norm == 0);
  CHECK(z.spectral == 0);

  const auto ev = symmetric_eigenvalues(from_rows({{2, 1}, {1, 2}}).cast<double>());
  CHECK(ev[0] == doctest::Approx(3));
  CHECK(ev[1] == doctest::Approx(1));
  const auto sv = singular_values(from_rows({{3, 0}, {4, 0}}).cast<double>());
  CHECK(sv[0] == doctest::Approx(5));
  CHECK(sv[1] == doctest::Approx(0).epsilon(1e-9));
}

TEST_CASE("xor lift stats: eigensolver agrees with the spectrum") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const LiftMatrix m = lift(f, LiftKind::xor_kind);
      const MatrixStats analytic = matrix_stats(m);
      const MatrixStats numeric = matrix_stats(m.data);
      REQUIRE(analytic.analytic);
      REQUIRE(analytic.rank == numeric.rank);
      const double scale = std::ldexp(1.0, n);
      for (std::size_t i = 0; i < analytic.singular_values.size(); ++i)
        REQUIRE(std::abs(analytic.singular_values[i] - numeric.singular_values[i]) <= 1e-8 * scale);
      const XorSpectrumCertificate cert = certify_xor_spectrum(m);
      REQUIRE(cert.verified);
      REQUIRE(static_cast<double>(cert.trace_norm()) == doctest::Approx(analytic.trace_norm));
    }
  const MatrixStats par = matrix_stats(lift(named_function("parity", 5), LiftKind::xor_kind));
  CHECK(par.trace_norm == doctest::Approx(32));
}

TEST_CASE("ftoF report") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const FtoFReport r = ftoF_check(SymFn::from_code(n, code), Rational(1, 4));
      REQUIRE(r.items.size() == 6);
      REQUIRE(r.all_pass());
    }
  const FtoFReport big = ftoF_check(named_function("maj", 7), Rational(1, 4));
  CHECK(big.items.size() == 3);
  CHECK(big.all_pass());
}

TEST_CASE("trace and sign-rank bounds") {
  CHECK(trace_rank_bound(Rational(2), 2, Rational(0)) == 1);
  CHECK(trace_rank_bound(Rational(0), 4, Rational(1, 4)) == 0);
  const LiftMatrix par3 = lift(named_function("parity", 3), LiftKind::xor_kind);
  CHECK(trace_rank_bound(par3, Rational(1, 5)) == Rational(4, 9));
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const LiftMatrix m = lift(SymFn::from_code(n, code), LiftKind::xor_kind);
      REQUIRE(trace_rank_bound(m, Rational(0)) <= Rational(exact_rank(m.data)));
    }

  const Matrix<double> m = from_rows({{0, 1}, {1, 0}}).cast<double>();
  CHECK(trace_witness_bound(m, Matrix<double>(2, 2), 0.25) == 0);
  // psi = M: (||M||_F^2 - eps * ones) / ||M|| = (2 - 0.5) / 1
  CHECK(trace_witness_bound(m, m, 0.25) == doctest::Approx(1.5));

  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Matrix<double> lifted = lift(f, LiftKind::xor_kind).data.cast<double>();
      const double target = std::ldexp(approx_l1(f, Rational(1, 4)).value.get_d(), n);
      const double bound = trace_witness_bound(lifted, xor_dual_witness(f, Rational(1, 4)), 0.25);
      REQUIRE(std::abs(bound - target) <= 1e-6);
    }

  CHECK(forster_bound(from_rows({{-1, 1}, {1, -1}})) == doctest::Approx(1));
  CHECK(forster_bound(Matrix<int>(4, 4, 1)) == doctest::Approx(1));
  CHECK(forster_bound(sign_matrix(lift(named_function("parity", 4), LiftKind::xor_kind))) == doctest::Approx(1));
  CHECK_THROWS(forster_bound(from_rows({{0, 1}, {1, 0}})));
}

TEST_CASE("planner examples") {
  const ReductionPlan small = plan_for_witness(33, 9);
  CHECK(small.plan_case == PlanCase::small_s);
  CHECK(small.t == 0);
  CHECK(small.k == 6);
  CHECK(small.ell == 1);
  CHECK(check_plan(small).all());
  const ReductionPlan even = plan_for_witness(33, 8);
  CHECK(even.t == 1);
  CHECK(even.k == 5);
  CHECK(even.ell == 1);
  CHECK(check_plan(even).all());
  CHECK_FALSE(plan_reduction(named_function("parity", 9)).has_value());
  const auto maj = plan_reduction(named_function("maj", 9));
  REQUIRE(maj.has_value());
  CHECK(check_plan(*maj).all());
  for (int n = 2; n <= 200; ++n)
    for (int s = 1; s <= (n + 1) / 2; ++s) REQUIRE(check_plan(plan_for_witness(n, s)).all());
}
