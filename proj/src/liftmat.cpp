#include "symspec/liftmat.hpp"

#include "symspec/fourier.hpp"
#include "symspec/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symspec {

namespace {

Mask bit_reverse(Mask x, int length) {
  Mask r = 0;
  for (int i = 0; i < length; ++i)
    if (x >> i & 1) r |= Mask{1} << (length - 1 - i);
  return r;
}

void sort_lexicographic(std::vector<Mask>& v, int length) {
  std::sort(v.begin(), v.end(),
            [length](Mask a, Mask b) { return bit_reverse(a, length) < bit_reverse(b, length); });
}

Mask low_bits(int length) { return length >= 64 ? ~Mask{0} : (Mask{1} << length) - 1; }

std::size_t index_of(const std::vector<Mask>& sorted, Mask x, int length) {
  const auto key = bit_reverse(x, length);
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key, [length](Mask a, Mask k) {
    return bit_reverse(a, length) < k;
  });
  if (it == sorted.end() || *it != x) throw Error("index_of: string not in enumeration");
  return static_cast<std::size_t>(it - sorted.begin());
}

LiftMatrix build(const SymFn& source, LiftKind kind, int length, std::optional<Promise> promise,
                 int offset, std::vector<Mask> strings) {
  LiftMatrix m;
  m.kind = kind;
  m.source = source;
  m.length = length;
  m.promise = promise;
  m.offset = offset;
  m.rows = strings;
  m.cols = std::move(strings);
  m.data = Matrix<int>(m.rows.size(), m.cols.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      const Mask z = kind == LiftKind::xor_kind ? m.rows[i] ^ m.cols[j] : m.rows[i] & m.cols[j];
      m.data(i, j) = source(popcount(z) + offset) ? 1 : 0;
    }
  return m;
}

void check_promise_dim(int length, int k, const Caps& caps) {
  if (k < 0 || k > length) throw Error("promise weight outside [0, length]");
  const std::uint64_t dim = binomial_u64(length, k);
  if (dim > caps.promise_dim)
    throw CapExceeded("promise matrix dimension", static_cast<int>(std::min<std::uint64_t>(dim, 1u << 30)),
                      static_cast<int>(caps.promise_dim));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string to_string(LiftKind kind) { return kind == LiftKind::xor_kind ? "xor" : "and"; }

LiftKind parse_lift_kind(std::string_view text) {
  if (text == "xor") return LiftKind::xor_kind;
  if (text == "and") return LiftKind::and_kind;
  throw ParseError("lift kind must be xor or and", 0);
}

std::vector<Mask> weight_strings(int length, int weight) {
  if (length < 0 || length > 62) throw Error("weight_strings: length out of range");
  std::vector<Mask> out;
  if (weight < 0 || weight > length) return out;
  if (weight == 0) return {0};
  // Gosper's hack over masks of the given weight
  Mask x = (Mask{1} << weight) - 1;
  const Mask limit = Mask{1} << length;
  while (x < limit) {
    out.push_back(x);
    const Mask c = x & -x;
    const Mask r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  sort_lexicographic(out, length);
  return out;
}

std::vector<Mask> all_strings(int length) {
  std::vector<Mask> out(std::size_t{1} << length);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bit_reverse(i, length);
  return out;
}

LiftMatrix lift(const SymFn& f, LiftKind kind, const Caps& caps) {
  if (f.n() > caps.lift_n) throw CapExceeded("lift", f.n(), caps.lift_n);
  return build(f, kind, f.n(), std::nullopt, 0, all_strings(f.n()));
}

LiftMatrix promise_lift(const SymFn& f, LiftKind kind, int k, int t, const Caps& caps) {
  if (k < 0 || t < 0) throw Error("promise_lift: k and t must be nonnegative");
  if (2 * k + t > f.n()) throw Error("promise_lift: promise needs 2k + t <= n");
  const int length = f.n() - t;
  check_promise_dim(length, k, caps);
  return build(f, kind, length, Promise{k, t}, t, weight_strings(length, k));
}

LiftMatrix and_promise_matrix(const SymFn& g, int length, int k, const Caps& caps) {
  if (g.n() < k) throw Error("and_promise_matrix: g must be defined on 0..k");
  if (length < k) throw Error("and_promise_matrix: weight exceeds length");
  check_promise_dim(length, k, caps);
  return build(g, LiftKind::and_kind, length, Promise{k, 0}, 0, weight_strings(length, k));
}

XorAndIdentity xor_to_and_identity(const SymFn& f, int k, int t, const Caps& caps) {
  XorAndIdentity out;
  out.xor_side = promise_lift(f, LiftKind::xor_kind, k, t, caps);
  std::vector<std::uint8_t> fp(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) fp[static_cast<std::size_t>(i)] = f(2 * k - 2 * i + t) ? 1 : 0;
  // a 0-bit function still needs n >= 1 to be a SymFn; pad the unused weight
  if (k == 0) fp.push_back(0);
  out.f_prime = SymFn(fp);
  out.and_side = and_promise_matrix(out.f_prime, f.n() - t, k, caps);
  const auto& x = out.xor_side.data;
  const auto& a = out.and_side.data;
  out.row_map.resize(x.rows());
  out.col_map.resize(x.cols());
  std::iota(out.row_map.begin(), out.row_map.end(), std::size_t{0});
  std::iota(out.col_map.begin(), out.col_map.end(), std::size_t{0});
  if (out.xor_side.rows != out.and_side.rows || out.xor_side.cols != out.and_side.cols)
    throw Error("xor_to_and_identity: enumerations differ");
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      ++out.entries_checked;
      if (x(i, j) != a(out.row_map[i], out.col_map[j])) ++out.mismatches;
    }
  return out;
}

Mask pad_row(Mask x, int m) {
  const Mask low = low_bits(m);
  return (x & low) | ((~x & low) << m);
}

Mask pad_col(Mask y, int m) {
  const Mask low = low_bits(m);
  return (y & low) | ((~y & low) << (2 * m));
}

PaddingEmbedding padding_embedding(const SymFn& g, const Caps& caps) {
  const int m = g.n();
  if (m > caps.lift_n) throw CapExceeded("padding_embedding", m, caps.lift_n);
  const LiftMatrix small = lift(g, LiftKind::and_kind, caps);
  const LiftMatrix big = and_promise_matrix(g, 3 * m, m, caps);
  PaddingEmbedding out;
  out.m = m;
  for (Mask x : small.rows) {
    const Mask px = pad_row(x, m);
    if (popcount(px) != m) ++out.weight_violations;
    out.row_images.push_back(px);
    out.row_index.push_back(index_of(big.rows, px, 3 * m));
  }
  for (Mask y : small.cols) {
    const Mask py = pad_col(y, m);
    if (popcount(py) != m) ++out.weight_violations;
    out.col_images.push_back(py);
    out.col_index.push_back(index_of(big.cols, py, 3 * m));
  }
  for (std::size_t i = 0; i < small.rows.size(); ++i)
    for (std::size_t j = 0; j < small.cols.size(); ++j) {
      ++out.pairs_checked;
      if (popcount(small.rows[i] & small.cols[j]) != popcount(out.row_images[i] & out.col_images[j]))
        ++out.intersection_mismatches;
      if (small.data(i, j) != big.data(out.row_index[i], out.col_index[j])) ++out.entry_mismatches;
    }
  return out;
}

MatrixStats matrix_stats(const Matrix<int>& m, const Caps& caps) {
  MatrixStats out;
  out.rank = exact_rank(m);
  if (m.rows() == 0 || m.cols() == 0) return out;
  const std::size_t eigen_dim = std::size_t{1} << caps.eigen_n;
  if (m.cols() > eigen_dim || m.rows() > eigen_dim)
    throw CapExceeded("matrix_stats eigensolver dimension", static_cast<int>(std::max(m.rows(), m.cols())),
                      static_cast<int>(eigen_dim));
  out.singular_values = singular_values(m.cast<double>());
  double sq = 0;
  for (double s : out.singular_values) {
    out.trace_norm += s;
    sq += s * s;
  }
  out.frobenius = std::sqrt(sq);
  out.spectral = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  return out;
}

MatrixStats matrix_stats(const LiftMatrix& m, const Caps& caps) {
  if (!m.full_xor()) return matrix_stats(m.data, caps);
  const int n = m.length;
  const LevelSpectrum ls = level_spectrum(m.source);
  const SpectralStats st = spectral_stats(ls);
  MatrixStats out;
  out.analytic = true;
  out.rank = exact_rank(m.data, static_cast<std::size_t>(st.mon));
  const double scale = std::ldexp(1.0, n);
  for (int k = 0; k <= n; ++k) {
    const double v = scale * std::fabs(ls.levels[static_cast<std::size_t>(k)].get_d());
    out.singular_values.insert(out.singular_values.end(), binomial_u64(n, k), v);
  }
  std::sort(out.singular_values.begin(), out.singular_values.end(), std::greater<>());
  out.trace_norm = Rational(pow2(n) * st.l1).get_d();
  out.spectral = Rational(pow2(n) * st.linf).get_d();
  double sq = 0;
  for (double s : out.singular_values) sq += s * s;
  out.frobenius = std::sqrt(sq);
  return out;
}

std::int64_t XorSpectrumCertificate::spectral() const {
  std::int64_t best = 0;
  for (auto v : eigenvalues) best = std::max(best, v < 0 ? -v : v);
  return best;
}

std::int64_t XorSpectrumCertificate::trace_norm() const {
  std::int64_t sum = 0;
  for (auto v : eigenvalues) sum += v < 0 ? -v : v;
  return sum;
}

XorSpectrumCertificate certify_xor_spectrum(const LiftMatrix& m) {
  if (!m.full_xor()) throw Error("certify_xor_spectrum: needs a full xor lift");
  const std::size_t dim = m.rows.size();
  const std::size_t words = (dim + 63) / 64;
  // column j of the bitsets is the column whose string is m.cols[j]
  std::vector<std::uint64_t> row_bits(dim * words, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (m.data(i, j)) row_bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  XorSpectrumCertificate out;
  out.verified = true;
  out.eigenvalues.assign(dim, 0);
  std::vector<std::uint64_t> neg(words);
  for (Mask s = 0; s < dim; ++s) {
    std::fill(neg.begin(), neg.end(), 0);
    for (std::size_t j = 0; j < dim; ++j)
      if (character(s, m.cols[j]) < 0) neg[j / 64] |= std::uint64_t{1} << (j % 64);
    std::int64_t lambda = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t ones = 0, negative = 0;
      for (std::size_t w = 0; w < words; ++w) {
        ones += std::popcount(row_bits[i * words + w]);
        negative += std::popcount(row_bits[i * words + w] & neg[w]);
      }
      const std::int64_t value = ones - 2 * negative;  // (F chi_S)(x_i)
      const int chi = character(s, m.rows[i]);
      if (i == 0) lambda = value * chi;
      else if (value != lambda * chi) out.verified = false;
    }
    out.eigenvalues[s] = lambda;
  }
  return out;
}

Rational trace_rank_bound(const Rational& trace_norm_eps, std::uint64_t dim, const Rational& eps) {
  if (dim == 0) return 0;
  const Rational q = trace_norm_eps / (Rational(dim) * (1 + eps));
  return q * q;
}

Rational trace_rank_bound(const LiftMatrix& m, const Rational& eps, const Caps& caps) {
  if (!m.data.square()) throw Error("trace_rank_bound: matrix is not square");
  if (!m.full_xor()) throw Error("trace_rank_bound: eps-trace norm is available for full xor lifts only");
  const Rational trace_eps = pow2(m.length) * approx_l1(m.source, eps, caps).value;
  return trace_rank_bound(trace_eps, m.rows.size(), eps);
}

double trace_witness_bound(const Matrix<double>& m, const Matrix<double>& psi, double eps) {
  if (m.rows() != psi.rows() || m.cols() != psi.cols())
    throw Error("trace_witness_bound: shape mismatch");
  double inner = 0, l1 = 0;
  bool zero = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      inner += m(i, j) * psi(i, j);
      l1 += std::fabs(psi(i, j));
      if (psi(i, j) != 0.0) zero = false;
    }
  if (zero) return 0.0;
  const double norm = singular_values(psi).front();
  return (inner - eps * l1) / norm;
}

Matrix<double> xor_dual_witness(const SymFn& f, const Rational& eps, const Caps& caps) {
  const DualWitness dual = approx_l1_dual(expand(f, caps), eps, caps);
  const auto strings = all_strings(f.n());
  Matrix<double> out(strings.size(), strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = 0; j < strings.size(); ++j)
      out(i, j) = dual.psi[strings[i] ^ strings[j]].get_d();
  return out;
}

Matrix<int> sign_matrix(const LiftMatrix& m) {
  Matrix<int> out(m.data.rows(), m.data.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m.data(i, j) ? 1 : -1;
  return out;
}

double forster_bound(const Matrix<int>& sign, const Caps& caps) {
  if (!sign.square()) throw Error("forster_bound: matrix is not square");
  for (int v : sign.data())
    if (v != 1 && v != -1) throw Error("forster_bound: entries must be +1 or -1");
  if (sign.rows() == 0) return 0.0;
  if (sign.rows() > (std::size_t{1} << caps.eigen_n))
    throw CapExceeded("forster_bound", static_cast<int>(sign.rows()), 1 << caps.eigen_n);
  return static_cast<double>(sign.rows()) / singular_values(sign.cast<double>()).front();
}

bool FtoFReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const FtoFItem& i) { return i.pass; });
}

FtoFReport ftoF_check(const SymFn& f, const Rational& eps, const Caps& caps, int eps_items_n) {
  if (f.n() > 8) throw CapExceeded("ftoF_check", f.n(), 8);
  check_eps(eps);
  FtoFReport report;
  report.f = f;
  const int n = f.n();
  const Rational scale = pow2(n);
  const LiftMatrix F = lift(f, LiftKind::xor_kind, caps);
  const LevelSpectrum ls = level_spectrum(f);
  const SpectralStats st = spectral_stats(ls);

  const std::size_t rank = exact_rank(F.data, static_cast<std::size_t>(st.mon));
  report.items.push_back({"a", std::to_string(st.mon), std::to_string(rank), rank == st.mon, "mon = rank"});

  const XorSpectrumCertificate cert = certify_xor_spectrum(F);
  bool matches = cert.verified;
  for (Mask s = 0; s < cert.eigenvalues.size(); ++s)
    if (Rational(cert.eigenvalues[s]) != scale * ls.levels[static_cast<std::size_t>(popcount(s))]) matches = false;
  const Rational spectral(cert.spectral());
  const Rational trace(cert.trace_norm());
  report.items.push_back({"d", to_string(scale * st.linf), to_string(spectral),
                          matches && scale * st.linf == spectral, "2^n linf = spectral norm"});
  report.items.push_back({"e", to_string(scale * st.l1), to_string(trace),
                          matches && scale * st.l1 == trace, "2^n l1 = trace norm"});

  if (n > eps_items_n) return report;

  const ApproxResult level = approx_l1(f, eps, caps);
  const ApproxResult dense = approx_l1_dense(expand(f, caps), eps, caps);
  std::vector<double> phi(dense.witness.size());
  for (std::size_t s = 0; s < phi.size(); ++s) phi[s] = dense.witness[s].get_d();
  fwht_inplace(std::span<double>(phi));
  Matrix<double> approx(F.rows.size(), F.cols.size());
  for (std::size_t i = 0; i < F.rows.size(); ++i)
    for (std::size_t j = 0; j < F.cols.size(); ++j) approx(i, j) = phi[F.rows[i] ^ F.cols[j]];
  double trace_approx = 0;
  for (double s : singular_values(approx)) trace_approx += s;
  const double expected = Rational(scale * level.value).get_d();
  const bool close = std::fabs(trace_approx - expected) <= 1e-9 * std::max(1.0, std::fabs(expected));
  report.items.push_back({"f", to_string(scale * level.value), std::to_string(trace_approx),
                          close && dense.max_error <= eps,
                          "2^n ||f^||_{1,eps} = trace norm of an eps-approximating lift"});

  const MonEpsResult mon_eps = mon_eps_exact(expand(f, caps), eps, caps);
  const Rational rank_bound = trace_rank_bound(scale * level.value, F.rows.size(), eps);
  report.items.push_back({"b", std::to_string(mon_eps.value), to_string(rank_bound),
                          Rational(mon_eps.value) >= rank_bound, "mon_eps >= trace-rank bound"});

  const SignmonResult sm = signmon_exact(expand(f, caps), caps);
  const double forster = forster_bound(sign_matrix(F), caps);
  report.items.push_back({"c", std::to_string(sm.value), std::to_string(forster),
                          static_cast<double>(sm.value) >= forster - 1e-9, "signmon >= Forster bound"});
  return report;
}

std::string to_string(PlanCase c) { return c == PlanCase::small_s ? "small-s" : "large-s"; }

ReductionPlan plan_for_witness(int n, int s) {
  if (n < 1 || s < 1 || s > (n + 1) / 2)
    throw Error("plan_for_witness: need 1 <= s <= ceil(n/2)");
  ReductionPlan p;
  p.n = n;
  p.s = s;
  if (8 * s <= 3 * (n - 1)) {
    p.plan_case = PlanCase::small_s;
    p.t = s % 2 ? 0 : 1;
    p.k = 2 * s / 3;
  } else {
    p.plan_case = PlanCase::large_s;
    const int q = n / 4;
    p.t = (q - s - 1) % 2 == 0 ? q : q - 1;
    // tiny n: floor(n/4) - 1 would be negative, the next value of the right parity is used
    if (p.t < 0) p.t = q + 1;
    p.k = static_cast<int>(std::max<std::int64_t>(0, floor_div(8 * (s - 1) - 2 * n, 12)));
  }
  p.ell = p.k + (p.t - s - 1) / 2;
  return p;
}

PlanInvariants check_plan(const ReductionPlan& p) {
  PlanInvariants v;
  v.parity = ((p.t - p.s - 1) % 2 + 2) % 2 == 0;
  v.k_bound = 4 * p.k <= p.n - p.t;
  v.ell_bound = p.k < 4 || 4 * p.ell <= p.k;
  v.ell_formula = v.parity && 2 * (p.ell - p.k) == p.t - p.s - 1;
  return v;
}

std::optional<ReductionPlan> plan_reduction(const SymFn& f) {
  const Measures m = measures(f);
  const bool reversed = m.r1 > m.r0;
  const SymFn g = reversed ? reverse(f) : f;
  const int n = g.n();
  for (int s = (n + 1) / 2; s >= std::max(1, m.r); --s) {
    if (s + 1 > n) continue;
    if (g(s - 1) == g(s + 1)) continue;
    ReductionPlan p = plan_for_witness(n, s);
    p.reversed = reversed;
    return p;
  }
  return std::nullopt;
}

}  // namespace symspec
