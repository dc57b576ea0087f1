#include "symspec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symspec {

double Spectrum::as_double(Mask s) const {
  return mode == SpectrumMode::exact ? exact[s].get_d() : approx[s];
}

Spectrum wht(const BoolFn& g, SpectrumMode mode, const Caps& caps) {
  Spectrum out;
  out.n = g.n();
  out.mode = mode;
  if (mode == SpectrumMode::exact) {
    if (g.n() > caps.dense_exact_n) throw CapExceeded("wht (exact)", g.n(), caps.dense_exact_n);
    // integer butterfly: |partial sums| <= 2^n
    std::vector<std::int64_t> acc(g.table().begin(), g.table().end());
    fwht_inplace(std::span<std::int64_t>(acc));
    const Rational scale = pow2(-g.n());
    out.exact.reserve(acc.size());
    for (auto v : acc) out.exact.emplace_back(Rational(v) * scale);
  } else {
    if (g.n() > caps.dense_float_n) throw CapExceeded("wht (float)", g.n(), caps.dense_float_n);
    out.approx.assign(g.table().begin(), g.table().end());
    fwht_inplace(std::span<double>(out.approx));
    const double scale = std::ldexp(1.0, -g.n());
    for (auto& v : out.approx) v *= scale;
  }
  return out;
}

Integer krawtchouk(int n, int k, int j) {
  Integer sum = 0;
  for (int m = 0; m <= std::min(k, j); ++m) {
    Integer term = binomial(k, m) * binomial(n - k, j - m);
    if (m & 1) sum -= term;
    else sum += term;
  }
  return sum;
}

std::vector<std::vector<Integer>> krawtchouk_table(int n) {
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(n + 1),
                                          std::vector<Integer>(static_cast<std::size_t>(n + 1)));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) table[k][j] = krawtchouk(n, k, j);
  return table;
}

LevelSpectrum level_spectrum(const SymFn& f) {
  const int n = f.n();
  LevelSpectrum out;
  out.n = n;
  out.levels.assign(static_cast<std::size_t>(n + 1), Rational(0));
  const Rational scale = pow2(-n);
  for (int k = 0; k <= n; ++k) {
    Integer sum = 0;
    for (int j = 0; j <= n; ++j)
      if (f(j)) sum += krawtchouk(n, k, j);
    out.levels[k] = Rational(sum) * scale;
  }
  return out;
}

Rational evaluate_levels(std::span<const Rational> levels, int j) {
  const int n = static_cast<int>(levels.size()) - 1;
  Rational sum = 0;
  for (int k = 0; k <= n; ++k)
    if (sgn(levels[k]) != 0) sum += levels[k] * Rational(krawtchouk(n, j, k));
  return sum;
}

SpectralStats spectral_stats(const LevelSpectrum& s) {
  SpectralStats st;
  st.l1 = 0;
  st.linf = 0;
  for (int k = 0; k <= s.n; ++k) {
    const Rational& c = s.levels[k];
    if (sgn(c) == 0) continue;
    const Rational a = abs(c);
    st.degree = k;
    st.mon += binomial_u64(s.n, k);
    st.l1 += a * Rational(binomial(s.n, k));
    if (a > st.linf) st.linf = a;
  }
  return st;
}

SpectralStats spectral_stats(const Spectrum& s) {
  SpectralStats st;
  st.l1 = 0;
  st.linf = 0;
  if (s.mode == SpectrumMode::exact) {
    for (Mask m = 0; m < s.size(); ++m) {
      const Rational& c = s.exact[m];
      if (sgn(c) == 0) continue;
      const Rational a = abs(c);
      st.degree = std::max(st.degree.value_or(0), popcount(m));
      ++st.mon;
      st.l1 += a;
      if (a > st.linf) st.linf = a;
    }
  } else {
    double l1 = 0, linf = 0;
    for (Mask m = 0; m < s.size(); ++m) {
      const double a = std::fabs(s.approx[m]);
      if (a <= float_zero_tolerance) continue;
      st.degree = std::max(st.degree.value_or(0), popcount(m));
      ++st.mon;
      l1 += a;
      linf = std::max(linf, a);
    }
    st.l1 = Rational(l1);
    st.linf = Rational(linf);
  }
  return st;
}

double log2_rational(const Rational& q) {
  // mpz_get_d_2exp keeps the mantissa in range for huge numerators
  long num_exp = 0, den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, q.get_num().get_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, q.get_den().get_mpz_t());
  return std::log2(std::fabs(num)) - std::log2(den) + static_cast<double>(num_exp - den_exp);
}

std::vector<AfhRow> afh_trend_report(int n_lo, int n_hi, const Caps& caps) {
  if (n_hi > caps.symmetric_lp_n)
    throw CapExceeded("afh_trend_report", n_hi, caps.symmetric_lp_n);
  std::vector<AfhRow> rows;
  for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      const SymFn f = SymFn::from_code(n, code);
      const Measures m = measures(f);
      if (m.r <= 1) continue;
      AfhRow row;
      row.function = f.to_string();
      row.n = n;
      row.r = m.r;
      row.l1 = spectral_stats(level_spectrum(f)).l1;
      row.log_l1 = log2_rational(row.l1);
      row.scale = m.r * std::log2(static_cast<double>(n) / m.r);
      row.ratio = row.scale > 0 ? row.log_l1 / row.scale : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "mask,coefficient\n";
  out.precision(17);
  for (Mask m = 0; m < s.size(); ++m) {
    out << "0x" << std::hex << m << std::dec << ',';
    if (s.mode == SpectrumMode::exact) out << to_string(s.exact[m]);
    else out << s.approx[m];
    out << '\n';
  }
  return out.str();
}

std::string level_csv(const LevelSpectrum& s) {
  std::ostringstream out;
  out << "k,binom,coefficient\n";
  for (int k = 0; k <= s.n; ++k)
    out << k << ',' << binomial(s.n, k).get_str() << ',' << to_string(s.levels[k]) << '\n';
  return out.str();
}

LevelSpectrum sign_form(const LevelSpectrum& s) {
  LevelSpectrum out = s;
  for (auto& c : out.levels) c *= -2;
  out.levels[0] += 1;
  return out;
}

Spectrum sign_form(const Spectrum& s) {
  Spectrum out = s;
  for (auto& c : out.exact) c *= -2;
  for (auto& c : out.approx) c *= -2;
  if (!out.exact.empty()) out.exact[0] += 1;
  if (!out.approx.empty()) out.approx[0] += 1;
  return out;
}

}  // namespace symspec
