#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"
#include "symspec/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symspec {

enum class SpectrumMode { exact, floating };

/// Dense Fourier spectrum, coefficient of chi_S at index S.
struct Spectrum {
  int n = 0;
  SpectrumMode mode = SpectrumMode::exact;
  std::vector<Rational> exact;  // populated in exact mode
  std::vector<double> approx;   // populated in floating mode

  std::size_t size() const noexcept { return std::size_t{1} << n; }
  double as_double(Mask s) const;
};

/// levels[k] is the common coefficient of every chi_S with |S| = k.
struct LevelSpectrum {
  int n = 0;
  std::vector<Rational> levels;
};

/// Unnormalized butterfly: out[S] = sum_x in[x] chi_S(x). Applying it twice
/// multiplies by 2^n.
template <class T>
void fwht_inplace(std::span<T> data) {
  const std::size_t size = data.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        T a = data[j];
        T b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

Spectrum wht(const BoolFn& g, SpectrumMode mode = SpectrumMode::exact,
             const Caps& caps = default_caps);

/// K_k(j) = sum_m (-1)^m C(k,m) C(n-k, j-m): the sum of chi_S over inputs of
/// weight j, for any fixed S with |S| = k.
Integer krawtchouk(int n, int k, int j);

/// table[k][j] = K_k(j)
std::vector<std::vector<Integer>> krawtchouk_table(int n);

LevelSpectrum level_spectrum(const SymFn& f);

/// Spectrum of the +-1 form (-1)^f = 1 - 2f.
LevelSpectrum sign_form(const LevelSpectrum& s);
Spectrum sign_form(const Spectrum& s);

/// Value at weight j of the symmetric polynomial sum_k levels[k] * e_k,
/// where e_k is the sum of all characters of degree k.
Rational evaluate_levels(std::span<const Rational> levels, int j);

struct SpectralStats {
  std::optional<int> degree;  // empty for the zero function
  std::uint64_t mon = 0;
  Rational l1;
  Rational linf;
};

/// Exact zero tests.
SpectralStats spectral_stats(const LevelSpectrum& s);
/// Exact zero tests in exact mode; |c| <= 1e-10 counts as zero in floating
/// mode, where l1 and linf are the exact values of the double sums.
SpectralStats spectral_stats(const Spectrum& s);

inline constexpr double float_zero_tolerance = 1e-10;

struct AfhRow {
  std::string function;
  int n = 0;
  int r = 0;
  Rational l1;
  double log_l1 = 0;
  double scale = 0;  // r * log2(n / r)
  double ratio = 0;  // log_l1 / scale
};

/// One row per symmetric f with r(f) > 1, for n in [n_lo, n_hi].
std::vector<AfhRow> afh_trend_report(int n_lo, int n_hi, const Caps& caps = default_caps);

/// "mask,coefficient" rows; mask as 0x-prefixed hex.
std::string spectrum_csv(const Spectrum& s);
/// "k,binom,coefficient" rows.
std::string level_csv(const LevelSpectrum& s);

double log2_rational(const Rational& q);

}  // namespace symspec
