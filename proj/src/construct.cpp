#include "symspec/construct.hpp"

#include "symspec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace symspec {

namespace {

bool alternating_value(bool even_value, int w) { return even_value != ((w & 1) != 0); }

void check_one_flip(const OneFlip& spec) {
  if (spec.n < 2) throw Error("one-flip functions need n >= 2");
  if (spec.flip < 2 || spec.flip > spec.n)
    throw Error("one-flip index must lie in [2, n], got " + std::to_string(spec.flip));
}

int largest_flip(const SymFn& f) {
  for (int j = f.n(); j >= 2; --j)
    if (f(j) != f(j - 2)) return j;
  return -1;
}

}  // namespace

SymFn one_flip_target(const OneFlip& spec) {
  check_one_flip(spec);
  const int pivot = spec.flip - 1;
  const bool c = alternating_value(spec.even_value, pivot);
  std::vector<std::uint8_t> v(static_cast<std::size_t>(spec.n + 1));
  for (int w = 0; w <= spec.n; ++w) {
    const bool alternating_side = spec.side == FlipSide::parity_below ? w <= pivot : w >= pivot;
    v[static_cast<std::size_t>(w)] = alternating_side ? alternating_value(spec.even_value, w) : c;
  }
  return SymFn(std::move(v));
}

std::optional<OneFlip> classify_one_flip(const SymFn& f) {
  if (measures(f).rho != 1) return std::nullopt;
  OneFlip spec;
  spec.n = f.n();
  spec.flip = largest_flip(f);
  const int pivot = spec.flip - 1;
  // The alternating side contains pivot and its neighbour that differs from it.
  const bool below_alternates = f(pivot - 1) != f(pivot);
  spec.side = below_alternates ? FlipSide::parity_below : FlipSide::parity_above;
  spec.even_value = (pivot & 1) ? !f(pivot) : f(pivot);
  if (one_flip_target(spec) != f) throw Error("classify_one_flip: inconsistent classification");
  return spec;
}

SignPoly one_flip_sign_poly(const OneFlip& spec, const Rational& margin) {
  check_one_flip(spec);
  if (margin <= 0 || margin >= 2) throw Error("margin must lie in (0, 2)");
  const int n = spec.n;
  if (spec.side == FlipSide::parity_above) {
    const SymFn reversed = reverse(one_flip_target(spec));
    const auto below = classify_one_flip(reversed);
    if (!below || below->side != FlipSide::parity_below)
      throw Error("one_flip_sign_poly: reversal did not produce a parity-below function");
    return one_flip_sign_poly(*below, margin).complement_inputs();
  }
  const int t = spec.flip;
  const int sigma = spec.even_value ? 1 : -1;
  const int c_sign = alternating_value(spec.even_value, spec.flip - 1) ? 1 : -1;
  std::vector<Rational> levels(static_cast<std::size_t>(n + 1), Rational(0));
  levels[static_cast<std::size_t>(n)] += Rational(sigma) * (Rational(2 * t) - margin);
  levels[1] += Rational(-c_sign);
  levels[0] += Rational(c_sign * n);
  return SignPoly::symmetric(n, std::move(levels));
}

std::vector<ConstructionStep> construction_trace(const SymFn& f) {
  std::vector<ConstructionStep> steps;
  SymFn current = f;
  while (measures(current).rho > 1) {
    const int j = largest_flip(current);
    std::vector<std::uint8_t> reduced(current.values());
    for (int i = j; i <= current.n(); ++i)
      reduced[static_cast<std::size_t>(i)] = reduced[static_cast<std::size_t>(i - 2)];
    // 1 at weight j-1, so the alternating side is 1 on the parity class of j-1
    const OneFlip correction{current.n(), j, (j - 1) % 2 == 0, FlipSide::parity_above};
    steps.push_back({current, SymFn(reduced), one_flip_target(correction), j});
    current = SymFn(std::move(reduced));
  }
  return steps;
}

SignPoly sign_poly_for(const SymFn& f, const Rational& margin) {
  const Measures m = measures(f);
  const int n = f.n();
  if (m.rho == 0) {
    const bool constant = f.n() < 1 || f(0) == f(1);
    const Rational c(f(0) ? 1 : -1);
    return constant ? SignPoly::constant(n, c) : SignPoly::full_parity(n, c);
  }
  if (m.rho == 1) return one_flip_sign_poly(*classify_one_flip(f), margin);

  const auto steps = construction_trace(f);
  const SymFn& base = steps.back().reduced;
  SignPoly p = sign_poly_for(base, margin);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    p = p * one_flip_sign_poly(*classify_one_flip(it->single_flip), margin);
  return p;
}

std::vector<Rational> bs92_expected_coefficients(const BoolFn& g, const Caps& caps) {
  const Spectrum s = wht(g, SpectrumMode::exact, caps);
  const Rational l1 = spectral_stats(s).l1;
  std::vector<Rational> out(s.size(), Rational(0));
  if (sgn(l1) == 0) return out;
  for (Mask m = 0; m < s.size(); ++m) {
    const Rational prob = abs(s.exact[m]) / l1;
    out[m] = l1 * prob * Rational(sgn(s.exact[m]));
  }
  return out;
}

Bs92Result bs92_sample(const BoolFn& g, const Rational& eps, int trials, std::uint64_t seed,
                       const Caps& caps) {
  if (eps <= 0 || eps >= Rational(1, 2)) throw Error("bs92_sample: eps must lie in (0, 1/2)");
  if (trials <= 0) throw Error("bs92_sample: trials must be positive");
  const Spectrum s = wht(g, SpectrumMode::exact, caps);
  Bs92Result out;
  out.n = g.n();
  out.eps = eps;
  out.l1 = spectral_stats(s).l1;
  out.bound = Rational(4 * g.n()) * out.l1 * out.l1 / (eps * eps);
  Integer ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), out.bound.get_num().get_mpz_t(), out.bound.get_den().get_mpz_t());
  if (ceil_bound > 100'000'000) throw Error("bs92_sample: more than 1e8 samples per trial required");
  out.samples = ceil_bound.get_ui();

  const std::size_t size = g.size();
  if (sgn(out.l1) == 0) {
    out.best_coeffs.assign(size, 0.0);
    for (int t = 0; t < trials; ++t) out.trials.push_back({t, 0, 0.0});
    return out;
  }

  std::vector<Mask> atoms;
  std::vector<double> cumulative;
  std::vector<int> signs;
  double total = 0;
  for (Mask m = 0; m < size; ++m) {
    if (sgn(s.exact[m]) == 0) continue;
    total += Rational(abs(s.exact[m])).get_d();
    atoms.push_back(m);
    cumulative.push_back(total);
    signs.push_back(sgn(s.exact[m]));
  }
  const double l1 = out.l1.get_d();
  const double weight = l1 / static_cast<double>(out.samples);

  double best_error = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    std::vector<std::int64_t> counts(atoms.size(), 0);
    for (std::uint64_t i = 0; i < out.samples; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      if (it == cumulative.end()) --it;
      const auto a = static_cast<std::size_t>(it - cumulative.begin());
      counts[a] += signs[a];
    }
    std::vector<double> coeffs(size, 0.0);
    std::uint64_t support = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (counts[a] == 0) continue;
      ++support;
      coeffs[atoms[a]] = weight * static_cast<double>(counts[a]);
    }
    std::vector<double> values = coeffs;
    fwht_inplace(std::span<double>(values));  // phi(x) = sum_S c_S chi_S(x)
    double err = 0;
    for (Mask x = 0; x < size; ++x) err = std::max(err, std::fabs(values[x] - (g(x) ? 1.0 : 0.0)));
    out.trials.push_back({t, support, err});
    if (t == 0 || err < best_error) {
      best_error = err;
      out.best = static_cast<std::size_t>(t);
      out.best_coeffs = std::move(coeffs);
    }
  }
  std::vector<double> errors;
  for (const auto& tr : out.trials) errors.push_back(tr.linf_error);
  std::sort(errors.begin(), errors.end());
  const std::size_t mid = errors.size() / 2;
  out.median_error = errors.size() % 2 ? errors[mid] : 0.5 * (errors[mid - 1] + errors[mid]);
  return out;
}

Bs92Result bs92_sample(const SymFn& f, const Rational& eps, int trials, std::uint64_t seed,
                       const Caps& caps) {
  return bs92_sample(expand(f, caps), eps, trials, seed, caps);
}

std::string bs92_csv(const Bs92Result& r) {
  std::ostringstream out;
  out.precision(17);
  out << "trial,support,linf_error\n";
  for (const auto& t : r.trials) out << t.trial << ',' << t.support << ',' << t.linf_error << '\n';
  return out.str();
}

}  // namespace symspec
