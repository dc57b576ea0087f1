#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"
#include "symspec/core.hpp"
#include "symspec/signpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symspec {

enum class FlipSide { parity_below, parity_above };

/// A symmetric function with exactly one index i such that f(i) != f(i+2).
///
/// With flip = i + 2, the function alternates on one side of weight flip-1
/// and is constant on the other, meeting at weight flip-1. even_value is the
/// value the alternating side would take on even weights.
struct OneFlip {
  int n = 0;
  int flip = 2;
  bool even_value = true;
  FlipSide side = FlipSide::parity_below;
};

SymFn one_flip_target(const OneFlip& spec);

/// Recovers the OneFlip description of f; empty unless rho(f) == 1.
std::optional<OneFlip> classify_one_flip(const SymFn& f);

/// An (n+2)-term sign representation of one_flip_target(spec).
///
/// parity_below: with t = flip, sigma = +-1 the parity phase at weight 0 and
/// c the constant value,
///     sigma (2t - margin) chi_[n] - (2c - 1) (chi_1 + ... + chi_n - n),
/// which is sigma (2t - margin) (-1)^w + (2c - 1) 2w on weight w. The first
/// term wins exactly for w < t because 2(t-1) < 2t - margin < 2t, so any
/// margin in (0, 2) works. parity_above is the parity_below polynomial of the
/// reversed function with inputs complemented.
SignPoly one_flip_sign_poly(const OneFlip& spec, const Rational& margin = Rational(1, 10));

/// Sign representation of f with at most (n+2)^rho(f) characters: removes
/// the largest flip j, recurses on the function without it, and multiplies
/// by the one-flip polynomial that is 1 below j and flips the sign of the
/// residue class of j from j on.
SignPoly sign_poly_for(const SymFn& f, const Rational& margin = Rational(1, 10));

struct ConstructionStep {
  SymFn target;
  SymFn reduced;      // the flip at `flip` removed
  SymFn single_flip;  // 1 below flip, sign correction from flip on
  int flip = 0;
};

/// The recursion's steps, outermost first.
std::vector<ConstructionStep> construction_trace(const SymFn& f);

struct Bs92Trial {
  int trial = 0;
  std::uint64_t support = 0;
  double linf_error = 0;
};

struct Bs92Result {
  int n = 0;
  Rational eps;
  Rational l1;
  Rational bound;             // 4 n l1^2 / eps^2
  std::uint64_t samples = 0;  // ceil(bound)
  std::vector<Bs92Trial> trials;
  std::size_t best = 0;
  std::vector<double> best_coeffs;  // dense, indexed by mask
  double median_error = 0;
};

/// Importance-sampled sparse approximator: draws `samples` characters with
/// probability |g^(S)| / l1 and averages l1 * sign(g^(S)) chi_S. Trial i uses
/// seed + i.
Bs92Result bs92_sample(const BoolFn& g, const Rational& eps, int trials, std::uint64_t seed,
                       const Caps& caps = default_caps);
Bs92Result bs92_sample(const SymFn& f, const Rational& eps, int trials, std::uint64_t seed,
                       const Caps& caps = default_caps);

/// Expectation of the sampled coefficient of each chi_S, computed exactly
/// from the sampling distribution.
std::vector<Rational> bs92_expected_coefficients(const BoolFn& g, const Caps& caps = default_caps);

/// "trial,support,linf_error" rows.
std::string bs92_csv(const Bs92Result& r);

}  // namespace symspec
