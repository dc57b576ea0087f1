#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"
#include "symspec/core.hpp"
#include "symspec/signpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symspec {

enum class Ansatz { symmetric_levels, dense };

struct ApproxResult {
  Rational value;
  /// Level coefficients (symmetric_levels) or one coefficient per mask (dense).
  std::vector<Rational> witness;
  Rational eps;
  Ansatz ansatz = Ansatz::symmetric_levels;
  /// max_x |phi(x) - f(x)|, recomputed exactly from the witness.
  Rational max_error;
};

/// ||f^||_{1,eps}: minimum Fourier L1 norm of an eps-approximator, solved as
/// an exact rational LP over level coefficients. Averaging any approximator
/// over input permutations keeps it an eps-approximator of a symmetric f and
/// cannot raise its L1 norm, so the level ansatz loses nothing.
ApproxResult approx_l1(const SymFn& f, const Rational& eps, const Caps& caps = default_caps);

/// The same quantity with one free coefficient per character (exact LP).
/// `target` holds the 2^n values to approximate.
ApproxResult approx_l1_dense(int n, std::span<const Rational> target, const Rational& eps,
                             const Caps& caps = default_caps);
ApproxResult approx_l1_dense(const BoolFn& g, const Rational& eps,
                             const Caps& caps = default_caps);

/// Optimal solution of the dual program
///   max sum_x psi(x) g(x) - eps * sum_x |psi(x)|  s.t. |sum_x psi(x) chi_S(x)| <= 1,
/// whose value equals ||g^||_{1,eps}.
struct DualWitness {
  Rational value;
  std::vector<Rational> psi;
};
DualWitness approx_l1_dual(const BoolFn& g, const Rational& eps, const Caps& caps = default_caps);

struct MonEpsResult {
  std::uint64_t value = 0;
  std::vector<Mask> support;
  std::vector<Rational> coeffs;
  Rational error;
  std::uint64_t supports_tested = 0;
};

/// Exact mon_eps by support enumeration: ascending size, then lexicographic
/// by mask; the first support whose minimum L-infinity error is <= eps wins.
MonEpsResult mon_eps_exact(const BoolFn& g, const Rational& eps, const Caps& caps = default_caps);
/// Same, for an arbitrary real-valued target given on all 2^n inputs.
MonEpsResult mon_eps_exact(int n, std::span<const Rational> target, const Rational& eps,
                           const Caps& caps = default_caps);

struct LevelSupportResult {
  std::uint64_t value = 0;  // sum of C(n,k) over the chosen levels
  std::vector<int> levels;
  std::vector<Rational> coeffs;  // one per chosen level
  Rational error;
};

/// Upper bound on mon_eps(f): cheapest set of whole levels that supports an
/// eps-approximator.
LevelSupportResult mon_eps_symmetric_upper(const SymFn& f, const Rational& eps,
                                           const Caps& caps = default_caps);

struct SignCertificate {
  SignPoly poly = SignPoly::constant(0, Rational(0));
  Rational margin;
};

struct SignmonResult {
  std::uint64_t value = 0;
  SignCertificate certificate;
  std::uint64_t supports_tested = 0;
};

/// Exact signmon by support enumeration with a margin LP per support:
/// max delta s.t. (2g(x) - 1) phi(x) >= delta, sum |coeffs| <= 1.
SignmonResult signmon_exact(const BoolFn& g, const Caps& caps = default_caps);

struct SignCheck {
  bool ok = false;
  Rational margin;  // min_x |p(x)|
};

/// Strict sign agreement of p with f everywhere: per weight class for a
/// symmetric p, pointwise otherwise.
SignCheck verify_sign(const SignPoly& p, const SymFn& f, const Caps& caps = default_caps);
SignCheck verify_sign(const SignPoly& p, const BoolFn& g);

void check_eps(const Rational& eps);

}  // namespace symspec
