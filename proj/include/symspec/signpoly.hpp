#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace symspec {

/// A real polynomial over characters with exact rational coefficients.
///
/// Two storage forms exist. A symmetric polynomial keeps one coefficient per
/// degree k, standing for that coefficient on every chi_S with |S| = k, so
/// products of symmetric polynomials never materialize 2^n terms. A sparse
/// polynomial keeps explicit (mask, coefficient) pairs. Neither form stores
/// zero coefficients as terms; term_count() counts characters, not levels.
class SignPoly {
 public:
  static SignPoly symmetric(int n, std::vector<Rational> levels);
  static SignPoly sparse(int n, std::map<Mask, Rational> terms);
  static SignPoly constant(int n, const Rational& c);
  /// c * chi_{[n]}
  static SignPoly full_parity(int n, const Rational& c);

  int n() const noexcept { return n_; }
  bool is_symmetric() const noexcept { return symmetric_; }
  const std::vector<Rational>& levels() const;
  const std::map<Mask, Rational>& terms() const;

  /// Number of characters with a nonzero coefficient.
  std::uint64_t term_count() const;

  Rational evaluate(Mask x) const;
  /// Value on any input of Hamming weight j; symmetric form only.
  Rational evaluate_weight(int j) const;

  /// p(complement of x), i.e. chi_S -> (-1)^{|S|} chi_S.
  SignPoly complement_inputs() const;
  SignPoly negated() const;

  /// Explicit (mask, coefficient) terms.
  std::map<Mask, Rational> expanded(const Caps& caps = default_caps) const;

  /// Factors whose product is this polynomial, when it was built as one.
  const std::vector<SignPoly>& factors() const noexcept { return factors_; }

  friend SignPoly operator*(const SignPoly& a, const SignPoly& b);

 private:
  SignPoly(int n, bool symmetric) : n_(n), symmetric_(symmetric) {}

  int n_ = 0;
  bool symmetric_ = true;
  std::vector<Rational> levels_;
  std::map<Mask, Rational> terms_;
  std::vector<SignPoly> factors_;
};

/// Number of pairs (S, T) with |S| = a, |T| = b whose symmetric difference
/// is one fixed set of size c; e_a * e_b = sum_c this * e_c.
Integer level_product_count(int n, int a, int b, int c);

}  // namespace symspec
