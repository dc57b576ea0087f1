#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symspec {

using Rational = mpq_class;
using Integer = mpz_class;

/// Subset of [n] or input string, bit i-1 standing for coordinate i.
using Mask = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to work on an instance larger than its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string_view what, int requested, int cap);
  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::string_view message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// (-1)^{|S & x|}
inline int character(Mask subset, Mask x) noexcept {
  return (std::popcount(subset & x) & 1) ? -1 : 1;
}

Integer binomial(int n, int k);
std::uint64_t binomial_u64(int n, int k);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);

/// Accepts "p/q", integers and finite decimals ("0.25").
Rational parse_rational(std::string_view text);

/// Powers of two as exact rationals; exponent may be negative.
Rational pow2(int exponent);

}  // namespace symspec
