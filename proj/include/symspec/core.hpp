#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symspec {

/// A symmetric Boolean function on n bits, stored as its value on each
/// Hamming weight 0..n (little-endian: values()[0] = f(0)).
class SymFn {
 public:
  explicit SymFn(std::vector<std::uint8_t> values);

  /// Parses "000111"-style value strings.
  static SymFn parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(values_.size()) - 1; }
  bool operator()(int weight) const { return values_.at(static_cast<std::size_t>(weight)) != 0; }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  std::string to_string() const;

  /// Index of this function among all 2^{n+1} functions on n bits
  /// (bit j of the code is f(j)).
  std::uint64_t code() const noexcept;
  static SymFn from_code(int n, std::uint64_t code);

  bool operator==(const SymFn&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// A general Boolean function as a truth table; table()[x] = g(x) where bit
/// i-1 of x is the input x_i.
class BoolFn {
 public:
  BoolFn(int n, std::vector<std::uint8_t> table);

  /// Hex digits, most significant first, bit x of the number = g(x).
  static BoolFn parse_hex(int n, std::string_view hex);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(Mask x) const { return table_[x] != 0; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }
  std::string to_hex() const;

  bool operator==(const BoolFn&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

struct Measures {
  int r0 = 0;
  int r1 = 0;
  int r = 0;
  int lambda = 0;
  int rho = 0;
  bool operator==(const Measures&) const = default;
};

Measures measures(const SymFn& f);

/// f'(j) = f(n - j)
SymFn reverse(const SymFn& f);

/// One input fixed to 1: g(j) = f(j + 1) on n - 1 bits.
SymFn restrict_one(const SymFn& f);

/// f_i: values on weights 0..i, as a function on i bits.
SymFn prefix_restrict(const SymFn& f, int i);

BoolFn expand(const SymFn& f, const Caps& caps = default_caps);

/// g'(x) = g(complement of x)
BoolFn complement_inputs(const BoolFn& g);

/// The symmetric function g computes, if g is symmetric.
std::optional<SymFn> as_symmetric(const BoolFn& g);

/// Named families: and, or, parity, maj, const0, const1, mod<m>, threshold<t>.
SymFn named_function(std::string_view name, int n);

}  // namespace symspec
