#pragma once

// Brute-force reference computations shared by the unit tests. Deliberately
// naive: direct sums over the cube, no transforms.

#include "symspec/core.hpp"

#include <vector>

namespace oracle {

using symspec::Mask;
using symspec::Rational;

inline std::vector<Rational> naive_spectrum(const symspec::BoolFn& g) {
  const Mask size = Mask{1} << g.n();
  std::vector<Rational> out(size);
  for (Mask s = 0; s < size; ++s) {
    long acc = 0;
    for (Mask x = 0; x < size; ++x)
      if (g(x)) acc += symspec::character(s, x);
    out[s] = Rational(acc, static_cast<long>(size));
    out[s].canonicalize();
  }
  return out;
}

inline std::vector<std::uint8_t> values_of(std::initializer_list<int> v) {
  return std::vector<std::uint8_t>(v.begin(), v.end());
}

inline int flips(const symspec::SymFn& f, int step) {
  int count = 0;
  for (int i = 0; i + step <= f.n(); ++i) count += f(i) != f(i + step);
  return count;
}

}  // namespace oracle
