#include "symspec/common.hpp"

#include <cctype>

namespace symspec {

CapExceeded::CapExceeded(std::string_view what, int requested, int cap)
    : Error(std::string(what) + ": n = " + std::to_string(requested) +
            " exceeds cap " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

ParseError::ParseError(std::string_view message, std::size_t position)
    : Error(std::string(message) + " (at position " + std::to_string(position) +
            ")"),
      position_(position) {}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: out * (n-k+i) is divisible by i
    out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return out;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  std::string s(text);
  auto slash = s.find('/');
  auto dot = s.find('.');
  auto check_digits = [&](std::size_t from, std::size_t to, bool allow_sign) {
    if (from >= to) throw ParseError("expected digits in '" + s + "'", from);
    for (std::size_t i = from; i < to; ++i) {
      if (allow_sign && i == from && (s[i] == '-' || s[i] == '+')) {
        if (to - from == 1) throw ParseError("sign without digits in '" + s + "'", i);
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("unexpected character in '" + s + "'", i);
    }
  };
  if (slash != std::string::npos) {
    check_digits(0, slash, true);
    check_digits(slash + 1, s.size(), false);
    Integer num(s.substr(0, slash).front() == '+' ? s.substr(1, slash - 1)
                                                  : s.substr(0, slash), 10);
    Integer den(s.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'", slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (dot != std::string::npos) {
    check_digits(0, dot, true);
    const std::size_t frac_len = s.size() - dot - 1;
    if (frac_len > 0) check_digits(dot + 1, s.size(), false);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    Integer den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return q;
  }
  check_digits(0, s.size(), true);
  return Rational(Integer(s.front() == '+' ? s.substr(1) : s, 10));
}

Rational pow2(int exponent) {
  Integer p = 1;
  p <<= static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace symspec
